#ifndef FFSQ_POLY_HPP
#define FFSQ_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffsq/field.hpp"
#include "ffsq/rational.hpp"

namespace ffsq {

/// Dense univariate polynomial over a FieldContext. Coefficients are packed
/// field values, lowest degree first, with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and no degree (its norm is 0).
/// Immutable in spirit: all operations return new values.
class Poly {
public:
    Poly() = default;
    Poly(const FieldContext* ctx, std::vector<uint32_t> coeffs)
        : ctx_(ctx), c_(std::move(coeffs)) {
        normalize();
    }
    Poly(const FieldCtxPtr& ctx, std::vector<uint32_t> coeffs)
        : Poly(ctx.get(), std::move(coeffs)) {}

    static Poly zero(const FieldContext* ctx) { return Poly(ctx, {}); }
    static Poly constant(const FieldContext* ctx, uint32_t value) { return Poly(ctx, {value}); }
    static Poly one(const FieldContext* ctx) { return constant(ctx, 1); }
    /// value * T^n
    static Poly monomial(const FieldContext* ctx, int n, uint32_t value = 1);

    const FieldContext* ctx() const { return ctx_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of a nonzero polynomial; nullopt for the zero polynomial.
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    /// Degree assuming nonzero (throws otherwise).
    int deg() const;

    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const;
    uint32_t constant_term() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    FieldElement coeff_element(size_t i) const { return {ctx_, coeff(i)}; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const FieldContext* ctx_ = nullptr;
    std::vector<uint32_t> c_;
};

/// quotient and remainder with deg r < deg d; d must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d);
bool divides(const Poly& d, const Poly& f);

/// Monic gcd (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& f);
uint32_t eval(const Poly& f, uint32_t x);
Poly scale(const Poly& f, uint32_t c);
Poly make_monic(const Poly& f);

/// f(-T^2): even-degree coefficients only, result[2i] = (-1)^i f_i.
Poly compose_neg_square(const Poly& f);

/// (-1)^n * f(-T^2) for monic f of degree n; the result is monic of
/// degree 2n.
Poly monic_neg_square(const Poly& f);

/// q^deg f, and 0 for the zero polynomial.
Int norm(const Poly& f);

/// true iff gcd(f, f') is constant; f must be nonzero.
bool is_squarefree(const Poly& f);

/// Total order used for canonical factor sorting: by degree, then by the
/// packed coefficient sequence from the constant term up.
bool canonical_less(const Poly& a, const Poly& b);

// --- text format (CLI interface) -----------------------------------------
// Comma-separated coefficients, constant term first; an element of GF(p^k)
// is written as k colon-separated integers in [0,p), low power of the
// field generator first (a single integer when k = 1).
// Example over GF(9): "0:0,1:0,2:1" is (0) + (1)T + (2+x)T^2.
std::string poly_to_string(const Poly& f);
Poly poly_from_string(const FieldCtxPtr& ctx, const std::string& text);
Poly poly_from_string(const FieldContext* ctx, const std::string& text);

/// Convenience for tests: build a polynomial from small integer
/// coefficients (each reduced into the prime field), constant term first.
Poly poly_from_ints(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs);

}  // namespace ffsq

#endif
