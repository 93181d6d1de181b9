#ifndef FFSQ_FIELD_HPP
#define FFSQ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffsq {

/// Thrown when a computation would exceed a configured resource guard
/// (field size, enumeration size, brute-force search space). The CLI maps
/// this to exit code 2.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr uint64_t kDefaultMaxQ = uint64_t{1} << 20;

class FieldElement;

/// Description of GF(p^k), p an odd prime. Elements are handled as packed
/// values v = sum c_i * p^i with c_i in [0,p) the coordinates with respect
/// to the power basis of the modulus. Immutable after construction; all
/// operations are pure, so contexts can be shared freely across threads.
///
/// Multiplication, inversion, powers and the square test run on discrete
/// log tables built at construction time; addition uses a q x q table for
/// small fields and digit arithmetic otherwise.
class FieldContext {
public:
    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t q() const { return q_; }

    /// Monic degree-k modulus over GF(p), coefficients low to high
    /// (k+1 entries, last one 1). Empty when k == 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// Packed encoding of the multiplicative generator the tables use.
    uint32_t generator() const { return gen_; }

    // -- arithmetic on packed values ------------------------------------
    uint32_t add(uint32_t a, uint32_t b) const {
        if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<size_t>(log_[a]) + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::invalid_argument("FieldContext::inv: zero has no inverse");
        return exp_[q_ - 1 - log_[a]];
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    bool is_square(uint32_t a) const {
        if (a == 0) return true;  // 0 = 0^2
        return log_[a] % 2 == 0;
    }

    // -- packed <-> coordinate vector ------------------------------------
    std::vector<uint32_t> to_coords(uint32_t a) const;
    uint32_t from_coords(const std::vector<uint32_t>& coords) const;

    /// Element from a nonnegative integer < q (identity on packed values).
    uint32_t element(uint64_t packed) const {
        if (packed >= q_) throw std::invalid_argument("FieldContext::element: value out of range");
        return static_cast<uint32_t>(packed);
    }
    /// Image of an integer under Z -> GF(p) -> GF(p^k) (reduces mod p).
    uint32_t from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    static std::shared_ptr<const FieldContext> make(uint32_t p, uint32_t k,
                                                    uint64_t max_q = kDefaultMaxQ);

private:
    FieldContext(uint32_t p, uint32_t k, uint64_t max_q);

    uint32_t add_slow(uint32_t a, uint32_t b) const;

    uint32_t p_ = 0, k_ = 0;
    uint64_t q_ = 0;
    uint32_t gen_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;  // exp_[i] = gen^i, i in [0, 2(q-1))
    std::vector<uint32_t> log_;  // log_[exp_[i]] = i in [0, q-1); log_[0] unused
    std::vector<uint32_t> neg_;
    std::vector<uint32_t> add_;  // q*q table, only for small q
};

using FieldCtxPtr = std::shared_ptr<const FieldContext>;

/// field_new(p, k): context for GF(p^k) with the deterministic modulus
/// (lexicographically smallest monic irreducible of degree k over GF(p),
/// coefficients compared low to high). Rejects even or composite p, k < 1,
/// and q > max_q.
FieldCtxPtr field_new(uint32_t p, uint32_t k, uint64_t max_q = kDefaultMaxQ);

/// Contexts with equal (p, k) are interchangeable: the modulus is
/// deterministic, so packed encodings agree.
inline bool same_field(const FieldContext& a, const FieldContext& b) {
    return a.p() == b.p() && a.k() == b.k();
}

/// Value-semantic element wrapper; ctx must outlive the element.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldContext* ctx, uint32_t value) : ctx_(ctx), value_(value) {}
    FieldElement(const FieldCtxPtr& ctx, uint32_t value) : ctx_(ctx.get()), value_(value) {}

    uint32_t value() const { return value_; }
    const FieldContext* ctx() const { return ctx_; }
    std::vector<uint32_t> coords() const { return ctx_->to_coords(value_); }
    bool is_zero() const { return value_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.ctx_, a.ctx_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.ctx_, a.ctx_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.ctx_, a.ctx_->mul(a.value_, b.value_)};
    }
    FieldElement operator-() const { return {ctx_, ctx_->neg(value_)}; }
    FieldElement inverse() const { return {ctx_, ctx_->inv(value_)}; }
    FieldElement pow(uint64_t e) const { return {ctx_, ctx_->pow(value_, e)}; }
    bool is_square() const { return ctx_->is_square(value_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!a.ctx_ || !b.ctx_ || !same_field(*a.ctx_, *b.ctx_))
            throw std::invalid_argument("FieldElement: mixed field contexts");
    }
    const FieldContext* ctx_ = nullptr;
    uint32_t value_ = 0;
};

/// All q elements in a fixed order (packed value ascending). Stable across
/// runs; exhaustive scans index into this order.
std::vector<FieldElement> enumerate_elements(const FieldCtxPtr& ctx);

}  // namespace ffsq

#endif
