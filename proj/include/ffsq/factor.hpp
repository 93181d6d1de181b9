#ifndef FFSQ_FACTOR_HPP
#define FFSQ_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "ffsq/poly.hpp"

namespace ffsq {

inline constexpr uint64_t kDefaultMaxEnum = 10'000'000;
inline constexpr uint64_t kDefaultTrialDivisionSpace = 10'000;

struct FactorTerm {
    Poly prime;
    uint32_t multiplicity = 0;
};

/// Prime decomposition of a monic polynomial: primes are monic irreducible,
/// pairwise distinct, sorted canonically, and the product of prime^mult
/// equals the input.
struct Factorization {
    Poly input;
    std::vector<FactorTerm> factors;
};

/// Rabin's criterion: f (monic, degree >= 1) is irreducible iff
/// T^(q^n) = T mod f and gcd(T^(q^(n/l)) - T, f) = 1 for every prime l | n.
bool is_irreducible(const Poly& f);

/// Complete factorization of a monic polynomial. Deterministic given the
/// seed: inputs with q^deg below `trial_space` are factored by trial
/// division in enumeration order; larger inputs use distinct-degree
/// splitting followed by seeded equal-degree splitting.
Factorization factor(const Poly& f, uint64_t seed = 0,
                     uint64_t trial_space = kDefaultTrialDivisionSpace);

/// q^n if it stays within `limit`, otherwise nullopt.
std::optional<uint64_t> checked_pow(uint64_t q, uint32_t n, uint64_t limit);

/// Random access view over all q^n monic polynomials of degree n, in a
/// fixed deterministic order (coefficient digits of the index, base q).
/// Borrows the context; the caller keeps it alive.
class MonicRange {
public:
    MonicRange(const FieldContext* ctx, uint32_t n, uint64_t max_enum = kDefaultMaxEnum);
    MonicRange(const FieldCtxPtr& ctx, uint32_t n, uint64_t max_enum = kDefaultMaxEnum)
        : MonicRange(ctx.get(), n, max_enum) {}
    uint64_t size() const { return size_; }
    Poly at(uint64_t index) const;

private:
    const FieldContext* ctx_;
    uint32_t n_;
    uint64_t size_;
};

/// Same, over all polynomials of degree <= m (q^(m+1) of them, the zero
/// polynomial included); the enumeration backing interval scans.
class BoundedDegRange {
public:
    BoundedDegRange(const FieldContext* ctx, uint32_t m, uint64_t max_enum = kDefaultMaxEnum);
    BoundedDegRange(const FieldCtxPtr& ctx, uint32_t m, uint64_t max_enum = kDefaultMaxEnum)
        : BoundedDegRange(ctx.get(), m, max_enum) {}
    uint64_t size() const { return size_; }
    Poly at(uint64_t index) const;

private:
    const FieldContext* ctx_;
    uint32_t m_;
    uint64_t size_;
};

}  // namespace ffsq

#endif
