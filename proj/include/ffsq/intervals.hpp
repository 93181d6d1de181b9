#ifndef FFSQ_INTERVALS_HPP
#define FFSQ_INTERVALS_HPP

#include <optional>

#include "ffsq/factor.hpp"
#include "ffsq/poly.hpp"
#include "ffsq/report.hpp"

namespace ffsq {

/// Short interval {f0 + h : deg h <= m} around a monic f0 of degree n;
/// m < n, so every member is monic of degree n. Cardinality q^(m+1).
struct Interval {
    Poly f0;
    uint32_t m = 0;
    std::optional<Rat> epsilon;  // recorded when m was derived as floor(eps*n)
};

Interval make_interval(const Poly& f0, const Rat& epsilon);
Interval make_interval_m(const Poly& f0, uint32_t m);

/// Member for an enumeration index in [0, q^(m+1)); index digits base q
/// are the coefficients of h.
Poly interval_member(const Interval& iv, uint64_t index);
uint64_t interval_size(const Interval& iv, uint64_t max_enum = kDefaultMaxEnum);

/// Exhaustive mean of b_q over the interval; reference binom(2n,n)/4^n.
DensityReport scan_exhaustive(const Interval& iv, uint64_t max_enum = kDefaultMaxEnum,
                              unsigned workers = 1);

/// Seeded uniform sampling of members with replacement; deterministic
/// for a given seed regardless of worker count.
DensityReport scan_monte_carlo(const Interval& iv, uint64_t samples, uint64_t seed,
                               unsigned workers = 1);

/// Mean of b_q over all monic degree-n polynomials (the interval around
/// T^n with m = n-1); reference binom(2n,n)/4^n.
DensityReport global_density(const FieldCtxPtr& ctx, uint32_t n,
                             uint64_t max_enum = kDefaultMaxEnum, unsigned workers = 1);

/// Empirical distribution of signed Frobenius types over the interval
/// members that are squarefree with f(0) != 0; the others are tallied as
/// skipped.
SignedTypeHistogram signed_type_histogram(const Interval& iv, uint64_t max_enum = kDefaultMaxEnum,
                                          unsigned workers = 1);

}  // namespace ffsq

#endif
