#ifndef FFSQ_AFFINE_HPP
#define FFSQ_AFFINE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ffsq/factor.hpp"
#include "ffsq/field.hpp"
#include "ffsq/hyperoct.hpp"
#include "ffsq/report.hpp"

namespace ffsq {

/// x -> a*x + b on F_{p^2}, a != 0; packed field values over a (p, 2)
/// context. The group has order p^2(p^2-1).
struct AffineMap {
    uint32_t a = 1;
    uint32_t b = 0;
};

/// Cycle type of the map as a permutation of the p^2 field elements:
/// all fixed points for the identity, p cycles of length p for a pure
/// translation, and one fixed point plus (p^2-1)/d cycles of length
/// d = ord(a) otherwise.
Partition affine_cycle_type(const FieldContext& fp2, const AffineMap& m);

/// The same cycle type by explicitly iterating the map on all p^2
/// points. Independent route kept for cross-checks.
Partition affine_cycle_type_orbits(const FieldContext& fp2, const AffineMap& m);

/// The map as a permutation of packed values 0..p^2-1.
std::vector<uint32_t> affine_permutation(const FieldContext& fp2, const AffineMap& m);

/// Census of cycle types over the whole group: N_{lambda^0} = 1,
/// N_{lambda^{p+}} = p^2-1, N_{lambda^{d x}} = p^2 phi(d) for
/// 1 != d | p^2-1. Totals p^2(p^2-1).
std::map<Partition, Int> n_lambda_census(uint32_t p);

/// The limiting density constant
///   c_p = 1/(2^{p^2} p^2 (p^2-1)) + 1/(2^p p^2)
///       + 1/(2^{p^2}(p^2-1)) * sum_{1 != d | p^2-1} 2^{(p^2-1)(d-1)/d} phi(d).
Rat c_p_formula(uint32_t p);

/// #(X_{p^2} cap C_2 wr Aff(F_{p^2})) in closed form:
///   1 + (p^2-1) 2^{p(p-1)} + p^2 sum_{1 != d | p^2-1} phi(d) 2^{(d-1)(p^2-1)/d}.
/// Satisfies xn_cap_count(p) / (2^{p^2} p^2 (p^2-1)) = c_p_formula(p).
Int xn_cap_count(uint32_t p);

/// Same count by the census route: sum_lambda N_lambda prod_j 2^{lambda_j (j-1)}.
Int xn_cap_count_census(uint32_t p);

/// Same count by brute force: every (sign vector, affine map) pair is
/// tested for X_n membership. 2^{p^2} p^2 (p^2-1) pairs, so p = 3 only
/// at the default guard.
Int xn_cap_count_enumerated(uint32_t p, uint64_t max_enum = kDefaultMaxEnum);

/// Exhaustive or sampled mean of b_q over {T^{p^2} + a1 T + a0} with
/// a0, a1 in F_q, q = p^(2 nu); reference c_p, with the binomial density
/// carried alongside for comparison.
DensityReport small_epsilon_experiment(uint32_t p, uint32_t nu, bool monte_carlo = false,
                                       uint64_t samples = 0, uint64_t seed = 0,
                                       uint64_t max_enum = kDefaultMaxEnum, unsigned workers = 1,
                                       uint64_t max_q = kDefaultMaxQ);

/// Exhaustive mean of b_q over {T^(2k+1) + a : a in F_q}; equals
/// (q+1)/(2q) exactly and the report carries that as the reference.
DensityReport first_interval_experiment(const FieldCtxPtr& ctx, uint32_t k,
                                        uint64_t max_enum = kDefaultMaxEnum,
                                        unsigned workers = 1);

}  // namespace ffsq

#endif
