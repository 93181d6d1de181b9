#ifndef FFSQ_HYPEROCT_HPP
#define FFSQ_HYPEROCT_HPP

#include <cstdint>
#include <vector>

#include "ffsq/rational.hpp"
#include "ffsq/signed_type.hpp"

namespace ffsq {

/// An element (xi, pi) of the hyperoctahedral group C2 wr S_n, acting on
/// C2 x [n] by (xi,pi).(x,w) = (xi(pi.w) x, pi.w). perm is 0-based
/// (w -> perm[w]); bit w of `signs` set means xi(w) = -1. n <= 64.
struct SignedPermutation {
    std::vector<uint32_t> perm;
    uint64_t signs = 0;

    uint32_t n() const { return static_cast<uint32_t>(perm.size()); }
    int sign(uint32_t w) const { return (signs >> w) & 1 ? -1 : +1; }
    static SignedPermutation identity(uint32_t n);
};

/// Group law, normalized so that the induced permutation of C2 x [n] of
/// the product is the composite of the induced permutations
/// (apply b first, then a).
SignedPermutation wreath_compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation wreath_inverse(const SignedPermutation& a);

/// Action on C2 x [n]; x in {+1,-1}. Used by tests to pin the group law.
std::pair<int, uint32_t> wreath_apply(const SignedPermutation& g, int x, uint32_t w);

/// Membership in X_n: the sign product over every orbit of perm is +1.
bool in_Xn(const SignedPermutation& g);

/// The conjugacy invariant: multiset of (orbit length, orbit sign product).
SignedCycleType signed_cycle_type(const SignedPermutation& g);

/// #X_n by full enumeration of all 2^n n! elements (n <= 8).
uint64_t xn_count_enumerated(uint32_t n);

/// binom(2n, n) / 4^n.
Rat xn_density_closed_form(uint32_t n);

/// sum over partitions of n of prod_j 1/(lambda_j! (2j)^lambda_j); equals
/// the closed form exactly. Guarded at n <= 40.
Rat xn_density_partition_sum(uint32_t n);

/// Cycle type as a multiplicity vector: mult[j-1] parts of size j.
struct Partition {
    std::vector<uint64_t> mult;

    uint64_t weight() const {  // sum j * mult_j
        uint64_t t = 0;
        for (size_t j = 0; j < mult.size(); ++j) t += (j + 1) * mult[j];
        return t;
    }
    uint64_t count(uint32_t part_size) const {
        return part_size >= 1 && part_size <= mult.size() ? mult[part_size - 1] : 0;
    }
    auto operator<=>(const Partition&) const = default;
    std::string to_string() const;
};

std::vector<Partition> enumerate_partitions(uint32_t n);

/// Number of permutations in S_n with the given cycle type:
/// n! / prod_j (lambda_j! j^lambda_j).
Int cycle_type_count(const Partition& lambda);

/// Probability that a uniform element of C2 wr S_n has exactly this
/// signed cycle type:
///   prod_j 1/(lambda_j! j^lambda_j) * binom(lambda_j, lambda_j_plus) / 2^lambda_j,
/// the permutation cycle-type weight times independent fair orbit signs.
Rat signed_type_probability(const SignedCycleType& t);

/// All signed cycle types of total size n, canonically ordered.
std::vector<SignedCycleType> enumerate_signed_types(uint32_t n);

}  // namespace ffsq

#endif
