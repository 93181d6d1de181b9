#ifndef FFSQ_TWOSQUARES_HPP
#define FFSQ_TWOSQUARES_HPP

#include <optional>

#include "ffsq/factor.hpp"
#include "ffsq/poly.hpp"
#include "ffsq/signed_type.hpp"

namespace ffsq {

/// A witness f = A^2 + T B^2.
struct Representation {
    Poly a;
    Poly b;
    Poly target;
};

/// Whether the monic irreducible P stays prime under T -> -T^2, i.e.
/// make_monic(P(-T^2)) is irreducible. These are the primes that obstruct
/// representability: a monic f is A^2 + T B^2 exactly when every such
/// prime divides f to even multiplicity.
///
/// Internally decided by the quadratic-character test: for P != T with
/// root w in GF(q^d), P(-T^2) is irreducible iff -w is a nonsquare there,
/// i.e. (-T)^((q^d-1)/2) = -1 mod P. The direct route (build P(-T^2),
/// test irreducibility) is kept in the test suite as the cross-check.
bool is_inert_prime(const Poly& P);

/// The representability indicator: true iff f = A^2 + T B^2 for some
/// A, B. Defined for every monic f (no separability hypothesis); decided
/// from the factorization of f via inert-prime multiplicities.
bool b_q(const Poly& f, uint64_t seed = 0);

/// Exhaustive search for a witness with deg A <= n/2, deg B <= (n-1)/2
/// (complete by degree comparison). Ground-truth oracle for b_q; the
/// search space q^(floor(n/2)+1) * q^(floor((n-1)/2)+1) must stay within
/// `max_space`.
std::optional<Representation> find_representation_bruteforce(
    const Poly& f, uint64_t max_space = kDefaultMaxEnum);

/// Constructive witness via the factorization: each non-inert prime P
/// splits as P(-S^2) = G(S)G(-S), and the even/odd parts of G give a
/// witness for P; witnesses multiply like norms. Returns nullopt exactly
/// when b_q(f) is false. Fast path only; the brute-force search above
/// stays the oracle of record.
std::optional<Representation> find_representation(const Poly& f, uint64_t seed = 0);

/// Signed Frobenius type of a monic squarefree f with f(0) != 0: one pair
/// (deg P, sign) per prime factor P, sign +1 iff P(-T^2) is reducible.
SignedCycleType signed_frobenius_type(const Poly& f, uint64_t seed = 0);

/// True iff every sign in signed_frobenius_type(f) is +1. On its domain
/// this equals b_q(f).
bool frobenius_in_Xn(const Poly& f, uint64_t seed = 0);

}  // namespace ffsq

#endif
