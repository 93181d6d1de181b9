#ifndef FFSQ_RATIONAL_HPP
#define FFSQ_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// 2^e for nonnegative e.
Int pow2(uint64_t e);

/// Euler totient of n >= 1 (trial division; n fits easily at our scales).
uint64_t totient(uint64_t n);

/// All divisors of n >= 1, ascending.
std::vector<uint64_t> divisors(uint64_t n);

/// Prime factors of n >= 2, ascending, without multiplicity.
std::vector<uint64_t> prime_factors(uint64_t n);

/// Moebius function of n >= 1.
int moebius(uint64_t n);

/// Decimal rendering of a rational with the given number of significant
/// digits (round half away from zero). Pure integer arithmetic, so the
/// result is identical on every platform.
std::string decimal_string(const Rat& x, int significant_digits = 12);

/// Exact rational |a - b|.
inline Rat abs_diff(const Rat& a, const Rat& b) {
    Rat d = a - b;
    return d < 0 ? Rat(-d) : d;
}

/// "num/den" in lowest terms ("7/1" stays "7/1" for schema stability).
std::string rational_string(const Rat& x);

/// Parse "a/b", "a", or a plain decimal like "0.5" into an exact rational.
Rat parse_rational(const std::string& s);

}  // namespace ffsq

#endif
