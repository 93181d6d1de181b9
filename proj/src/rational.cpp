#include "ffsq/rational.hpp"

#include <stdexcept>

namespace ffsq {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int pow2(uint64_t e) {
    Int r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

uint64_t totient(uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    uint64_t result = n;
    uint64_t m = n;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            result -= result / d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<uint64_t> divisors(uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int moebius(uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int sign = 1;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::string decimal_string(const Rat& x, int significant_digits) {
    if (significant_digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    bool negative = num < 0;
    if (negative) num = -num;
    if (num == 0) return "0";

    // Find the decimal exponent: smallest e with num/den < 10^e.
    int exp10 = 0;
    Int lo = num, hi = den;  // invariant: value = (lo/hi) * 10^exp10
    while (lo >= hi * 10) {
        hi *= 10;
        ++exp10;
    }
    while (lo < hi) {
        lo *= 10;
        --exp10;
    }
    // Now 1 <= lo/hi < 10: produce the digit string, rounded.
    Int scaled = lo;
    for (int i = 1; i < significant_digits; ++i) scaled *= 10;
    Int q = scaled / hi, r = scaled % hi;
    if (2 * r >= hi) ++q;  // round half away from zero
    std::string digits = q.str();
    if (static_cast<int>(digits.size()) > significant_digits) {
        // rounding overflowed into one more digit (e.g. 9.99 -> 10.0)
        digits.pop_back();
        ++exp10;
    }
    ++exp10;  // exponent of the first digit: value = 0.digits * 10^exp10

    std::string out;
    if (negative) out += '-';
    if (exp10 >= 1 && exp10 <= significant_digits) {
        out += digits.substr(0, static_cast<size_t>(exp10));
        std::string frac = digits.substr(static_cast<size_t>(exp10));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (exp10 <= 0 && exp10 > -4) {
        out += "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        std::string frac = digits;
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += frac;
    } else {
        // scientific notation
        out += digits.substr(0, 1);
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(exp10 - 1);
    }
    return out;
}

std::string rational_string(const Rat& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_rational: bad decimal: " + s);
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        Int whole = head.empty() ? Int(0) : Int(head);
        Int num = whole * den + (tail.empty() ? Int(0) : Int(tail));
        if (neg) num = -num;
        return Rat(num, den);
    }
    return Rat(Int(s), Int(1));
}

}  // namespace ffsq
