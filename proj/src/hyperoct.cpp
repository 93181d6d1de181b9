#include "ffsq/hyperoct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ffsq/field.hpp"  // guard_error

namespace ffsq {

void SignedCycleType::canonicalize() { std::sort(pairs.begin(), pairs.end()); }

std::string SignedCycleType::to_string() const {
    std::string out;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(pairs[i].first) + ":" + (pairs[i].second < 0 ? "-1" : "+1");
    }
    return out;
}

SignedPermutation SignedPermutation::identity(uint32_t n) {
    SignedPermutation g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0u);
    return g;
}

std::pair<int, uint32_t> wreath_apply(const SignedPermutation& g, int x, uint32_t w) {
    uint32_t img = g.perm[w];
    return {g.sign(img) * x, img};
}

SignedPermutation wreath_compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("wreath_compose: mismatched degrees");
    uint32_t n = a.n();
    SignedPermutation c;
    c.perm.resize(n);
    std::vector<uint32_t> a_inv(n);
    for (uint32_t i = 0; i < n; ++i) a_inv[a.perm[i]] = i;
    for (uint32_t i = 0; i < n; ++i) c.perm[i] = a.perm[b.perm[i]];
    // xi_c(w) = xi_a(w) * xi_b(a^{-1}(w))
    for (uint32_t w = 0; w < n; ++w) {
        bool minus = ((a.signs >> w) ^ (b.signs >> a_inv[w])) & 1;
        if (minus) c.signs |= uint64_t{1} << w;
    }
    return c;
}

SignedPermutation wreath_inverse(const SignedPermutation& a) {
    uint32_t n = a.n();
    SignedPermutation inv;
    inv.perm.resize(n);
    for (uint32_t i = 0; i < n; ++i) inv.perm[a.perm[i]] = i;
    // xi_inv(w) = xi_a(a(w))
    for (uint32_t w = 0; w < n; ++w)
        if ((a.signs >> a.perm[w]) & 1) inv.signs |= uint64_t{1} << w;
    return inv;
}

bool in_Xn(const SignedPermutation& g) {
    uint32_t n = g.n();
    uint64_t visited = 0;
    for (uint32_t start = 0; start < n; ++start) {
        if ((visited >> start) & 1) continue;
        uint32_t w = start;
        bool odd_minus = false;
        do {
            visited |= uint64_t{1} << w;
            if ((g.signs >> w) & 1) odd_minus = !odd_minus;
            w = g.perm[w];
        } while (w != start);
        if (odd_minus) return false;
    }
    return true;
}

SignedCycleType signed_cycle_type(const SignedPermutation& g) {
    SignedCycleType t;
    uint32_t n = g.n();
    uint64_t visited = 0;
    for (uint32_t start = 0; start < n; ++start) {
        if ((visited >> start) & 1) continue;
        uint32_t w = start, len = 0;
        bool odd_minus = false;
        do {
            visited |= uint64_t{1} << w;
            if ((g.signs >> w) & 1) odd_minus = !odd_minus;
            w = g.perm[w];
            ++len;
        } while (w != start);
        t.pairs.emplace_back(len, odd_minus ? -1 : +1);
    }
    t.canonicalize();
    return t;
}

uint64_t xn_count_enumerated(uint32_t n) {
    if (n < 1 || n > 8) throw guard_error("xn_count_enumerated: n must be in 1..8");
    SignedPermutation g = SignedPermutation::identity(n);
    uint64_t count = 0;
    // permutations in lexicographic one-line order, sign vectors as
    // binary counters
    do {
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            g.signs = mask;
            if (in_Xn(g)) ++count;
        }
    } while (std::next_permutation(g.perm.begin(), g.perm.end()));
    return count;
}

Rat xn_density_closed_form(uint32_t n) {
    if (n < 1) throw std::invalid_argument("xn_density_closed_form: n must be >= 1");
    Int four_n = 1;
    four_n <<= 2 * n;
    return Rat(binomial(2 * n, n), four_n);
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t j = 0; j < mult.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(mult[j]);
    }
    return out + ")";
}

std::vector<Partition> enumerate_partitions(uint32_t n) {
    std::vector<Partition> out;
    Partition current;
    current.mult.assign(n, 0);
    // choose multiplicities of part sizes n, n-1, ..., 1
    auto rec = [&](auto&& self, uint32_t part, uint32_t remaining) -> void {
        if (part == 0) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        if (part == 1) {
            current.mult[0] = remaining;
            out.push_back(current);
            current.mult[0] = 0;
            return;
        }
        for (uint32_t m = 0; m * part <= remaining; ++m) {
            current.mult[part - 1] = m;
            self(self, part - 1, remaining - m * part);
        }
        current.mult[part - 1] = 0;
    };
    if (n > 0) rec(rec, n, n);
    return out;
}

Rat xn_density_partition_sum(uint32_t n) {
    if (n < 1 || n > 40) throw guard_error("xn_density_partition_sum: n must be in 1..40");
    Rat sum = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
        Rat term = 1;
        for (size_t j = 1; j <= lambda.mult.size(); ++j) {
            uint64_t lj = lambda.mult[j - 1];
            if (lj == 0) continue;
            Int denom = factorial(static_cast<unsigned>(lj));
            Int twoj = 2 * static_cast<uint64_t>(j);
            for (uint64_t i = 0; i < lj; ++i) denom *= twoj;
            term /= Rat(denom);
        }
        sum += term;
    }
    return sum;
}

Int cycle_type_count(const Partition& lambda) {
    uint64_t n = lambda.weight();
    if (n == 0) throw std::invalid_argument("cycle_type_count: empty partition");
    if (n > 100000) throw guard_error("cycle_type_count: partition too large");
    Int denom = 1;
    for (size_t j = 1; j <= lambda.mult.size(); ++j) {
        uint64_t lj = lambda.mult[j - 1];
        if (lj == 0) continue;
        denom *= factorial(static_cast<unsigned>(lj));
        for (uint64_t i = 0; i < lj; ++i) denom *= j;
    }
    return factorial(static_cast<unsigned>(n)) / denom;
}

Rat signed_type_probability(const SignedCycleType& t) {
    uint32_t n = t.total();
    if (n == 0) throw std::invalid_argument("signed_type_probability: empty type");
    if (n > 1000) throw guard_error("signed_type_probability: type too large");
    // per length j: lambda_j orbits, lambda_j_plus of them with sign +1
    std::vector<uint64_t> lam(n, 0), lam_plus(n, 0);
    for (auto& [len, sign] : t.pairs) {
        if (len < 1 || len > n) throw std::invalid_argument("signed_type_probability: bad length");
        ++lam[len - 1];
        if (sign > 0) ++lam_plus[len - 1];
    }
    Rat prob = 1;
    for (uint32_t j = 1; j <= n; ++j) {
        uint64_t lj = lam[j - 1];
        if (lj == 0) continue;
        Int denom = factorial(static_cast<unsigned>(lj));
        for (uint64_t i = 0; i < lj; ++i) denom *= j;
        prob /= Rat(denom);
        prob *= Rat(binomial(static_cast<unsigned>(lj), static_cast<unsigned>(lam_plus[j - 1])),
                    pow2(lj));
    }
    return prob;
}

std::vector<SignedCycleType> enumerate_signed_types(uint32_t n) {
    std::vector<SignedCycleType> out;
    for (const Partition& lambda : enumerate_partitions(n)) {
        // independent choice of the number of +1 orbits for each length
        std::vector<size_t> lengths;
        for (size_t j = 1; j <= lambda.mult.size(); ++j)
            if (lambda.mult[j - 1] > 0) lengths.push_back(j);
        std::vector<uint64_t> plus(lengths.size(), 0);
        for (;;) {
            SignedCycleType t;
            for (size_t idx = 0; idx < lengths.size(); ++idx) {
                size_t j = lengths[idx];
                uint64_t lj = lambda.mult[j - 1];
                for (uint64_t i = 0; i < plus[idx]; ++i)
                    t.pairs.emplace_back(static_cast<uint32_t>(j), +1);
                for (uint64_t i = plus[idx]; i < lj; ++i)
                    t.pairs.emplace_back(static_cast<uint32_t>(j), -1);
            }
            t.canonicalize();
            out.push_back(std::move(t));
            // odometer over plus[] with per-digit limit lambda_j
            size_t idx = 0;
            while (idx < lengths.size()) {
                if (++plus[idx] <= lambda.mult[lengths[idx] - 1]) break;
                plus[idx] = 0;
                ++idx;
            }
            if (idx == lengths.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ffsq
