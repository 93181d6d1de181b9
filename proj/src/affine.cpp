#include "ffsq/affine.hpp"

#include <stdexcept>

#include "ffsq/intervals.hpp"

namespace ffsq {
namespace {

uint64_t multiplicative_order(const FieldContext& F, uint32_t a) {
    if (a == 0) throw std::invalid_argument("multiplicative_order: zero");
    for (uint64_t d : divisors(F.q() - 1))
        if (F.pow(a, d) == 1) return d;
    throw std::logic_error("multiplicative_order: not found");
}

FieldCtxPtr fp2_context(uint32_t p) { return field_new(p, 2); }

}  // namespace

Partition affine_cycle_type(const FieldContext& fp2, const AffineMap& m) {
    if (m.a == 0) throw std::invalid_argument("affine_cycle_type: a must be nonzero");
    uint64_t n = fp2.q();
    Partition lambda;
    lambda.mult.assign(n, 0);
    if (m.a == 1 && m.b == 0) {
        lambda.mult[0] = n;
    } else if (m.a == 1) {
        lambda.mult[fp2.p() - 1] = n / fp2.p();  // p cycles of length p
    } else {
        uint64_t d = multiplicative_order(fp2, m.a);
        lambda.mult[0] = 1;
        lambda.mult[d - 1] += (n - 1) / d;
    }
    return lambda;
}

std::vector<uint32_t> affine_permutation(const FieldContext& fp2, const AffineMap& m) {
    if (m.a == 0) throw std::invalid_argument("affine_permutation: a must be nonzero");
    std::vector<uint32_t> perm(fp2.q());
    for (uint64_t x = 0; x < fp2.q(); ++x)
        perm[x] = fp2.add(fp2.mul(m.a, static_cast<uint32_t>(x)), m.b);
    return perm;
}

Partition affine_cycle_type_orbits(const FieldContext& fp2, const AffineMap& m) {
    std::vector<uint32_t> perm = affine_permutation(fp2, m);
    Partition lambda;
    lambda.mult.assign(fp2.q(), 0);
    std::vector<bool> seen(fp2.q(), false);
    for (uint32_t start = 0; start < fp2.q(); ++start) {
        if (seen[start]) continue;
        uint32_t w = start, len = 0;
        do {
            seen[w] = true;
            w = perm[w];
            ++len;
        } while (w != start);
        ++lambda.mult[len - 1];
    }
    return lambda;
}

std::map<Partition, Int> n_lambda_census(uint32_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("n_lambda_census: p must be an odd prime");
    uint64_t n = static_cast<uint64_t>(p) * p;
    std::map<Partition, Int> census;
    Partition lambda;
    lambda.mult.assign(n, 0);

    lambda.mult[0] = n;  // identity
    census[lambda] = 1;
    lambda.mult[0] = 0;

    lambda.mult[p - 1] = n / p;  // translations
    census[lambda] = Int(n - 1);
    lambda.mult[p - 1] = 0;

    for (uint64_t d : divisors(n - 1)) {
        if (d == 1) continue;
        lambda.mult[0] = 1;
        lambda.mult[d - 1] += (n - 1) / d;
        census[lambda] += Int(n) * totient(d);
        lambda.mult[d - 1] -= (n - 1) / d;
        lambda.mult[0] = 0;
    }
    return census;
}

Rat c_p_formula(uint32_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("c_p_formula: p must be an odd prime");
    uint64_t n = static_cast<uint64_t>(p) * p;  // n = p^2
    Int two_n = pow2(n);
    Rat c = Rat(1, two_n * n * (n - 1));
    c += Rat(1, pow2(p) * n);
    Rat tail = 0;
    for (uint64_t d : divisors(n - 1)) {
        if (d == 1) continue;
        tail += Rat(pow2((n - 1) * (d - 1) / d) * totient(d));
    }
    c += tail / Rat(two_n * (n - 1));
    return c;
}

Int xn_cap_count(uint32_t p) {
    uint64_t n = static_cast<uint64_t>(p) * p;
    Int count = 1 + Int(n - 1) * pow2(static_cast<uint64_t>(p) * (p - 1));
    Int tail = 0;
    for (uint64_t d : divisors(n - 1)) {
        if (d == 1) continue;
        tail += Int(totient(d)) * pow2((d - 1) * (n - 1) / d);
    }
    return count + Int(n) * tail;
}

Int xn_cap_count_census(uint32_t p) {
    // each orbit of length j leaves j-1 free sign choices
    Int count = 0;
    for (auto& [lambda, n_lambda] : n_lambda_census(p)) {
        uint64_t free_signs = 0;
        for (size_t j = 1; j <= lambda.mult.size(); ++j)
            free_signs += lambda.mult[j - 1] * (j - 1);
        count += n_lambda * pow2(free_signs);
    }
    return count;
}

Int xn_cap_count_enumerated(uint32_t p, uint64_t max_enum) {
    uint64_t n = static_cast<uint64_t>(p) * p;
    auto pairs = checked_pow(2, static_cast<uint32_t>(n), max_enum);
    if (!pairs || *pairs > max_enum / (n * (n - 1)))
        throw guard_error("xn_cap_count_enumerated: 2^(p^2) p^2 (p^2-1) exceeds the guard");

    FieldCtxPtr ctx = fp2_context(p);
    Int count = 0;
    SignedPermutation g;
    for (uint32_t a = 1; a < ctx->q(); ++a)
        for (uint32_t b = 0; b < ctx->q(); ++b) {
            g.perm = affine_permutation(*ctx, AffineMap{a, b});
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                g.signs = mask;
                if (in_Xn(g)) ++count;
            }
        }
    return count;
}

DensityReport small_epsilon_experiment(uint32_t p, uint32_t nu, bool monte_carlo,
                                       uint64_t samples, uint64_t seed, uint64_t max_enum,
                                       unsigned workers, uint64_t max_q) {
    if (nu < 1) throw std::invalid_argument("small_epsilon_experiment: nu must be >= 1");
    FieldCtxPtr ctx = field_new(p, 2 * nu, max_q);
    uint32_t n = p * p;
    Interval iv = make_interval_m(Poly::monomial(ctx.get(), static_cast<int>(n)), 1);
    DensityReport r = monte_carlo ? scan_monte_carlo(iv, samples, seed, workers)
                                  : scan_exhaustive(iv, max_enum, workers);
    Rat binom_ref = r.reference;
    r.reference = c_p_formula(p);
    r.extra = {
        {"nu", std::to_string(nu)},
        {"c_p_num", boost::multiprecision::numerator(r.reference).str()},
        {"c_p_den", boost::multiprecision::denominator(r.reference).str()},
        {"binom_ref_num", boost::multiprecision::numerator(binom_ref).str()},
        {"binom_ref_den", boost::multiprecision::denominator(binom_ref).str()},
    };
    return r;
}

DensityReport first_interval_experiment(const FieldCtxPtr& ctx, uint32_t k, uint64_t max_enum,
                                        unsigned workers) {
    if (k < 1) throw std::invalid_argument("first_interval_experiment: k must be >= 1");
    Interval iv = make_interval_m(Poly::monomial(ctx.get(), static_cast<int>(2 * k + 1)), 0);
    DensityReport r = scan_exhaustive(iv, max_enum, workers);
    r.reference = Rat(ctx->q() + 1, 2 * ctx->q());
    return r;
}

}  // namespace ffsq
