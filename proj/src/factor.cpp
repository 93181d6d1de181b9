#include "ffsq/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ffsq {
namespace {

// --- raw-vector modular arithmetic in GF(q)[T]/(f) ------------------------
// The factoring inner loops work on bare coefficient vectors to keep
// temporaries cheap; Poly wraps the results at the API boundary.

using Vec = std::vector<uint32_t>;

void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
void reduce_mod(const FieldContext& F, Vec& a, const Vec& f) {
    size_t fn = f.size();
    while (a.size() >= fn) {
        uint32_t c = a.back();
        size_t shift = a.size() - fn;
        if (c != 0)
            for (size_t j = 0; j + 1 < fn; ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(c, f[j]));
        a.pop_back();
        trim(a);
    }
}

Vec mulmod(const FieldContext& F, const Vec& a, const Vec& b, const Vec& f) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint32_t ai = a[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ai, b[j]));
    }
    reduce_mod(F, r, f);
    return r;
}

Vec powmod_u64(const FieldContext& F, Vec base, uint64_t e, const Vec& f) {
    Vec r{1};
    reduce_mod(F, base, f);
    while (e > 0) {
        if (e & 1) r = mulmod(F, r, base, f);
        base = mulmod(F, base, base, f);
        e >>= 1;
    }
    return r;
}

Vec powmod_big(const FieldContext& F, Vec base, const Int& e, const Vec& f) {
    Vec r{1};
    reduce_mod(F, base, f);
    if (e == 0) return r;
    unsigned bits = boost::multiprecision::msb(e) + 1;
    Vec acc = std::move(base);
    for (unsigned i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(e, i)) r = mulmod(F, r, acc, f);
        if (i + 1 < bits) acc = mulmod(F, acc, acc, f);
    }
    return r;
}

Vec sub_vec(const FieldContext& F, Vec a, const Vec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    trim(a);
    return a;
}

void make_monic_vec(const FieldContext& F, Vec& a) {
    if (a.empty() || a.back() == 1) return;
    uint32_t li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
}

Vec gcd_vec(const FieldContext& F, Vec a, Vec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic_vec(F, b);
        Vec r = a;
        reduce_mod(F, r, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic_vec(F, a);
    return a;
}

const Vec kX{0, 1};

uint32_t draw_below(std::mt19937_64& rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return static_cast<uint32_t>(r % bound);
}

// Equal-degree splitting: g is a monic product of distinct primes of
// degree d; appends them all to `out`.
void edf(const FieldContext& F, const Vec& g, uint32_t d, std::mt19937_64& rng, std::vector<Vec>& out) {
    if (g.size() - 1 == d) {
        out.push_back(g);
        return;
    }
    Int half = (boost::multiprecision::pow(Int(F.q()), d) - 1) / 2;
    for (;;) {
        Vec u(g.size() - 1);
        for (auto& c : u) c = draw_below(rng, F.q());
        trim(u);
        if (u.empty()) continue;
        Vec w = powmod_big(F, u, half, g);
        Vec h = gcd_vec(F, sub_vec(F, std::move(w), Vec{1}), g);
        if (h.size() > 1 && h.size() < g.size()) {
            Vec rest = g;
            // rest = g / h (exact)
            Vec quot(rest.size() - h.size() + 1, 0);
            for (int top = static_cast<int>(rest.size()) - 1;
                 top >= static_cast<int>(h.size()) - 1; --top) {
                uint32_t c = rest[static_cast<size_t>(top)];
                size_t shift = static_cast<size_t>(top) - (h.size() - 1);
                quot[shift] = c;
                if (c != 0)
                    for (size_t j = 0; j < h.size(); ++j)
                        rest[shift + j] = F.sub(rest[shift + j], F.mul(c, h[j]));
            }
            edf(F, h, d, rng, out);
            edf(F, quot, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::optional<uint64_t> checked_pow(uint64_t q, uint32_t n, uint64_t limit) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    if (r > limit) return std::nullopt;
    return r;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("is_irreducible: input must be monic and nonzero");
    int n = f.deg();
    if (n < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (n == 1) return true;
    const FieldContext& F = *f.ctx();
    const Vec& fv = f.coeffs();

    // frob = T^(q^j) mod f, iterated by raising to the q-th power
    Vec frob = kX;
    std::vector<Vec> at_checkpoint(static_cast<size_t>(n) + 1);
    std::vector<uint64_t> ells = prime_factors(static_cast<uint64_t>(n));
    for (int j = 1; j <= n; ++j) {
        frob = powmod_u64(F, std::move(frob), F.q(), fv);
        for (uint64_t ell : ells)
            if (static_cast<uint64_t>(j) * ell == static_cast<uint64_t>(n))
                at_checkpoint[static_cast<size_t>(j)] = frob;
    }
    if (sub_vec(F, frob, kX) != Vec{}) return false;
    for (uint64_t ell : ells) {
        const Vec& fr = at_checkpoint[static_cast<size_t>(n) / ell];
        Vec g = gcd_vec(F, sub_vec(F, fr, kX), fv);
        if (g.size() != 1) return false;
    }
    return true;
}

Factorization factor(const Poly& f, uint64_t seed, uint64_t trial_space) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("factor: input must be monic and nonzero");
    const FieldContext& F = *f.ctx();
    Factorization result{f, {}};
    if (f.deg() == 0) return result;

    auto push_with_multiplicity = [&](Poly prime, Poly& remaining) {
        uint32_t mult = 0;
        for (;;) {
            auto [q, r] = divmod(remaining, prime);
            if (!r.is_zero()) break;
            remaining = std::move(q);
            ++mult;
        }
        result.factors.push_back({std::move(prime), mult});
    };

    Poly remaining = f;
    bool small = checked_pow(F.q(), static_cast<uint32_t>(f.deg()), trial_space).has_value();
    if (small) {
        // trial division in enumeration order; each divisor found is
        // automatically irreducible
        for (uint32_t d = 1; !remaining.is_zero() && remaining.deg() >= static_cast<int>(2 * d);
             ++d) {
            MonicRange cands(f.ctx(), d, trial_space);
            for (uint64_t i = 0; i < cands.size(); ++i) {
                if (remaining.deg() < static_cast<int>(2 * d)) break;
                Poly cand = cands.at(i);
                if (divides(cand, remaining)) push_with_multiplicity(cand, remaining);
            }
        }
        if (!remaining.is_zero() && remaining.deg() >= 1)
            result.factors.push_back({remaining, 1});
    } else {
        std::mt19937_64 rng(seed);
        Vec rem = remaining.coeffs();
        Vec frob = kX;  // T^(q^d) mod rem
        for (uint32_t d = 1; rem.size() > 1; ++d) {
            if (2 * d > rem.size() - 1) {
                // what is left is a single prime
                result.factors.push_back({Poly(f.ctx(), rem), 1});
                rem = {1};
                break;
            }
            frob = powmod_u64(F, std::move(frob), F.q(), rem);
            Vec g = gcd_vec(F, sub_vec(F, frob, kX), rem);
            if (g.size() > 1) {
                std::vector<Vec> primes;
                edf(F, g, d, rng, primes);
                Poly rem_poly(f.ctx(), rem);
                for (auto& pv : primes) push_with_multiplicity(Poly(f.ctx(), pv), rem_poly);
                rem = rem_poly.coeffs();
                reduce_mod(F, frob, rem);
            }
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorTerm& a, const FactorTerm& b) {
                  return canonical_less(a.prime, b.prime);
              });
    return result;
}

MonicRange::MonicRange(const FieldContext* ctx, uint32_t n, uint64_t max_enum)
    : ctx_(ctx), n_(n) {
    auto sz = checked_pow(ctx_->q(), n, max_enum);
    if (!sz) throw guard_error("enumerate_monic: q^n exceeds the enumeration guard");
    size_ = *sz;
}

Poly MonicRange::at(uint64_t index) const {
    if (index >= size_) throw std::out_of_range("MonicRange::at");
    std::vector<uint32_t> c(static_cast<size_t>(n_) + 1, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        c[i] = static_cast<uint32_t>(index % ctx_->q());
        index /= ctx_->q();
    }
    c[n_] = 1;
    return Poly(ctx_, std::move(c));
}

BoundedDegRange::BoundedDegRange(const FieldContext* ctx, uint32_t m, uint64_t max_enum)
    : ctx_(ctx), m_(m) {
    auto sz = checked_pow(ctx_->q(), m + 1, max_enum);
    if (!sz) throw guard_error("interval enumeration: q^(m+1) exceeds the enumeration guard");
    size_ = *sz;
}

Poly BoundedDegRange::at(uint64_t index) const {
    if (index >= size_) throw std::out_of_range("BoundedDegRange::at");
    std::vector<uint32_t> c(static_cast<size_t>(m_) + 1, 0);
    for (uint32_t i = 0; i <= m_; ++i) {
        c[i] = static_cast<uint32_t>(index % ctx_->q());
        index /= ctx_->q();
    }
    return Poly(ctx_, std::move(c));
}

}  // namespace ffsq
