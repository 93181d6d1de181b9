#include "ffsq/twosquares.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffsq {
namespace {

// Euler's criterion for -T modulo P; see header comment. P monic
// irreducible is assumed, not checked.
bool inert_unchecked(const Poly& P) {
    const FieldContext& F = *P.ctx();
    int d = P.deg();
    if (d == 1 && P.coeff(0) == 0) return false;  // P = T, P(-T^2) = -T^2
    Int e = (boost::multiprecision::pow(Int(F.q()), static_cast<unsigned>(d)) - 1) / 2;

    // (-T)^e mod P by square-and-multiply on raw coefficient vectors
    std::vector<uint32_t> base{0, F.neg(1)};
    if (d == 1) {  // -T = -(-P0) = P0 mod P
        base = {P.coeff(0)};
    }
    std::vector<uint32_t> acc{1};
    const std::vector<uint32_t>& mod = P.coeffs();
    auto mulmod = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
        std::vector<uint32_t> r(x.size() + y.size() - 1, 0);
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
        }
        while (r.size() >= mod.size()) {
            uint32_t c = r.back();
            size_t shift = r.size() - mod.size();
            if (c != 0)
                for (size_t j = 0; j + 1 < mod.size(); ++j)
                    r[shift + j] = F.sub(r[shift + j], F.mul(c, mod[j]));
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return r;
    };
    unsigned bits = boost::multiprecision::msb(e) + 1;
    for (unsigned i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(e, i)) acc = mulmod(acc, base);
        if (i + 1 < bits) base = mulmod(base, base);
    }
    // acc is +-1; inert <=> -T is a nonsquare <=> acc = -1
    return acc.size() == 1 && acc[0] == F.neg(1);
}

Poly shift_up(const Poly& f) {  // T * f
    if (f.is_zero()) return f;
    std::vector<uint32_t> c(f.coeffs().size() + 1, 0);
    std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + 1);
    return Poly(f.ctx(), std::move(c));
}

// (A1,B1) * (A2,B2) under the norm form: A = A1 A2 - T B1 B2, B = A1 B2 + A2 B1.
std::pair<Poly, Poly> norm_mul(const std::pair<Poly, Poly>& x, const std::pair<Poly, Poly>& y) {
    return {x.first * y.first - shift_up(x.second * y.second),
            x.first * y.second + y.first * x.second};
}

// Even/odd split of G(S) = E(S^2) + S*O(S^2), then substitute S^2 = -T.
std::pair<Poly, Poly> witness_from_split_factor(const Poly& G) {
    const FieldContext* ctx = G.ctx();
    std::vector<uint32_t> even, odd;
    for (size_t i = 0; i < G.coeffs().size(); ++i)
        (i % 2 == 0 ? even : odd).push_back(G.coeffs()[i]);
    auto substitute = [&](std::vector<uint32_t> c) {
        for (size_t i = 1; i < c.size(); i += 2) c[i] = ctx->neg(c[i]);
        return Poly(ctx, std::move(c));
    };
    return {substitute(std::move(even)), substitute(std::move(odd))};
}

}  // namespace

bool is_inert_prime(const Poly& P) {
    if (P.is_zero() || !P.is_monic() || P.deg() < 1 || !is_irreducible(P))
        throw std::invalid_argument("is_inert_prime: input must be monic irreducible");
    return inert_unchecked(P);
}

bool b_q(const Poly& f, uint64_t seed) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("b_q: input must be monic");
    if (f.deg() == 0) return true;
    Factorization fac = factor(f, seed);
    for (const FactorTerm& t : fac.factors)
        if (t.multiplicity % 2 == 1 && inert_unchecked(t.prime)) return false;
    return true;
}

std::optional<Representation> find_representation_bruteforce(const Poly& f, uint64_t max_space) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("find_representation_bruteforce: input must be monic");
    const FieldContext* ctx = f.ctx();
    int n = f.deg();
    int da = n / 2;
    int db = (n - 1) / 2;  // -1 when n = 0: B ranges over {0} only

    auto space_a = checked_pow(ctx->q(), static_cast<uint32_t>(da + 1), max_space);
    uint64_t b_count = 1;
    if (db >= 0) {
        auto space_b = checked_pow(ctx->q(), static_cast<uint32_t>(db + 1), max_space);
        if (!space_b) throw guard_error("find_representation_bruteforce: search space exceeds guard");
        b_count = *space_b;
    }
    if (!space_a || *space_a > max_space / b_count)
        throw guard_error("find_representation_bruteforce: search space exceeds guard");

    BoundedDegRange as(ctx, static_cast<uint32_t>(da), max_space);
    std::optional<BoundedDegRange> bs;
    if (db >= 0) bs.emplace(ctx, static_cast<uint32_t>(db), max_space);
    for (uint64_t ia = 0; ia < as.size(); ++ia) {
        Poly a = as.at(ia);
        Poly a2 = a * a;
        for (uint64_t ib = 0; ib < b_count; ++ib) {
            Poly b = bs ? bs->at(ib) : Poly::zero(ctx);
            if (a2 + shift_up(b * b) == f) return Representation{a, b, f};
        }
    }
    return std::nullopt;
}

std::optional<Representation> find_representation(const Poly& f, uint64_t seed) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("find_representation: input must be monic");
    const FieldContext* ctx = f.ctx();
    std::pair<Poly, Poly> acc{Poly::one(ctx), Poly::zero(ctx)};
    Factorization fac = factor(f, seed);
    for (const FactorTerm& t : fac.factors) {
        std::pair<Poly, Poly> unit;
        uint32_t reps;
        if (t.prime.deg() == 1 && t.prime.coeff(0) == 0) {
            unit = {Poly::zero(ctx), Poly::one(ctx)};  // T = 0^2 + T*1^2
            reps = t.multiplicity;
        } else if (inert_unchecked(t.prime)) {
            if (t.multiplicity % 2 == 1) return std::nullopt;
            unit = {t.prime, Poly::zero(ctx)};
            reps = t.multiplicity / 2;
        } else {
            Factorization gfac = factor(monic_neg_square(t.prime), seed);
            if (gfac.factors.size() != 2)
                throw std::logic_error("find_representation: split prime did not split");
            unit = witness_from_split_factor(gfac.factors[0].prime);
            reps = t.multiplicity;
        }
        for (uint32_t i = 0; i < reps; ++i) acc = norm_mul(acc, unit);
    }
    if (acc.first * acc.first + shift_up(acc.second * acc.second) != f)
        throw std::logic_error("find_representation: constructed witness does not verify");
    return Representation{acc.first, acc.second, f};
}

SignedCycleType signed_frobenius_type(const Poly& f, uint64_t seed) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("signed_frobenius_type: input must be monic");
    if (f.deg() > 0 && f.constant_term() == 0)
        throw std::invalid_argument("signed_frobenius_type: f(0) must be nonzero");
    if (!is_squarefree(f))
        throw std::invalid_argument("signed_frobenius_type: f must be squarefree");
    SignedCycleType type;
    Factorization fac = factor(f, seed);
    for (const FactorTerm& t : fac.factors)
        type.add(static_cast<uint32_t>(t.prime.deg()), inert_unchecked(t.prime) ? -1 : +1);
    return type;
}

bool frobenius_in_Xn(const Poly& f, uint64_t seed) {
    return signed_frobenius_type(f, seed).all_plus();
}

}  // namespace ffsq
