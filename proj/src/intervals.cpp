#include "ffsq/intervals.hpp"

#include <stdexcept>

#include "ffsq/hyperoct.hpp"
#include "ffsq/parallel.hpp"
#include "ffsq/twosquares.hpp"

namespace ffsq {
namespace {

struct CountState {
    uint64_t hits = 0;
    void merge(const CountState& o) { hits += o.hits; }
};

struct HistState {
    uint64_t skipped = 0;
    std::map<SignedCycleType, uint64_t> counts;
    void merge(const HistState& o) {
        skipped += o.skipped;
        for (auto& [t, c] : o.counts) counts[t] += c;
    }
};

// Stateless per-index generator so that Monte-Carlo sampling is
// independent of the worker partition.
struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint32_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return static_cast<uint32_t>(r % bound);
    }
};

void validate_f0(const Poly& f0) {
    if (f0.is_zero() || !f0.is_monic() || f0.deg() < 1)
        throw std::invalid_argument("interval: f0 must be monic of degree >= 1");
}

DensityReport base_report(const Interval& iv, const std::string& mode) {
    const FieldContext& F = *iv.f0.ctx();
    DensityReport r;
    r.q = F.q();
    r.p = F.p();
    r.k = F.k();
    r.n = iv.f0.deg();
    r.m = static_cast<int>(iv.m);
    r.epsilon = iv.epsilon;
    r.f0 = poly_to_string(iv.f0);
    r.mode = mode;
    r.reference = xn_density_closed_form(static_cast<uint32_t>(iv.f0.deg()));
    return r;
}

}  // namespace

Interval make_interval(const Poly& f0, const Rat& epsilon) {
    validate_f0(f0);
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("interval: epsilon must lie in (0,1)");
    // m = floor(epsilon * n), exactly
    Int num = boost::multiprecision::numerator(epsilon) * f0.deg();
    Int den = boost::multiprecision::denominator(epsilon);
    Interval iv;
    iv.f0 = f0;
    iv.m = static_cast<uint32_t>(num / den);
    iv.epsilon = epsilon;
    return iv;
}

Interval make_interval_m(const Poly& f0, uint32_t m) {
    validate_f0(f0);
    if (static_cast<int>(m) >= f0.deg())
        throw std::invalid_argument("interval: m must be smaller than deg f0");
    Interval iv;
    iv.f0 = f0;
    iv.m = m;
    return iv;
}

uint64_t interval_size(const Interval& iv, uint64_t max_enum) {
    auto sz = checked_pow(iv.f0.ctx()->q(), iv.m + 1, max_enum);
    if (!sz) throw guard_error("interval: q^(m+1) exceeds the enumeration guard");
    return *sz;
}

Poly interval_member(const Interval& iv, uint64_t index) {
    BoundedDegRange hs(iv.f0.ctx(), iv.m);
    return iv.f0 + hs.at(index);
}

DensityReport scan_exhaustive(const Interval& iv, uint64_t max_enum, unsigned workers) {
    uint64_t size = interval_size(iv, max_enum);
    BoundedDegRange hs(iv.f0.ctx(), iv.m, max_enum);
    const Poly& f0 = iv.f0;
    CountState total = parallel_reduce(size, workers, CountState{},
                                       [&](CountState& s, uint64_t i) {
                                           if (b_q(f0 + hs.at(i))) ++s.hits;
                                       });
    DensityReport r = base_report(iv, "exhaustive");
    r.total = size;
    r.hits = total.hits;
    r.mean = Rat(total.hits, size);
    return r;
}

DensityReport scan_monte_carlo(const Interval& iv, uint64_t samples, uint64_t seed,
                               unsigned workers) {
    if (samples < 1) throw std::invalid_argument("scan_monte_carlo: samples must be >= 1");
    const FieldContext& F = *iv.f0.ctx();
    const Poly& f0 = iv.f0;
    uint32_t m = iv.m;
    CountState total = parallel_reduce(
        samples, workers, CountState{}, [&](CountState& s, uint64_t i) {
            SplitMix rng{seed ^ (0x2545f4914f6cdd1dULL * (i + 1))};
            std::vector<uint32_t> h(m + 1);
            for (auto& c : h) c = rng.below(F.q());
            if (b_q(f0 + Poly(f0.ctx(), std::move(h)))) ++s.hits;
        });
    DensityReport r = base_report(iv, "monte_carlo");
    r.total = samples;
    r.hits = total.hits;
    r.mean = Rat(total.hits, samples);
    r.samples = samples;
    r.seed = seed;
    return r;
}

DensityReport global_density(const FieldCtxPtr& ctx, uint32_t n, uint64_t max_enum,
                             unsigned workers) {
    if (n < 1) throw std::invalid_argument("global_density: n must be >= 1");
    // all of M_{n,q} is the interval around T^n with m = n-1
    Interval iv = make_interval_m(Poly::monomial(ctx.get(), static_cast<int>(n)), n - 1);
    return scan_exhaustive(iv, max_enum, workers);
}

SignedTypeHistogram signed_type_histogram(const Interval& iv, uint64_t max_enum,
                                          unsigned workers) {
    uint64_t size = interval_size(iv, max_enum);
    BoundedDegRange hs(iv.f0.ctx(), iv.m, max_enum);
    const Poly& f0 = iv.f0;
    HistState total =
        parallel_reduce(size, workers, HistState{}, [&](HistState& s, uint64_t i) {
            Poly f = f0 + hs.at(i);
            if (f.constant_term() == 0 || !is_squarefree(f)) {
                ++s.skipped;
                return;
            }
            ++s.counts[signed_frobenius_type(f)];
        });

    const FieldContext& F = *iv.f0.ctx();
    SignedTypeHistogram h;
    h.q = F.q();
    h.p = F.p();
    h.k = F.k();
    h.n = iv.f0.deg();
    h.m = static_cast<int>(iv.m);
    h.epsilon = iv.epsilon;
    h.f0 = poly_to_string(iv.f0);
    h.total = size;
    h.skipped = total.skipped;
    h.counts = std::move(total.counts);
    return h;
}

}  // namespace ffsq
