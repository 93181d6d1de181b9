#include "ffsq/field.hpp"

#include <algorithm>

#include "ffsq/rational.hpp"

namespace ffsq {
namespace {

// Hard cap independent of the configurable guard: the log/exp tables are
// O(q) and the add table O(q^2), so very large q needs a different design.
constexpr uint64_t kAbsoluteMaxQ = uint64_t{1} << 24;
constexpr uint64_t kAddTableMaxQ = 1024;

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- bootstrap polynomial arithmetic over GF(p) -------------------------
// Used only during context construction (modulus search, generator search)
// before the lookup tables exist. Coefficients low to high.

using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
    ptrim(r);
    return r;
}

// remainder of a mod m, m monic
PVec pmod(PVec a, const PVec& m, uint32_t p) {
    ptrim(a);
    while (a.size() >= m.size()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i + 1 < m.size(); ++i) {
                uint64_t sub = static_cast<uint64_t>(c) * m[i] % p;
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
            }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& m, uint32_t p) {
    return pmod(pmul(a, b, p), m, p);
}

PVec ppowmod(PVec base, uint64_t e, const PVec& m, uint32_t p) {
    PVec r{1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec mb = b;
        // make b monic so pmod applies
        uint32_t lead = mb.back();
        if (lead != 1) {
            // inverse of lead mod p by Fermat
            uint64_t acc = 1, g = lead;
            uint32_t e = p - 2;
            while (e > 0) {
                if (e & 1) acc = acc * g % p;
                g = g * g % p;
                e >>= 1;
            }
            for (auto& c : mb)
                c = static_cast<uint32_t>(static_cast<uint64_t>(c) * acc % p);
        }
        PVec r = pmod(a, mb, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PVec psub(PVec a, const PVec& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

// Rabin test over GF(p): f monic of degree k.
bool pirreducible(const PVec& f, uint32_t p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    PVec x{0, 1};
    // frob[j] = x^(p^j) mod f
    std::vector<PVec> frob(k + 1);
    frob[0] = x;
    for (size_t j = 1; j <= k; ++j) frob[j] = ppowmod(frob[j - 1], p, f, p);
    if (psub(frob[k], x, p) != PVec{}) return false;
    for (uint64_t ell : prime_factors(k)) {
        PVec g = pgcd(psub(frob[k / ell], x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldContext::FieldContext(uint32_t p, uint32_t k, uint64_t max_q) : p_(p), k_(k) {
    if (p % 2 == 0) throw std::invalid_argument("field_new: even characteristic is not supported");
    if (!is_prime_u32(p)) throw std::invalid_argument("field_new: p must be prime");
    if (k < 1) throw std::invalid_argument("field_new: extension degree must be >= 1");

    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > std::min(max_q, kAbsoluteMaxQ))
            throw guard_error("field_new: q = p^k exceeds the size guard");
    }
    q_ = q;

    if (k_ > 1) {
        // lexicographically smallest monic irreducible, coefficients
        // compared low to high: c_0 is the most significant position
        uint64_t count = 1;
        for (uint32_t i = 0; i < k_; ++i) count *= p_;
        PVec candidate(k_ + 1, 0);
        candidate[k_] = 1;
        bool found = false;
        for (uint64_t idx = 0; idx < count && !found; ++idx) {
            uint64_t rest = idx;
            for (uint32_t j = 0; j < k_; ++j) {
                uint64_t weight = 1;
                for (uint32_t t = 0; t < k_ - 1 - j; ++t) weight *= p_;
                candidate[j] = static_cast<uint32_t>(rest / weight);
                rest %= weight;
            }
            if (pirreducible(candidate, p_)) {
                modulus_ = candidate;
                found = true;
            }
        }
        if (!found) throw std::logic_error("field_new: no irreducible modulus found");
    }

    // packed <-> bootstrap multiplication
    auto decode = [&](uint32_t v) {
        PVec c;
        while (v > 0) {
            c.push_back(v % p_);
            v /= p_;
        }
        return c;
    };
    auto encode = [&](const PVec& c) {
        uint32_t v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
        return v;
    };
    auto boot_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        if (k_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
        return encode(pmod(pmul(decode(a), decode(b), p_), modulus_, p_));
    };
    auto boot_pow = [&](uint32_t a, uint64_t e) {
        uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = boot_mul(r, a);
            a = boot_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // smallest packed value generating the multiplicative group
    std::vector<uint64_t> ells = prime_factors(q_ - 1);
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint64_t ell : ells)
            if (boot_pow(g, (q_ - 1) / ell) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("field_new: no generator found");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    uint32_t acc = 1;
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = acc;
        exp_[i + q_ - 1] = acc;
        log_[acc] = static_cast<uint32_t>(i);
        acc = boot_mul(acc, gen_);
    }

    neg_.assign(q_, 0);
    for (uint64_t a = 0; a < q_; ++a) {
        uint32_t v = static_cast<uint32_t>(a), r = 0, mult = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            uint32_t d = v % p_;
            r += ((p_ - d) % p_) * mult;
            v /= p_;
            mult *= p_;
        }
        neg_[a] = r;
    }

    if (q_ <= kAddTableMaxQ) {
        add_.assign(q_ * q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = 0; b <= a; ++b) {
                uint32_t s = add_slow(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
                add_[a * q_ + b] = s;
                add_[b * q_ + a] = s;
            }
    }
}

uint32_t FieldContext::add_slow(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t FieldContext::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t re = e % (q_ - 1);
    uint64_t idx = static_cast<uint64_t>(log_[a]) * re % (q_ - 1);
    return exp_[idx];
}

std::vector<uint32_t> FieldContext::to_coords(uint32_t a) const {
    std::vector<uint32_t> c(k_, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

uint32_t FieldContext::from_coords(const std::vector<uint32_t>& coords) const {
    if (coords.size() > k_) throw std::invalid_argument("from_coords: too many coordinates");
    uint32_t v = 0;
    for (size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= p_) throw std::invalid_argument("from_coords: coordinate out of range");
        v = v * p_ + coords[i];
    }
    return v;
}

std::shared_ptr<const FieldContext> FieldContext::make(uint32_t p, uint32_t k, uint64_t max_q) {
    return std::shared_ptr<const FieldContext>(new FieldContext(p, k, max_q));
}

FieldCtxPtr field_new(uint32_t p, uint32_t k, uint64_t max_q) {
    return FieldContext::make(p, k, max_q);
}

std::vector<FieldElement> enumerate_elements(const FieldCtxPtr& ctx) {
    std::vector<FieldElement> out;
    out.reserve(ctx->q());
    for (uint64_t v = 0; v < ctx->q(); ++v)
        out.emplace_back(ctx.get(), static_cast<uint32_t>(v));
    return out;
}

}  // namespace ffsq
