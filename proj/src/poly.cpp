#include "ffsq/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ffsq {
namespace {

const FieldContext* require_same_ctx(const Poly& a, const Poly& b) {
    const FieldContext* ca = a.ctx();
    const FieldContext* cb = b.ctx();
    if (!ca || !cb) throw std::invalid_argument("Poly: uninitialized context");
    if (!same_field(*ca, *cb)) throw std::invalid_argument("Poly: mixed field contexts");
    return ca;
}

}  // namespace

Poly Poly::monomial(const FieldContext* ctx, int n, uint32_t value) {
    if (n < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<uint32_t> c(static_cast<size_t>(n) + 1, 0);
    c.back() = value;
    return Poly(ctx, std::move(c));
}

int Poly::deg() const {
    if (c_.empty()) throw std::invalid_argument("Poly::deg: zero polynomial has no degree");
    return static_cast<int>(c_.size()) - 1;
}

uint32_t Poly::leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly::leading: zero polynomial");
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    const FieldContext* ctx = require_same_ctx(a, b);
    std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = ctx->add(a.coeff(i), b.coeff(i));
    return Poly(ctx, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldContext* ctx = require_same_ctx(a, b);
    std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = ctx->sub(a.coeff(i), b.coeff(i));
    return Poly(ctx, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldContext* ctx = require_same_ctx(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(ctx);
    std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = ctx->add(c[i + j], ctx->mul(a.c_[i], b.c_[j]));
    }
    return Poly(ctx, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->neg(c_[i]);
    return Poly(ctx_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    return a.c_ == b.c_;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d) {
    const FieldContext* ctx = require_same_ctx(f, d);
    if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<uint32_t> rem = f.coeffs();
    size_t dn = d.coeffs().size();
    if (rem.size() < dn) return {Poly::zero(ctx), f};
    std::vector<uint32_t> quot(rem.size() - dn + 1, 0);
    uint32_t lead_inv = ctx->inv(d.leading());
    int dd = static_cast<int>(dn) - 1;
    for (int top = static_cast<int>(rem.size()) - 1; top >= dd; --top) {
        uint32_t c = ctx->mul(rem[static_cast<size_t>(top)], lead_inv);
        size_t shift = static_cast<size_t>(top - dd);
        quot[shift] = c;
        if (c != 0)
            for (size_t j = 0; j < dn; ++j)
                rem[shift + j] = ctx->sub(rem[shift + j], ctx->mul(c, d.coeffs()[j]));
    }
    return {Poly(ctx, std::move(quot)), Poly(ctx, std::move(rem))};
}

bool divides(const Poly& d, const Poly& f) { return divmod(f, d).second.is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : make_monic(x);
}

Poly derivative(const Poly& f) {
    const FieldContext* ctx = f.ctx();
    if (f.is_zero() || f.coeffs().size() == 1) return Poly::zero(ctx);
    std::vector<uint32_t> c(f.coeffs().size() - 1, 0);
    for (size_t i = 1; i < f.coeffs().size(); ++i) {
        uint32_t factor = ctx->from_int(static_cast<int64_t>(i));
        c[i - 1] = ctx->mul(f.coeffs()[i], factor);
    }
    return Poly(ctx, std::move(c));
}

uint32_t eval(const Poly& f, uint32_t x) {
    const FieldContext* ctx = f.ctx();
    uint32_t acc = 0;
    for (size_t i = f.coeffs().size(); i-- > 0;) acc = ctx->add(ctx->mul(acc, x), f.coeffs()[i]);
    return acc;
}

Poly scale(const Poly& f, uint32_t c) {
    const FieldContext* ctx = f.ctx();
    std::vector<uint32_t> out(f.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = ctx->mul(f.coeffs()[i], c);
    return Poly(ctx, std::move(out));
}

Poly make_monic(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
    if (f.is_monic()) return f;
    return scale(f, f.ctx()->inv(f.leading()));
}

Poly compose_neg_square(const Poly& f) {
    const FieldContext* ctx = f.ctx();
    if (f.is_zero()) return Poly::zero(ctx);
    std::vector<uint32_t> c(2 * (f.coeffs().size() - 1) + 1, 0);
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        c[2 * i] = (i % 2 == 0) ? f.coeffs()[i] : ctx->neg(f.coeffs()[i]);
    return Poly(ctx, std::move(c));
}

Poly monic_neg_square(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("monic_neg_square: input must be monic");
    Poly g = compose_neg_square(f);
    if (f.deg() % 2 != 0) g = -g;
    return g;
}

Int norm(const Poly& f) {
    if (f.is_zero()) return 0;
    Int r = 1;
    for (int i = 0; i < f.deg(); ++i) r *= f.ctx()->q();
    return r;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    Poly g = gcd(f, derivative(f));
    return g.degree() == 0;
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
    return a.coeffs() < b.coeffs();
}

std::string poly_to_string(const Poly& f) {
    const FieldContext* ctx = f.ctx();
    auto element_str = [&](uint32_t v) {
        std::string s;
        auto coords = ctx->to_coords(v);
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ':';
            s += std::to_string(coords[i]);
        }
        return s;
    };
    if (f.is_zero()) return element_str(0);
    std::string out;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += element_str(f.coeffs()[i]);
    }
    return out;
}

Poly poly_from_string(const FieldContext* ctx, const std::string& text) {
    std::vector<uint32_t> coeffs;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::vector<uint32_t> coords;
        std::stringstream ts(token);
        std::string digit;
        while (std::getline(ts, digit, ':')) {
            size_t pos = 0;
            long v;
            try {
                v = std::stol(digit, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("poly_from_string: bad coefficient '" + digit + "'");
            }
            if (pos != digit.size() || v < 0 || static_cast<uint64_t>(v) >= ctx->p())
                throw std::invalid_argument("poly_from_string: coefficient out of range: " + digit);
            coords.push_back(static_cast<uint32_t>(v));
        }
        if (coords.empty() || coords.size() > ctx->k())
            throw std::invalid_argument("poly_from_string: element needs 1.." +
                                        std::to_string(ctx->k()) + " coordinates");
        coeffs.push_back(ctx->from_coords(coords));
    }
    if (coeffs.empty()) throw std::invalid_argument("poly_from_string: empty polynomial text");
    return Poly(ctx, std::move(coeffs));
}

Poly poly_from_string(const FieldCtxPtr& ctx, const std::string& text) {
    return poly_from_string(ctx.get(), text);
}

Poly poly_from_ints(const FieldCtxPtr& ctx, const std::vector<int64_t>& coeffs) {
    std::vector<uint32_t> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = ctx->from_int(coeffs[i]);
    return Poly(ctx.get(), std::move(c));
}

}  // namespace ffsq
