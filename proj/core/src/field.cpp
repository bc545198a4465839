#include "permpoly/field.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace permpoly {

namespace {

constexpr unsigned kMaxDegree = 24;  // p^m <= 2^24 forces m <= 24

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

void idx_to_digits(std::uint64_t idx, std::uint64_t p, unsigned m, Digits& out) {
    for (unsigned i = 0; i < m; ++i) {
        out[i] = idx % p;
        idx /= p;
    }
}

std::uint64_t digits_to_idx(const Digits& d, std::uint64_t p, unsigned m) {
    std::uint64_t idx = 0;
    for (unsigned i = m; i-- > 0;) idx = idx * p + d[i];
    return idx;
}

// Remainder of `f` (degree fdeg, coefficients f[0..fdeg]) modulo the monic
// divisor `g` (degree gdeg), all mod p. Returns true iff the remainder is zero.
bool divides(std::uint64_t p, const std::uint64_t* g, unsigned gdeg,
             std::uint64_t* f, unsigned fdeg) {
    for (unsigned pos = fdeg; pos + 1 > gdeg; --pos) {
        const std::uint64_t c = f[pos];
        if (c == 0) continue;
        for (unsigned i = 0; i <= gdeg; ++i) {
            const std::uint64_t s = (c * g[i]) % p;
            std::uint64_t& slot = f[pos - gdeg + i];
            slot = (slot + p - s) % p;
        }
    }
    for (unsigned i = 0; i < gdeg; ++i)
        if (f[i] != 0) return false;
    return true;
}

// Trial factor search: a monic polynomial of degree m is reducible iff it has
// a monic divisor of degree in [1, m/2].
bool irreducible_by_trial_division(std::uint64_t p, unsigned m,
                                   const std::vector<std::uint64_t>& coeffs) {
    if (m == 1) return true;
    std::uint64_t divisors_of_degree = 1;
    for (unsigned d = 1; 2 * d <= m; ++d) {
        divisors_of_degree *= p;  // p^d candidate divisors
        std::array<std::uint64_t, kMaxDegree + 1> g{};
        std::array<std::uint64_t, kMaxDegree + 1> work{};
        for (std::uint64_t w = 0; w < divisors_of_degree; ++w) {
            std::uint64_t t = w;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            std::copy(coeffs.begin(), coeffs.end(), work.begin());
            if (divides(p, g.data(), d, work.data(), m)) return false;
        }
    }
    return true;
}

}  // namespace

FieldCtxPtr FieldCtx::make(std::uint64_t p, unsigned m, std::uint64_t table_cap) {
    if (!is_prime_u64(p)) throw FieldError("field characteristic must be prime");
    if (m < 1) throw FieldError("extension degree must be at least 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (order > kOrderCap / p) throw FieldError("field order exceeds the implementation cap");
        order *= p;
    }
    if (order > kOrderCap) throw FieldError("field order exceeds the implementation cap");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->order_ = order;
    ctx->find_modulus();
    ctx->find_generator();
    ctx->build_tables(table_cap);
    return ctx;
}

void FieldCtx::find_modulus() {
    // Smallest packed index wins; for m == 1 that is the polynomial x.
    std::vector<std::uint64_t> coeffs(m_ + 1, 0);
    coeffs[m_] = 1;
    for (std::uint64_t v = 0; v < order_; ++v) {
        std::uint64_t t = v;
        for (unsigned i = 0; i < m_; ++i) {
            coeffs[i] = t % p_;
            t /= p_;
        }
        if (irreducible_by_trial_division(p_, m_, coeffs)) {
            modulus_ = coeffs;
            return;
        }
    }
    throw FieldError("no irreducible modulus found");  // unreachable
}

std::uint64_t FieldCtx::raw_mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    Digits da{}, db{}, prod{};
    idx_to_digits(a, p_, m_, da);
    idx_to_digits(b, p_, m_, db);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] += da[i] * db[j];
    }
    for (unsigned i = 0; i < 2 * m_ - 1; ++i) prod[i] %= p_;
    for (unsigned d = 2 * m_ - 2; d + 1 > m_; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m_; ++i) {
            const std::uint64_t s = (c * modulus_[i]) % p_;
            std::uint64_t& slot = prod[d - m_ + i];
            slot = (slot + p_ - s) % p_;
        }
    }
    return digits_to_idx(prod, p_, m_);
}

std::uint64_t FieldCtx::raw_pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = raw_mul(result, base);
        base = raw_mul(base, base);
        e >>= 1;
    }
    return result;
}

void FieldCtx::find_generator() {
    const auto factors = distinct_prime_factors(order_ - 1);
    for (std::uint64_t g = 1; g < order_; ++g) {
        bool primitive = true;
        for (const std::uint64_t f : factors) {
            if (raw_pow(g, (order_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            return;
        }
    }
    throw FieldError("no primitive element found");  // unreachable
}

void FieldCtx::build_tables(std::uint64_t table_cap) {
    if (order_ > table_cap) return;
    exp_.resize(order_ - 1);
    log_.assign(order_, UINT32_MAX);
    std::uint64_t cur = 1;
    for (std::uint64_t e = 0; e + 1 < order_; ++e) {
        exp_[e] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(e);
        cur = raw_mul(cur, generator_);
    }
    assert(cur == 1 && "generator order mismatch");
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint64_t FieldCtx::neg(std::uint64_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        const std::uint64_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
    if (has_tables()) {
        if (a == 0 || b == 0) return 0;
        const std::uint64_t e = log_[a] + std::uint64_t{log_[b]};
        const std::uint64_t n1 = order_ - 1;
        return exp_[e >= n1 ? e - n1 : e];
    }
    return raw_mul(a, b);
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
    if (a == 0) throw FieldError("inverse of zero");
    if (has_tables()) {
        const std::uint64_t n1 = order_ - 1;
        const std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : n1 - l];
    }
    return raw_pow(a, order_ - 2);
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables()) {
        const std::uint64_t n1 = order_ - 1;
        return exp_[(std::uint64_t{log_[a]} * (e % n1)) % n1];
    }
    return raw_pow(a, e);
}

std::uint64_t FieldCtx::frobenius(std::uint64_t a, unsigned i) const {
    i %= m_;
    if (i == 0 || a < 2) return a;
    std::uint64_t e = 1;
    for (unsigned j = 0; j < i; ++j) e *= p_;
    return pow(a, e);
}

std::uint64_t FieldCtx::trace(std::uint64_t x, unsigned base_degree, unsigned r) const {
    if (base_degree == 0 || m_ % base_degree != 0)
        throw FieldError("designated base degree must divide the extension degree");
    const unsigned n = m_ / base_degree;
    if (r == 0 || n % r != 0)
        throw FieldError("subfield degree must divide the relative extension degree");
    const unsigned step = base_degree * r;  // < m whenever the loop body runs
    std::uint64_t acc = x, cur = x;
    for (unsigned i = 1; i < n / r; ++i) {
        cur = frobenius(cur, step);
        acc = add(acc, cur);
    }
    return acc;
}

bool FieldCtx::is_square(std::uint64_t a) const {
    if (p_ == 2) throw FieldError("square test requires odd characteristic");
    if (a == 0) return true;
    if (has_tables()) return (log_[a] & 1) == 0;
    return raw_pow(a, (order_ - 1) / 2) == 1;
}

std::optional<std::uint64_t> FieldCtx::sqrt(std::uint64_t a) const {
    if (p_ == 2) throw FieldError("square root requires odd characteristic");
    if (a == 0) return 0;
    if (has_tables()) {
        const std::uint64_t l = log_[a];
        if (l & 1) return std::nullopt;
        const std::uint64_t y = exp_[l / 2];
        return std::min(y, neg(y));
    }
    for (std::uint64_t y = 1; y < order_; ++y)
        if (raw_mul(y, y) == a) return y;  // ascending scan: first hit is minimal
    return std::nullopt;
}

bool FieldCtx::in_subfield(std::uint64_t a, unsigned d) const {
    if (d == 0 || m_ % d != 0) throw FieldError("no subfield of that degree");
    return frobenius(a, d % m_) == a;
}

std::uint64_t FieldCtx::from_int(std::int64_t v) const {
    const std::int64_t p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> FieldCtx::table_log(std::uint64_t a) const {
    if (!has_tables() || a == 0 || a >= order_) return std::nullopt;
    return log_[a];
}

FieldElement FieldCtx::element(std::uint64_t index) const {
    return FieldElement(*this, index);
}

FieldElement FieldCtx::operator()(std::int64_t v) const {
    return FieldElement(*this, from_int(v));
}

// --- FieldElement -----------------------------------------------------------

namespace {

const FieldCtx& require_ctx(const FieldCtx* ctx) {
    if (ctx == nullptr) throw FieldError("element has no field context");
    return *ctx;
}

const FieldCtx& require_same(const FieldCtx* a, const FieldCtx* b) {
    const FieldCtx& ca = require_ctx(a);
    const FieldCtx& cb = require_ctx(b);
    if (!ca.same_as(cb))
        throw FieldMismatchError("elements of different fields cannot be combined");
    return ca;
}

}  // namespace

FieldElement::FieldElement(const FieldCtx& ctx, std::uint64_t index)
    : ctx_(&ctx), idx_(index) {
    if (index >= ctx.order()) throw FieldError("element index out of range");
}

const FieldCtx& FieldElement::ctx() const { return require_ctx(ctx_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FieldCtx& c = require_same(ctx_, o.ctx_);
    return FieldElement(c, c.add(idx_, o.idx_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FieldCtx& c = require_same(ctx_, o.ctx_);
    return FieldElement(c, c.sub(idx_, o.idx_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FieldCtx& c = require_same(ctx_, o.ctx_);
    return FieldElement(c, c.mul(idx_, o.idx_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const FieldCtx& c = require_same(ctx_, o.ctx_);
    return FieldElement(c, c.mul(idx_, c.inv(o.idx_)));
}

FieldElement FieldElement::operator-() const {
    const FieldCtx& c = require_ctx(ctx_);
    return FieldElement(c, c.neg(idx_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same(ctx_, o.ctx_);
    return idx_ == o.idx_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    const FieldCtx& c = require_ctx(ctx_);
    return FieldElement(c, c.pow(idx_, e));
}

FieldElement FieldElement::inverse() const {
    const FieldCtx& c = require_ctx(ctx_);
    return FieldElement(c, c.inv(idx_));
}

FieldElement FieldElement::frobenius(unsigned i) const {
    const FieldCtx& c = require_ctx(ctx_);
    return FieldElement(c, c.frobenius(idx_, i));
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }
FieldElement pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }
FieldElement frobenius(const FieldElement& a, unsigned i) { return a.frobenius(i); }

FieldElement trace(const FieldElement& a, unsigned base_degree, unsigned r) {
    const FieldCtx& c = a.ctx();
    return FieldElement(c, c.trace(a.index(), base_degree, r));
}

bool is_square(const FieldElement& a) { return a.ctx().is_square(a.index()); }

std::optional<FieldElement> sqrt(const FieldElement& a) {
    const FieldCtx& c = a.ctx();
    const auto y = c.sqrt(a.index());
    if (!y) return std::nullopt;
    return FieldElement(c, *y);
}

QuadIrreducibility quad_discriminant_irreducible(const FieldElement& a,
                                                 const FieldElement& b) {
    const FieldCtx& c = a.ctx();
    const FieldElement four = c(4);
    const FieldElement disc = a * a - four * b;
    return QuadIrreducibility{disc, !is_square(disc)};
}

std::string to_string(const FieldElement& x) {
    const FieldCtx& c = x.ctx();
    return std::to_string(x.index()) + "@F_" + std::to_string(c.characteristic()) +
           "^" + std::to_string(c.degree());
}

}  // namespace permpoly
