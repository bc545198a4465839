#include "permpoly/poly.hpp"

#include <algorithm>
#include <map>

namespace permpoly {

namespace {

void trim(std::vector<std::uint64_t>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const FieldCtx& require_match(const FieldCtxPtr& ctx, const FieldElement& x) {
    if (!ctx->same_as(x.ctx()))
        throw FieldMismatchError("map and argument belong to different fields");
    return *ctx;
}

}  // namespace

DensePolynomial DensePolynomial::from_coeffs(FieldCtxPtr ctx,
                                             std::vector<std::uint64_t> coeffs) {
    for (const std::uint64_t c : coeffs)
        if (c >= ctx->order()) throw FieldError("coefficient index out of range");
    trim(coeffs);
    return DensePolynomial{std::move(ctx), std::move(coeffs)};
}

DensePolynomial DensePolynomial::from_ints(const FieldCtxPtr& ctx,
                                           std::initializer_list<std::int64_t> ints) {
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(ints.size());
    for (const std::int64_t v : ints) coeffs.push_back(ctx->from_int(v));
    return from_coeffs(ctx, std::move(coeffs));
}

std::uint64_t DensePolynomial::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = ctx->add(ctx->mul(acc, x), coeffs[i]);
    return acc;
}

FieldElement DensePolynomial::eval(const FieldElement& x) const {
    const FieldCtx& c = require_match(ctx, x);
    return FieldElement(c, eval(x.index()));
}

DensePolynomial dense_add(const DensePolynomial& a, const DensePolynomial& b) {
    if (!a.ctx->same_as(*b.ctx)) throw FieldMismatchError("polynomials of different fields");
    std::vector<std::uint64_t> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t ai = i < a.coeffs.size() ? a.coeffs[i] : 0;
        const std::uint64_t bi = i < b.coeffs.size() ? b.coeffs[i] : 0;
        out[i] = a.ctx->add(ai, bi);
    }
    return DensePolynomial::from_coeffs(a.ctx, std::move(out));
}

DensePolynomial dense_mul(const DensePolynomial& a, const DensePolynomial& b) {
    if (!a.ctx->same_as(*b.ctx)) throw FieldMismatchError("polynomials of different fields");
    if (a.is_zero() || b.is_zero()) return DensePolynomial{a.ctx, {}};
    std::vector<std::uint64_t> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] = a.ctx->add(out[i + j], a.ctx->mul(a.coeffs[i], b.coeffs[j]));
    }
    return DensePolynomial::from_coeffs(a.ctx, std::move(out));
}

DensePolynomial dense_neg(const DensePolynomial& a) {
    std::vector<std::uint64_t> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ctx->neg(a.coeffs[i]);
    return DensePolynomial{a.ctx, std::move(out)};
}

RationalMap RationalMap::make(DensePolynomial num, DensePolynomial den) {
    if (!num.ctx->same_as(*den.ctx))
        throw FieldMismatchError("numerator and denominator fields differ");
    if (den.is_zero()) throw FieldError("rational map with zero denominator");
    return RationalMap{std::move(num), std::move(den), std::nullopt};
}

bool RationalMap::certify_on(EvalDomain domain) {
    if (!domain.ctx->same_as(*num.ctx))
        throw FieldMismatchError("certification domain field mismatch");
    const std::uint64_t n = domain.size();
    for (std::uint64_t i = 0; i < n; ++i)
        if (den.eval(domain.at(i)) == 0) return false;
    certified_domain = std::move(domain);
    return true;
}

std::uint64_t RationalMap::eval(std::uint64_t x) const {
    const std::uint64_t d = den.eval(x);
    if (d == 0) throw PoleError(x, "denominator vanishes at input " + std::to_string(x));
    return num.ctx->mul(num.eval(x), num.ctx->inv(d));
}

FieldElement RationalMap::eval(const FieldElement& x) const {
    const FieldCtx& c = require_match(num.ctx, x);
    return FieldElement(c, eval(x.index()));
}

SparsePolynomial SparsePolynomial::from_terms(
    FieldCtxPtr ctx, std::vector<std::pair<std::uint64_t, std::uint64_t>> terms) {
    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& [e, c] : terms) {
        if (c >= ctx->order()) throw FieldError("coefficient index out of range");
        auto [it, inserted] = merged.emplace(e, c);
        if (!inserted) it->second = ctx->add(it->second, c);
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(merged.size());
    for (const auto& [e, c] : merged)
        if (c != 0) out.emplace_back(e, c);
    return SparsePolynomial{std::move(ctx), std::move(out)};
}

std::uint64_t SparsePolynomial::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms) acc = ctx->add(acc, ctx->mul(c, ctx->pow(x, e)));
    return acc;
}

FieldElement SparsePolynomial::eval(const FieldElement& x) const {
    const FieldCtx& c = require_match(ctx, x);
    return FieldElement(c, eval(x.index()));
}

DensePolynomial SparsePolynomial::to_dense_function() const {
    const std::uint64_t n1 = ctx->order() - 1;
    std::vector<std::uint64_t> coeffs(ctx->order(), 0);
    for (const auto& [e, c] : terms) {
        const std::uint64_t red = e == 0 ? 0 : 1 + (e - 1) % n1;
        coeffs[red] = ctx->add(coeffs[red], c);
    }
    return DensePolynomial::from_coeffs(ctx, std::move(coeffs));
}

TraceMap TraceMap::make(FieldCtxPtr ctx, unsigned base_degree, std::uint64_t k,
                        std::uint64_t gamma) {
    if (base_degree == 0 || ctx->degree() % base_degree != 0)
        throw FieldError("trace map base degree must divide the extension degree");
    if (gamma == 0 || gamma >= ctx->order())
        throw FieldError("trace map coefficient gamma must be a nonzero element");
    if (k == 0) throw FieldError("trace map power exponent must be positive");
    return TraceMap{std::move(ctx), base_degree, k, gamma};
}

std::uint64_t TraceMap::q() const {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < base_degree; ++i) out *= ctx->characteristic();
    return out;
}

std::uint64_t TraceMap::eval(std::uint64_t x) const {
    const std::uint64_t t = ctx->trace(ctx->pow(x, k), base_degree, 1);
    return ctx->add(x, ctx->mul(gamma, t));
}

FieldElement TraceMap::eval(const FieldElement& x) const {
    const FieldCtx& c = require_match(ctx, x);
    return FieldElement(c, eval(x.index()));
}

}  // namespace permpoly
