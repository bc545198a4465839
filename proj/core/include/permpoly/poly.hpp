#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/subsets.hpp"

namespace permpoly {

/// A rational map's denominator vanished at an input outside its certified
/// domain. Carries the offending element index.
class PoleError : public FieldError {
public:
    PoleError(std::uint64_t at, const std::string& what)
        : FieldError(what), at_(at) {}
    std::uint64_t at() const { return at_; }

private:
    std::uint64_t at_;
};

/**
 * Dense polynomial over a field: coefficient indices, constant term first,
 * trailing zeros trimmed (the zero polynomial has an empty list).
 */
struct DensePolynomial {
    FieldCtxPtr ctx;
    std::vector<std::uint64_t> coeffs;

    static DensePolynomial from_coeffs(FieldCtxPtr ctx, std::vector<std::uint64_t> coeffs);
    /// Build from small integer constants (reduced mod p); handy for the
    /// fixed quadratics like u^2 + u + 1.
    static DensePolynomial from_ints(const FieldCtxPtr& ctx,
                                     std::initializer_list<std::int64_t> ints);

    bool is_zero() const { return coeffs.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    std::uint64_t eval(std::uint64_t x) const;  // Horner
    FieldElement eval(const FieldElement& x) const;
};

DensePolynomial dense_add(const DensePolynomial& a, const DensePolynomial& b);
DensePolynomial dense_mul(const DensePolynomial& a, const DensePolynomial& b);
DensePolynomial dense_neg(const DensePolynomial& a);

/**
 * Quotient of two dense polynomials, evaluated pointwise. A domain may be
 * certified pole-free by enumeration; evaluation anywhere the denominator
 * vanishes throws PoleError.
 */
struct RationalMap {
    DensePolynomial num;
    DensePolynomial den;
    std::optional<EvalDomain> certified_domain;

    static RationalMap make(DensePolynomial num, DensePolynomial den);

    /// Enumerates the domain checking the denominator never vanishes; on
    /// success records the domain and returns true. A false return leaves
    /// the map usable but undeclared.
    bool certify_on(EvalDomain domain);

    std::uint64_t eval(std::uint64_t x) const;
    FieldElement eval(const FieldElement& x) const;
};

/**
 * Sparse polynomial as an (exponent, coefficient) list with exponents
 * strictly increasing and coefficients nonzero. Exponents are plain 64-bit
 * integers, large enough for the Niho shapes s(5^k - 1) + 1 at any order
 * below the cap; evaluation uses the pow ladder (which reduces exponents
 * mod p^m - 1 when tables exist and x != 0).
 */
struct SparsePolynomial {
    FieldCtxPtr ctx;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;  // (exponent, coeff index)

    /// Merges duplicate exponents, drops zero coefficients, sorts ascending.
    static SparsePolynomial from_terms(
        FieldCtxPtr ctx, std::vector<std::pair<std::uint64_t, std::uint64_t>> terms);

    std::uint64_t eval(std::uint64_t x) const;
    FieldElement eval(const FieldElement& x) const;

    /// The functionally equal dense polynomial of degree < order, obtained by
    /// reducing each exponent e >= 1 to 1 + (e-1) mod (order-1). Gives an
    /// independent Horner evaluation path for cross-checking.
    DensePolynomial to_dense_function() const;
};

/**
 * x + gamma * Tr_{q^n/q}(x^k) with q = p^base_degree designated at
 * construction. For n = 2 this is x + gamma * (x^k + xbar^k).
 */
struct TraceMap {
    FieldCtxPtr ctx;
    unsigned base_degree = 0;  // q = p^base_degree
    std::uint64_t k = 0;
    std::uint64_t gamma = 0;

    static TraceMap make(FieldCtxPtr ctx, unsigned base_degree, std::uint64_t k,
                         std::uint64_t gamma);

    unsigned n() const { return ctx->degree() / base_degree; }
    std::uint64_t q() const;

    std::uint64_t eval(std::uint64_t x) const;
    FieldElement eval(const FieldElement& x) const;
};

}  // namespace permpoly
