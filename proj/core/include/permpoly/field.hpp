#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpoly {

/// Base class for all arithmetic errors raised by the library.
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two elements from different field contexts were combined.
class FieldMismatchError : public FieldError {
public:
    using FieldError::FieldError;
};

class FieldElement;

/**
 * FieldCtx - a fully specified finite field F_{p^m}.
 *
 * Elements are identified by their index in [0, p^m): the coefficient
 * vector (c_0, ..., c_{m-1}) of the polynomial-basis representation,
 * packed as sum c_i * p^i. Construction is deterministic: the modulus is
 * the monic irreducible of degree m with the smallest packed index
 * (found by trial factor search), and the generator is the element of
 * smallest index with multiplicative order p^m - 1.
 *
 * When the order is at most `table_cap`, exp/log tables over the fixed
 * generator are built so that mul/inv/pow/frobenius are table lookups;
 * above the cap the schoolbook polynomial path is used.
 *
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class FieldCtx {
public:
    /// Hard limit on the field order.
    static constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 24;
    /// Orders up to this get exp/log acceleration tables.
    static constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 20;

    static std::shared_ptr<const FieldCtx> make(std::uint64_t p, unsigned m,
                                                std::uint64_t table_cap = kDefaultTableCap);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    /// Monic modulus polynomial, constant term first, length degree()+1.
    /// For degree-1 fields this is the polynomial x.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    /// Index of the fixed primitive element.
    std::uint64_t generator() const { return generator_; }
    bool has_tables() const { return !exp_.empty(); }

    /// Same field value (identical p, m, modulus); pointer identity shortcut.
    bool same_as(const FieldCtx& other) const {
        return this == &other ||
               (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
    }

    // Index-level arithmetic. All operands and results are element indices.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws FieldError on a == 0
    /// a^e with plain 64-bit exponents (covers exponents up to p^{2m}).
    /// pow(0, 0) == 1.
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// x^{p^i}. The iterate count is reduced mod m, so frobenius(x, m) == x.
    std::uint64_t frobenius(std::uint64_t a, unsigned i) const;

    /**
     * Trace to a subfield with the base designated at call time.
     *
     * With q = p^base_degree and n = m / base_degree, computes
     *   Tr(x) = x + x^{q^r} + x^{q^{2r}} + ... + x^{q^{n-r}},
     * the trace from F_{q^n} onto F_{q^r}. Requires base_degree | m and
     * r | n. r = 1 gives the absolute trace relative to q.
     */
    std::uint64_t trace(std::uint64_t x, unsigned base_degree, unsigned r = 1) const;

    /// Quadratic-character test; 0 reports true. Odd characteristic only.
    bool is_square(std::uint64_t a) const;
    /// Smaller-index square root, or nullopt for a non-square.
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

    /// x lies in F_{p^d} (requires d | m); tested via x^{p^d} == x.
    bool in_subfield(std::uint64_t a, unsigned d) const;

    /// Embed a (possibly negative) integer constant via its residue mod p.
    std::uint64_t from_int(std::int64_t v) const;

    FieldElement element(std::uint64_t index) const;
    FieldElement operator()(std::int64_t v) const;  // element from integer constant

    /// Discrete log of a nonzero element w.r.t. the generator (tables only).
    std::optional<std::uint64_t> table_log(std::uint64_t a) const;

private:
    FieldCtx() = default;

    std::uint64_t raw_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t raw_pow(std::uint64_t a, std::uint64_t e) const;
    void find_modulus();
    void find_generator();
    void build_tables(std::uint64_t table_cap);

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t generator_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[e] = index of generator^e, e in [0, order-2]
    std::vector<std::uint32_t> log_;  // inverse of exp_; log_[0] is a sentinel
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/**
 * One field element: a context reference plus the packed coefficient index.
 * Plain data; freely copyable. Mixing elements of different contexts in one
 * operation throws FieldMismatchError.
 */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldCtx& ctx, std::uint64_t index);

    std::uint64_t index() const { return idx_; }
    const FieldCtx& ctx() const;
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(std::uint64_t e) const;
    FieldElement inverse() const;
    FieldElement frobenius(unsigned i) const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::uint64_t idx_ = 0;
};

// Free functions mirroring the element operations (operate on FieldElement).
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);
FieldElement frobenius(const FieldElement& a, unsigned i);
FieldElement trace(const FieldElement& a, unsigned base_degree, unsigned r = 1);
bool is_square(const FieldElement& a);
std::optional<FieldElement> sqrt(const FieldElement& a);

struct QuadIrreducibility {
    FieldElement discriminant;  // a^2 - 4b
    bool irreducible;           // iff the discriminant is a non-square
};

/// Irreducibility of x^2 + ax + b over an odd-characteristic field via the
/// discriminant criterion.
QuadIrreducibility quad_discriminant_irreducible(const FieldElement& a,
                                                 const FieldElement& b);

std::string to_string(const FieldElement& x);

}  // namespace permpoly
