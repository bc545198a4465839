#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

/// A family constructor was asked for parameters outside its hypothesis
/// (refused unless the caller passes the explicit bypass flag).
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * x * ((x^2 - x + 2) / (x^2 + x + 2))^2 over F_{5^k}, a permutation of the
 * whole field for odd k. The returned map is certified pole-free on the
 * field by enumeration. Even k is refused unless `force` is set (for
 * counterexample exploration); a forced map may be left uncertified.
 */
RationalMap conj1_map(unsigned k, bool force = false);

struct Conj2Family {
    RationalMap map;  // -x * ((x^2 - 2) / (x^2 + 2))^2 over F_{5^{2k}}
    ViewPtr mu;       // mu_{q+1} with q = 5^k
};

/// The mu_{q+1} permutation family, q = 5^k with k even. Pole-freeness is
/// certified on mu. Odd k refused unless forced.
Conj2Family conj2_map(unsigned k, bool force = false);

/**
 * Parameters of the trinomial x + l1*x^{s(5^k-1)+1} + l2*x^{t(5^k-1)+1}
 * over F_{5^{2k}} with 1 <= s, t <= 5^k and l1, l2 in {1, -1}.
 */
struct NihoParams {
    unsigned k = 1;
    std::uint64_t s = 1;
    std::uint64_t t = 1;
    int lambda1 = 1;
    int lambda2 = 1;

    std::uint64_t half_order() const;  // 5^k
    void validate() const;
};

/// Builds the trinomial with duplicate exponents merged, so degenerate
/// parameter choices produce canonical polynomials (s = t with l1 = -l2
/// collapses to x).
SparsePolynomial niho_trinomial(const NihoParams& params, FieldCtxPtr ctx = nullptr);

/// k = 3^{2r-1} + 3^r - 3^{r-1}, the exponent of the trace family at q = 3^r.
std::uint64_t trace_family_k(unsigned r);

/// gamma satisfies (gamma-1)^{(q-1)/2} == gamma^{(q-1)/2} in the given field.
bool trace_gamma_condition(const FieldCtx& ctx, std::uint64_t q, std::uint64_t gamma);

/**
 * Validated parameters of the trace family over F_{3^{2r}}: q = 3^r, n = 2,
 * k = trace_family_k(r), and gamma a nonzero non-one element satisfying the
 * gamma condition (which forces gamma into F_q; that consequence is checked
 * too).
 */
struct TraceFamilyParams {
    unsigned r = 2;
    FieldCtxPtr ctx;       // F_{3^{2r}}
    std::uint64_t q = 9;   // 3^r
    std::uint64_t k = 33;
    std::uint64_t gamma = 0;

    static TraceFamilyParams make(unsigned r, std::uint64_t gamma,
                                  FieldCtxPtr ctx = nullptr);

    TraceMap map() const;
};

/// All maps x + gamma*Tr(x^k) of the family at a given r, one per gamma
/// found by enumerating the whole of F_{3^{2r}} against the condition.
std::vector<TraceMap> trace_family(unsigned r);

/**
 * The unique preimage of `a` under the family map: solves the additive
 * cubic x^3 + (gamma/(1-gamma))^3 (abar-a)^2 x = (a/(1-gamma))^3 as an
 * F_3-linear system on coefficient vectors, then filters candidates by the
 * conjugation constraint xbar - x = abar - a. Exactly one candidate must
 * survive; anything else signals a parameter-validation bug and throws.
 */
std::uint64_t invert_trace_pp(const TraceFamilyParams& params, std::uint64_t a);

/// The five recorded sporadic parameter sets not covered by the family.
enum class ExampleId { E5_1, E5_2, E5_3, E5_4, E5_5 };

struct ExampleSpec {
    ExampleId id;
    const char* name;             // "5.1" ... "5.5"
    std::uint64_t p;
    unsigned j;                   // q = p^j
    unsigned n;
    std::vector<std::uint64_t> ks;
    const char* gamma_condition;  // human-readable
};

const std::vector<ExampleSpec>& example_specs();
const ExampleSpec& example_spec(ExampleId id);
std::optional<ExampleId> parse_example_id(const std::string& text);

bool example_gamma_condition(ExampleId id, const FieldCtx& ctx, std::uint64_t gamma);

/// One TraceMap per (k, gamma) combination of the example, gamma found by
/// enumeration; every combination is reported, none assumed.
std::vector<TraceMap> example_map(ExampleId id);

}  // namespace permpoly
