#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "permpoly/serialize.hpp"
#include "permpoly/subsets.hpp"

namespace permpoly {

using EvalFn = std::function<std::uint64_t(std::uint64_t)>;

/**
 * Verdict of a bijection check. A false verdict always carries a checkable
 * witness: either a collision pair (x1 < x2 with f(x1) == f(x2)) or an
 * element whose image escapes the domain. A true verdict implies the whole
 * domain was evaluated.
 */
struct PermReport {
    bool is_pp = false;
    bool injective = true;
    bool closure_ok = true;  // image inside the domain (vacuous on whole fields)
    std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
    std::optional<std::uint64_t> escape;  // f(escape) lies outside the domain
    std::uint64_t evaluations = 0;
    double ms = 0.0;
    std::string map_descriptor;
    std::string field_descriptor;
    std::string domain_descriptor;

    /// The 7-key report object {field, map, domain, is_pp, witness, evals, ms}.
    std::string to_json() const;
};

/**
 * Injectivity (and, on views, closure) check over the domain in ascending
 * index order, using an occupancy table of preimages. With early_abort the
 * scan stops at the first collision or escape — expected O(sqrt(N))
 * evaluations to refute a random non-bijection.
 */
PermReport is_permutation(const EvalFn& f, const EvalDomain& domain,
                          std::string map_descriptor, bool early_abort = true);

/// Full-scan subset check reporting closure and injectivity separately
/// (both verdicts exact, first witnesses recorded).
PermReport permutes_subset(const EvalFn& f, const ViewPtr& view,
                           std::string map_descriptor);

/// Image size and multiplicity histogram (how many outputs are hit once,
/// twice, ...). The histogram weights sum to |domain|.
struct ValueSetProfile {
    std::uint64_t domain_size = 0;
    std::uint64_t image_size = 0;
    std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;
    std::string map_descriptor;
    std::string domain_descriptor;
};

ValueSetProfile value_set_profile(const EvalFn& f, const EvalDomain& domain,
                                  std::string map_descriptor);

// Conveniences for the concrete map types.
template <typename MapT>
PermReport is_permutation(const MapT& map, const EvalDomain& domain,
                          bool early_abort = true) {
    return is_permutation([&map](std::uint64_t x) { return map.eval(x); }, domain,
                          describe(map), early_abort);
}

template <typename MapT>
PermReport permutes_subset(const MapT& map, const ViewPtr& view) {
    return permutes_subset([&map](std::uint64_t x) { return map.eval(x); }, view,
                           describe(map));
}

template <typename MapT>
ValueSetProfile value_set_profile(const MapT& map, const EvalDomain& domain) {
    return value_set_profile([&map](std::uint64_t x) { return map.eval(x); }, domain,
                             describe(map));
}

}  // namespace permpoly
