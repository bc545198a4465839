#pragma once

#include <string>

#include "permpoly/field.hpp"
#include "permpoly/poly.hpp"
#include "permpoly/subsets.hpp"

namespace permpoly {

/// {p, m, modulus coefficient list, generator index} — embedded in every
/// report so a run is reproducible from its output alone.
std::string field_descriptor_json(const FieldCtx& ctx);

/// View summary: kind, size, and the first 8 element indices.
std::string view_summary_json(const SubgroupView& view);

std::string domain_descriptor_json(const EvalDomain& domain);

// Map descriptors: kind tag plus coefficient/exponent lists.
std::string describe(const DensePolynomial& map);
std::string describe(const RationalMap& map);
std::string describe(const SparsePolynomial& map);
std::string describe(const TraceMap& map);

}  // namespace permpoly
