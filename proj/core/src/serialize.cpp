#include "permpoly/serialize.hpp"

#include <json.hpp>

namespace permpoly {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json field_json(const FieldCtx& ctx) {
    return ordered_json{{"p", ctx.characteristic()},
                        {"m", ctx.degree()},
                        {"modulus", ctx.modulus()},
                        {"generator", ctx.generator()}};
}

ordered_json view_json(const SubgroupView& view) {
    const auto& elems = view.elements();
    std::vector<std::uint64_t> head(elems.begin(),
                                    elems.begin() + std::min<std::size_t>(8, elems.size()));
    return ordered_json{{"kind", to_string(view.kind())},
                        {"size", view.size()},
                        {"first", head}};
}

}  // namespace

std::string field_descriptor_json(const FieldCtx& ctx) { return field_json(ctx).dump(); }

std::string view_summary_json(const SubgroupView& view) { return view_json(view).dump(); }

std::string domain_descriptor_json(const EvalDomain& domain) {
    if (domain.view) return view_json(*domain.view).dump();
    return ordered_json{{"kind", "field"}, {"size", domain.ctx->order()}}.dump();
}

std::string describe(const DensePolynomial& map) {
    return ordered_json{{"kind", "dense"},
                        {"coeffs", map.coeffs},
                        {"field", field_json(*map.ctx)}}
        .dump();
}

std::string describe(const RationalMap& map) {
    return ordered_json{{"kind", "rational"},
                        {"num", map.num.coeffs},
                        {"den", map.den.coeffs},
                        {"field", field_json(*map.num.ctx)}}
        .dump();
}

std::string describe(const SparsePolynomial& map) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : map.terms) terms.push_back({e, c});
    return ordered_json{{"kind", "sparse"},
                        {"terms", terms},
                        {"field", field_json(*map.ctx)}}
        .dump();
}

std::string describe(const TraceMap& map) {
    return ordered_json{{"kind", "trace"},
                        {"base_degree", map.base_degree},
                        {"k", map.k},
                        {"gamma", map.gamma},
                        {"field", field_json(*map.ctx)}}
        .dump();
}

}  // namespace permpoly
