#include "permpoly/perm_check.hpp"

#include <chrono>
#include <vector>

#include <json.hpp>

namespace permpoly {

namespace {

constexpr std::uint64_t kEmpty = UINT64_MAX;

PermReport run_check(const EvalFn& f, const EvalDomain& domain,
                     std::string map_descriptor, bool early_abort) {
    const auto t0 = std::chrono::steady_clock::now();
    PermReport report;
    report.map_descriptor = std::move(map_descriptor);
    report.field_descriptor = field_descriptor_json(*domain.ctx);
    report.domain_descriptor = domain_descriptor_json(domain);

    std::vector<std::uint64_t> preimage(domain.ctx->order(), kEmpty);
    const std::uint64_t n = domain.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t x = domain.at(i);
        const std::uint64_t y = f(x);
        ++report.evaluations;
        if (!domain.contains(y) && !report.escape) {
            report.closure_ok = false;
            report.escape = x;
            if (early_abort) break;
        }
        if (y < preimage.size() && preimage[y] != kEmpty) {
            if (!report.collision) {
                report.injective = false;
                report.collision = std::make_pair(preimage[y], x);
            }
            if (early_abort) break;
        } else if (y < preimage.size()) {
            preimage[y] = x;
        }
    }
    report.is_pp = report.injective && report.closure_ok;
    report.ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return report;
}

}  // namespace

PermReport is_permutation(const EvalFn& f, const EvalDomain& domain,
                          std::string map_descriptor, bool early_abort) {
    return run_check(f, domain, std::move(map_descriptor), early_abort);
}

PermReport permutes_subset(const EvalFn& f, const ViewPtr& view,
                           std::string map_descriptor) {
    return run_check(f, EvalDomain::of_view(view), std::move(map_descriptor),
                     /*early_abort=*/false);
}

ValueSetProfile value_set_profile(const EvalFn& f, const EvalDomain& domain,
                                  std::string map_descriptor) {
    ValueSetProfile profile;
    profile.map_descriptor = std::move(map_descriptor);
    profile.domain_descriptor = domain_descriptor_json(domain);
    profile.domain_size = domain.size();

    std::vector<std::uint64_t> hits(domain.ctx->order(), 0);
    for (std::uint64_t i = 0; i < profile.domain_size; ++i) ++hits[f(domain.at(i))];
    for (const std::uint64_t h : hits) {
        if (h == 0) continue;
        ++profile.image_size;
        ++profile.multiplicity_histogram[h];
    }
    return profile;
}

std::string PermReport::to_json() const {
    using ordered_json = nlohmann::ordered_json;
    ordered_json witness;
    if (collision)
        witness = ordered_json::array({collision->first, collision->second});
    else if (escape)
        witness = ordered_json::array({*escape});
    else
        witness = nullptr;
    ordered_json out{{"field", ordered_json::parse(field_descriptor)},
                     {"map", ordered_json::parse(map_descriptor)},
                     {"domain", ordered_json::parse(domain_descriptor)},
                     {"is_pp", is_pp},
                     {"witness", witness},
                     {"evals", evaluations},
                     {"ms", ms}};
    return out.dump();
}

}  // namespace permpoly
