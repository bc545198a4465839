#include "permpoly/lemma_suite.hpp"

#include <random>
#include <sstream>

namespace permpoly {

namespace {

void push(LemmaSuiteReport& report, std::string name, bool pass, std::string detail = "") {
    report.checks.push_back(LemmaCheck{std::move(name), pass, std::move(detail)});
}

bool quad_has_root(const FieldCtx& f, std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t u = 0; u < f.order(); ++u)
        if (f.add(f.add(f.mul(u, u), f.mul(a, u)), b) == 0) return true;
    return false;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

LemmaSuiteReport run_mu_suite(unsigned k) {
    LemmaSuiteReport report;
    report.suite = "mu-subgroup(k=" + std::to_string(k) + ")";

    auto family = conj2_map(k);
    const FieldCtxPtr ctx = family.mu->ctx_ptr();
    const FieldCtx& f = *ctx;
    const std::uint64_t q = family.mu->q_param();

    const std::uint64_t two = 2, minus_two = f.neg(2);
    push(report, "two-and-minus-two-are-squares",
         f.is_square(two) && f.is_square(minus_two));
    const auto root2 = f.sqrt(two);
    const auto rootm2 = f.sqrt(minus_two);
    const bool roots_in_base =
        root2 && rootm2 && f.in_subfield(*root2, k) && f.in_subfield(*rootm2, k);
    push(report, "sqrt-of-two-and-minus-two-in-F_q", roots_in_base,
         root2 && rootm2
             ? "sqrt(2)=" + std::to_string(*root2) + " sqrt(-2)=" + std::to_string(*rootm2)
             : "missing root");

    const auto split = omega_split(family.mu);
    push(report, "omega-partition", split.disjoint && split.covers && split.half_sizes,
         "|plus|=" + std::to_string(split.plus->size()) +
             " |minus|=" + std::to_string(split.minus->size()) +
             " expected=" + std::to_string((q + 1) / 2));

    const auto plus_report = permutes_subset(family.map, split.plus);
    const auto minus_report = permutes_subset(family.map, split.minus);
    push(report, "closure-omega-plus", plus_report.closure_ok);
    push(report, "closure-omega-minus", minus_report.closure_ok);

    const struct {
        const char* name;
        const ViewPtr& view;
        std::uint64_t sum;
    } systems[] = {
        {"no-solution-sum-1-prod-1-omega-plus", split.plus, 1},
        {"no-solution-sum-minus1-prod-1-omega-plus", split.plus, f.neg(1)},
        {"no-solution-sum-1-prod-1-omega-minus", split.minus, 1},
        {"no-solution-sum-minus1-prod-1-omega-minus", split.minus, f.neg(1)},
    };
    for (const auto& sys : systems) {
        const std::uint64_t count = count_sum_product_pairs(*sys.view, sys.sum, 1);
        push(report, sys.name, count == 0, "count=" + std::to_string(count));
    }

    push(report, "permutes-omega-plus", plus_report.is_pp);
    push(report, "permutes-omega-minus", minus_report.is_pp);
    const auto mu_report = is_permutation(family.map, EvalDomain::of_view(family.mu),
                                          /*early_abort=*/false);
    push(report, "permutes-mu", mu_report.is_pp,
         "evals=" + std::to_string(mu_report.evaluations));
    return report;
}

LemmaSuiteReport run_square_class_suite(unsigned k) {
    LemmaSuiteReport report;
    report.suite = "square-classes(k=" + std::to_string(k) + ")";

    auto map = conj1_map(k);
    const FieldCtxPtr ctx = map.num.ctx;
    const FieldCtx& f = *ctx;

    // Both quadratics via the discriminant criterion and by exhaustive roots.
    const auto q1 = quad_discriminant_irreducible(f(1), f(1));     // u^2 + u + 1
    const auto q2 = quad_discriminant_irreducible(f(-2), f(-1));   // u^2 - 2u - 1
    const bool q1_roots = quad_has_root(f, 1, 1);
    const bool q2_roots = quad_has_root(f, f.from_int(-2), f.from_int(-1));
    push(report, "u2+u+1-irreducible", q1.irreducible && !q1_roots,
         "disc=" + std::to_string(q1.discriminant.index()));
    push(report, "u2-2u-1-irreducible", q2.irreducible && !q2_roots,
         "disc=" + std::to_string(q2.discriminant.index()));

    const auto split = square_class_split(ctx);
    const std::uint64_t half = (f.order() - 1) / 2;
    push(report, "square-class-partition",
         split.squares->size() == half && split.twice_squares->size() == half,
         "|squares|=" + std::to_string(split.squares->size()));

    const auto sq_report = permutes_subset(map, split.squares);
    const auto tw_report = permutes_subset(map, split.twice_squares);
    push(report, "closure-squares", sq_report.closure_ok);
    push(report, "closure-twice-squares", tw_report.closure_ok);
    push(report, "permutes-squares", sq_report.is_pp);
    push(report, "permutes-twice-squares", tw_report.is_pp);

    const auto field_report =
        is_permutation(map, EvalDomain::whole_field(ctx), /*early_abort=*/false);
    push(report, "permutes-field", field_report.is_pp,
         "evals=" + std::to_string(field_report.evaluations));
    return report;
}

LemmaSuiteReport run_trace_suite(unsigned r) {
    LemmaSuiteReport report;
    report.suite = "trace-family(r=" + std::to_string(r) + ")";

    const auto family = trace_family(r);
    if (family.empty()) {
        push(report, "gamma-set-nonempty", false);
        return report;
    }
    const FieldCtxPtr ctx = family.front().ctx;
    const FieldCtx& f = *ctx;
    const std::uint64_t q = ipow(3, r);

    push(report, "gamma-set-size", family.size() == (q - 3) / 2,
         "found=" + std::to_string(family.size()) +
             " expected=" + std::to_string((q - 3) / 2));

    bool in_base = true;
    for (const auto& map : family) in_base = in_base && f.frobenius(map.gamma, r) == map.gamma;
    push(report, "gamma-set-in-F_q", in_base);

    if (r == 2) {
        // Root set of (g+1)(g^2-g-1) over the same field.
        std::vector<std::uint64_t> roots;
        for (std::uint64_t g = 0; g < f.order(); ++g) {
            const std::uint64_t lhs =
                f.mul(f.add(g, 1), f.sub(f.sub(f.mul(g, g), g), 1));
            if (lhs == 0) roots.push_back(g);
        }
        std::vector<std::uint64_t> gammas;
        for (const auto& map : family) gammas.push_back(map.gamma);
        push(report, "gamma-set-matches-cubic-roots", roots == gammas,
             "roots=" + std::to_string(roots.size()));
    }

    bool all_pp = true;
    for (const auto& map : family) {
        const auto rep = is_permutation(map, EvalDomain::whole_field(ctx),
                                        /*early_abort=*/false);
        all_pp = all_pp && rep.is_pp;
    }
    push(report, "all-family-maps-permute", all_pp,
         "maps=" + std::to_string(family.size()));

    bool round_trip = true;
    if (r == 2) {
        for (const auto& map : family) {
            const auto params = TraceFamilyParams::make(r, map.gamma, ctx);
            for (std::uint64_t a = 0; a < f.order(); ++a)
                round_trip = round_trip && map.eval(invert_trace_pp(params, a)) == a;
        }
    } else {
        std::mt19937_64 rng(0x5eed5eedULL + r);
        std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
        for (unsigned i = 0; i < 200; ++i) {
            const auto& map = family[i % family.size()];
            const auto params = TraceFamilyParams::make(r, map.gamma, ctx);
            const std::uint64_t a = dist(rng);
            round_trip = round_trip && map.eval(invert_trace_pp(params, a)) == a;
        }
    }
    push(report, "inverter-round-trip", round_trip);
    return report;
}

std::string format_report(const LemmaSuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << "\n";
    for (const auto& check : report.checks) {
        out << "  [" << (check.pass ? "pass" : "FAIL") << "] " << check.name;
        if (!check.detail.empty()) out << "  (" << check.detail << ")";
        out << "\n";
    }
    out << (report.all_pass() ? "  => all pass" : "  => FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace permpoly
