#include "permpoly/families.hpp"

#include <algorithm>
#include <array>

namespace permpoly {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

DensePolynomial monomial_x(const FieldCtxPtr& ctx) {
    return DensePolynomial::from_ints(ctx, {0, 1});
}

}  // namespace

RationalMap conj1_map(unsigned k, bool force) {
    if (k == 0) throw HypothesisError("k must be a positive odd integer");
    if (k % 2 == 0 && !force)
        throw HypothesisError("the whole-field family requires odd k (use force to bypass)");
    auto ctx = FieldCtx::make(5, k);
    const auto a = DensePolynomial::from_ints(ctx, {2, -1, 1});  // x^2 - x + 2
    const auto b = DensePolynomial::from_ints(ctx, {2, 1, 1});   // x^2 + x + 2
    auto map = RationalMap::make(dense_mul(monomial_x(ctx), dense_mul(a, a)),
                                 dense_mul(b, b));
    map.certify_on(EvalDomain::whole_field(ctx));  // may fail on forced even k
    return map;
}

Conj2Family conj2_map(unsigned k, bool force) {
    if (k == 0) throw HypothesisError("k must be a positive even integer");
    if (k % 2 == 1 && !force)
        throw HypothesisError("the mu family requires even k (use force to bypass)");
    auto ctx = FieldCtx::make(5, 2 * k);
    const std::uint64_t q = ipow(5, k);
    const auto a = DensePolynomial::from_ints(ctx, {-2, 0, 1});  // x^2 - 2
    const auto b = DensePolynomial::from_ints(ctx, {2, 0, 1});   // x^2 + 2
    auto map = RationalMap::make(dense_neg(dense_mul(monomial_x(ctx), dense_mul(a, a))),
                                 dense_mul(b, b));
    auto mu = mu_view(ctx, q);
    map.certify_on(EvalDomain::of_view(mu));
    return Conj2Family{std::move(map), std::move(mu)};
}

std::uint64_t NihoParams::half_order() const { return ipow(5, k); }

void NihoParams::validate() const {
    if (k == 0) throw HypothesisError("half-degree k must be positive");
    const std::uint64_t q = half_order();
    if (q > FieldCtx::kOrderCap / q)
        throw HypothesisError("trinomial exponents exceed the order cap");
    if (s < 1 || s > q || t < 1 || t > q)
        throw HypothesisError("s and t must lie in [1, 5^k]");
    if ((lambda1 != 1 && lambda1 != -1) || (lambda2 != 1 && lambda2 != -1))
        throw HypothesisError("lambda coefficients must be +-1");
}

SparsePolynomial niho_trinomial(const NihoParams& params, FieldCtxPtr ctx) {
    params.validate();
    if (!ctx) ctx = FieldCtx::make(5, 2 * params.k);
    if (ctx->characteristic() != 5 || ctx->degree() != 2 * params.k)
        throw FieldError("trinomial context must be F_{5^{2k}}");
    const std::uint64_t q = params.half_order();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms{
        {1, 1},
        {params.s * (q - 1) + 1, ctx->from_int(params.lambda1)},
        {params.t * (q - 1) + 1, ctx->from_int(params.lambda2)},
    };
    return SparsePolynomial::from_terms(std::move(ctx), std::move(terms));
}

std::uint64_t trace_family_k(unsigned r) {
    return ipow(3, 2 * r - 1) + ipow(3, r) - ipow(3, r - 1);
}

bool trace_gamma_condition(const FieldCtx& ctx, std::uint64_t q, std::uint64_t gamma) {
    const std::uint64_t e = (q - 1) / 2;
    return ctx.pow(ctx.sub(gamma, 1), e) == ctx.pow(gamma, e);
}

TraceFamilyParams TraceFamilyParams::make(unsigned r, std::uint64_t gamma,
                                          FieldCtxPtr ctx) {
    if (r < 2) throw HypothesisError("trace family requires r >= 2");
    if (!ctx) ctx = FieldCtx::make(3, 2 * r);
    if (ctx->characteristic() != 3 || ctx->degree() != 2 * r)
        throw FieldError("trace family context must be F_{3^{2r}}");
    if (gamma == 0 || gamma == 1)
        throw HypothesisError("gamma = 0 and gamma = 1 are excluded");
    const std::uint64_t q = ipow(3, r);
    if (!trace_gamma_condition(*ctx, q, gamma))
        throw HypothesisError("gamma fails (gamma-1)^{(q-1)/2} = gamma^{(q-1)/2}");
    if (ctx->frobenius(gamma, r) != gamma)
        throw std::logic_error("gamma condition held but gamma is not in F_q");
    TraceFamilyParams params;
    params.r = r;
    params.ctx = std::move(ctx);
    params.q = q;
    params.k = trace_family_k(r);
    params.gamma = gamma;
    return params;
}

TraceMap TraceFamilyParams::map() const { return TraceMap::make(ctx, r, k, gamma); }

std::vector<TraceMap> trace_family(unsigned r) {
    if (r < 2) throw HypothesisError("trace family requires r >= 2");
    auto ctx = FieldCtx::make(3, 2 * r);
    const std::uint64_t q = ipow(3, r);
    const std::uint64_t k = trace_family_k(r);
    std::vector<TraceMap> maps;
    for (std::uint64_t gamma = 1; gamma < ctx->order(); ++gamma)
        if (trace_gamma_condition(*ctx, q, gamma))
            maps.push_back(TraceMap::make(ctx, r, k, gamma));
    return maps;
}

namespace {

// Solve the additive map L(x) = x^3 + beta*x (F_3-linear on coefficient
// vectors) against a right-hand side; returns every solution.
std::vector<std::uint64_t> solve_cubic_linearized(const FieldCtx& f, std::uint64_t beta,
                                                  std::uint64_t rhs) {
    const unsigned dim = f.degree();
    const std::uint64_t p = 3;

    auto to_digits = [&](std::uint64_t idx) {
        std::vector<int> d(dim);
        for (unsigned i = 0; i < dim; ++i) {
            d[i] = static_cast<int>(idx % p);
            idx /= p;
        }
        return d;
    };
    auto apply = [&](std::uint64_t x) { return f.add(f.pow(x, 3), f.mul(beta, x)); };

    // Columns are L on the basis monomials (index p^i).
    std::vector<std::vector<int>> mat(dim, std::vector<int>(dim + 1, 0));
    std::uint64_t basis = 1;
    for (unsigned col = 0; col < dim; ++col) {
        const auto image = to_digits(apply(basis));
        for (unsigned row = 0; row < dim; ++row) mat[row][col] = image[row];
        basis *= p;
    }
    const auto target = to_digits(rhs);
    for (unsigned row = 0; row < dim; ++row) mat[row][dim] = target[row];

    // Gaussian elimination mod 3.
    std::vector<int> pivot_col_of_row(dim, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < dim && rank < dim; ++col) {
        unsigned sel = rank;
        while (sel < dim && mat[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(mat[sel], mat[rank]);
        const int inv = mat[rank][col] == 1 ? 1 : 2;  // inverses mod 3
        for (unsigned j = col; j <= dim; ++j) mat[rank][j] = mat[rank][j] * inv % 3;
        for (unsigned i = 0; i < dim; ++i) {
            if (i == rank || mat[i][col] == 0) continue;
            const int factor = mat[i][col];
            for (unsigned j = col; j <= dim; ++j)
                mat[i][j] = (mat[i][j] + (3 - factor) * mat[rank][j]) % 3;
        }
        pivot_col_of_row[rank] = static_cast<int>(col);
        ++rank;
    }
    for (unsigned i = rank; i < dim; ++i)
        if (mat[i][dim] != 0) return {};  // inconsistent

    std::vector<int> is_pivot(dim, 0);
    std::vector<int> particular(dim, 0);
    for (unsigned i = 0; i < rank; ++i) {
        is_pivot[pivot_col_of_row[i]] = 1;
        particular[pivot_col_of_row[i]] = mat[i][dim];
    }
    std::vector<unsigned> free_cols;
    for (unsigned c = 0; c < dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // Enumerate the kernel coset (3^{#free} solutions; at most 3 here since
    // x^3 + beta*x has at most three roots).
    std::vector<std::uint64_t> solutions;
    std::vector<int> assignment(free_cols.size(), 0);
    while (true) {
        std::vector<int> digits = particular;
        for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
            const int v = assignment[fi];
            if (v == 0) continue;
            digits[free_cols[fi]] = v;
            for (unsigned i = 0; i < rank; ++i) {
                const int coef = mat[i][free_cols[fi]];
                if (coef)
                    digits[pivot_col_of_row[i]] =
                        (digits[pivot_col_of_row[i]] + (3 - coef * v % 3)) % 3;
            }
        }
        std::uint64_t idx = 0;
        for (unsigned i = dim; i-- > 0;) idx = idx * p + static_cast<unsigned>(digits[i]);
        solutions.push_back(idx);

        std::size_t pos = 0;
        while (pos < assignment.size() && assignment[pos] == 2) assignment[pos++] = 0;
        if (pos == assignment.size()) break;
        ++assignment[pos];
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

}  // namespace

std::uint64_t invert_trace_pp(const TraceFamilyParams& params, std::uint64_t a) {
    const FieldCtx& f = *params.ctx;
    const unsigned r = params.r;
    const std::uint64_t abar = f.frobenius(a, r);
    const std::uint64_t inv_one_minus_g = f.inv(f.sub(1, params.gamma));
    const std::uint64_t beta =
        f.mul(f.pow(f.mul(params.gamma, inv_one_minus_g), 3),
              f.pow(f.sub(abar, a), 2));
    const std::uint64_t rhs = f.pow(f.mul(a, inv_one_minus_g), 3);

    const std::uint64_t delta = f.sub(abar, a);
    std::vector<std::uint64_t> survivors;
    for (const std::uint64_t x : solve_cubic_linearized(f, beta, rhs))
        if (f.sub(f.frobenius(x, r), x) == delta) survivors.push_back(x);

    if (survivors.size() != 1)
        throw std::logic_error("trace-family inversion expected exactly one root, found " +
                               std::to_string(survivors.size()));
    return survivors.front();
}

namespace {

const std::vector<ExampleSpec> kExamples = {
    {ExampleId::E5_1, "5.1", 7, 1, 2, {10}, "gamma^4 = 1"},
    {ExampleId::E5_2, "5.2", 3, 2, 2, {33}, "gamma^2 - gamma = 1"},
    {ExampleId::E5_3, "5.3", 3, 3, 2, {261}, "(gamma-1)^13 = gamma^13"},
    {ExampleId::E5_4, "5.4", 3, 2, 3, {11, 19, 33, 57}, "gamma^4 = -1"},
    {ExampleId::E5_5, "5.5", 7, 2, 2, {385}, "gamma^5 = -1"},
};

}  // namespace

const std::vector<ExampleSpec>& example_specs() { return kExamples; }

const ExampleSpec& example_spec(ExampleId id) {
    for (const auto& spec : kExamples)
        if (spec.id == id) return spec;
    throw std::invalid_argument("unknown example id");
}

std::optional<ExampleId> parse_example_id(const std::string& text) {
    for (const auto& spec : kExamples)
        if (text == spec.name) return spec.id;
    return std::nullopt;
}

bool example_gamma_condition(ExampleId id, const FieldCtx& ctx, std::uint64_t gamma) {
    switch (id) {
        case ExampleId::E5_1:
            return ctx.pow(gamma, 4) == 1;
        case ExampleId::E5_2:
            return ctx.sub(ctx.mul(gamma, gamma), gamma) == 1;
        case ExampleId::E5_3:
            return ctx.pow(ctx.sub(gamma, 1), 13) == ctx.pow(gamma, 13);
        case ExampleId::E5_4:
            return ctx.pow(gamma, 4) == ctx.from_int(-1);
        case ExampleId::E5_5:
            return ctx.pow(gamma, 5) == ctx.from_int(-1);
    }
    throw std::invalid_argument("unknown example id");
}

std::vector<TraceMap> example_map(ExampleId id) {
    const ExampleSpec& spec = example_spec(id);
    auto ctx = FieldCtx::make(spec.p, spec.j * spec.n);
    std::vector<std::uint64_t> gammas;
    for (std::uint64_t g = 1; g < ctx->order(); ++g)
        if (example_gamma_condition(id, *ctx, g)) gammas.push_back(g);
    std::vector<TraceMap> maps;
    maps.reserve(spec.ks.size() * gammas.size());
    for (const std::uint64_t k : spec.ks)
        for (const std::uint64_t g : gammas) maps.push_back(TraceMap::make(ctx, spec.j, k, g));
    return maps;
}

}  // namespace permpoly
