#include "permpoly/search.hpp"

#include "permpoly/perm_check.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace permpoly {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

KCoset canonical_k(std::uint64_t k, std::uint64_t q, unsigned n) {
    const std::uint64_t m = ipow(q, n) - 1;
    if (k == 0 || k >= m) throw FieldError("exponent must lie in [1, q^n - 1)");
    KCoset out;
    std::uint64_t x = k;
    do {
        out.coset.push_back(x);
        x = x * q % m;
    } while (x != k);
    std::sort(out.coset.begin(), out.coset.end());
    out.k_min = out.coset.front();
    return out;
}

std::string trace_family_tag(const FieldCtx& ctx, const FieldSel& sel,
                             const std::vector<std::uint64_t>& coset,
                             std::uint64_t gamma) {
    const auto in_coset = [&coset](std::uint64_t k) {
        return std::binary_search(coset.begin(), coset.end(), k);
    };
    if (sel.p == 3 && sel.n == 2 && sel.j >= 2) {
        const std::uint64_t q = ipow(3, sel.j);
        if (in_coset(trace_family_k(sel.j)) && trace_gamma_condition(ctx, q, gamma))
            return "trace-class-3r";
    }
    for (const auto& spec : example_specs()) {
        if (spec.p != sel.p || spec.j != sel.j || spec.n != sel.n) continue;
        for (const std::uint64_t k : spec.ks)
            if (in_coset(k) && example_gamma_condition(spec.id, ctx, gamma))
                return std::string("example-") + spec.name;
    }
    const std::uint64_t m = ipow(ipow(sel.p, sel.j), sel.n) - 1;
    for (std::uint64_t e = 1; e < m; e *= sel.p) {
        if (in_coset(e)) return "linearized";
        if (e > m / sel.p) break;
    }
    return {};
}

namespace {

struct WorkUnit {
    std::size_t field_index;
    std::uint64_t k;
    std::vector<std::uint64_t> coset;
};

std::vector<FieldSel> enumerate_fields(const SearchConfig& cfg) {
    std::vector<FieldSel> fields;
    for (std::uint64_t p = 2; p * p <= cfg.max_order; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned j = 1;; ++j) {
            const std::uint64_t q = ipow(p, j);
            if (q * q > cfg.max_order) break;
            for (unsigned n = 2;; ++n) {
                std::uint64_t order = 1;
                bool fits = true;
                for (unsigned i = 0; i < n; ++i) {
                    if (order > cfg.max_order / q) {
                        fits = false;
                        break;
                    }
                    order *= q;
                }
                if (!fits || order > cfg.max_order) break;
                FieldSel sel{p, j, n};
                if (cfg.fields_filter.empty() ||
                    std::find(cfg.fields_filter.begin(), cfg.fields_filter.end(), sel) !=
                        cfg.fields_filter.end())
                    fields.push_back(sel);
            }
        }
    }
    std::sort(fields.begin(), fields.end(), [](const FieldSel& a, const FieldSel& b) {
        return std::tie(a.p, a.j, a.n) < std::tie(b.p, b.j, b.n);
    });
    return fields;
}

// Records for one (field, k) unit: the gamma loop with a stamped occupancy
// table, early-aborting each candidate on the first collision.
std::vector<SearchRecord> run_unit(const FieldCtx& f, const FieldSel& sel,
                                   const WorkUnit& unit, bool early_abort,
                                   std::vector<std::uint64_t>& trace_buf,
                                   std::vector<std::uint64_t>& stamp_buf,
                                   std::uint64_t& stamp) {
    const std::uint64_t order = f.order();
    for (std::uint64_t x = 0; x < order; ++x)
        trace_buf[x] = f.trace(f.pow(x, unit.k), sel.j, 1);

    std::vector<SearchRecord> records;
    for (std::uint64_t gamma = 1; gamma < order; ++gamma) {
        ++stamp;
        bool bijective = true;
        for (std::uint64_t x = 0; x < order; ++x) {
            const std::uint64_t y = f.add(x, f.mul(gamma, trace_buf[x]));
            if (stamp_buf[y] == stamp) {
                bijective = false;
                if (early_abort) break;
            } else {
                stamp_buf[y] = stamp;
            }
        }
        if (!bijective) continue;
        SearchRecord rec;
        rec.field = sel;
        rec.modulus = f.modulus();
        rec.k = unit.k;
        rec.k_coset = unit.coset;
        rec.gamma = gamma;
        rec.is_pp = true;
        rec.family_tag = trace_family_tag(f, sel, unit.coset, gamma);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace

void search_trace_pps(const SearchConfig& cfg,
                      const std::function<void(const SearchRecord&)>& sink) {
    if (cfg.max_order < 4) return;
    const auto fields = enumerate_fields(cfg);

    // One context per distinct (p, m); views and contexts are shareable.
    std::map<std::pair<std::uint64_t, unsigned>, FieldCtxPtr> ctx_cache;
    std::vector<FieldCtxPtr> field_ctx(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto key = std::make_pair(fields[i].p, fields[i].j * fields[i].n);
        auto it = ctx_cache.find(key);
        if (it == ctx_cache.end())
            it = ctx_cache.emplace(key, FieldCtx::make(key.first, key.second)).first;
        field_ctx[i] = it->second;
    }

    std::vector<WorkUnit> units;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::uint64_t q = ipow(fields[i].p, fields[i].j);
        const std::uint64_t m = ipow(q, fields[i].n) - 1;
        for (std::uint64_t k = 1; k < m; ++k) {
            auto coset = canonical_k(k, q, fields[i].n);
            if (coset.k_min != k) continue;  // visit each orbit once
            units.push_back(WorkUnit{i, k, std::move(coset.coset)});
        }
    }

    const unsigned jobs = std::max(1u, cfg.jobs);
    std::vector<std::vector<SearchRecord>> results(units.size());
    std::vector<char> done(units.size(), 0);
    std::atomic<std::size_t> next_unit{0};
    std::mutex mtx;
    std::condition_variable cv;

    auto worker = [&]() {
        std::vector<std::uint64_t> trace_buf, stamp_buf;
        std::uint64_t stamp = 0;
        std::size_t last_field = SIZE_MAX;
        while (true) {
            const std::size_t u = next_unit.fetch_add(1);
            if (u >= units.size()) break;
            const WorkUnit& unit = units[u];
            const FieldCtx& f = *field_ctx[unit.field_index];
            if (unit.field_index != last_field) {
                trace_buf.assign(f.order(), 0);
                stamp_buf.assign(f.order(), 0);
                stamp = 0;
                last_field = unit.field_index;
            }
            auto recs = run_unit(f, fields[unit.field_index], unit, cfg.early_abort,
                                 trace_buf, stamp_buf, stamp);
            {
                std::lock_guard<std::mutex> lock(mtx);
                results[u] = std::move(recs);
                done[u] = 1;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

    // The calling thread is the single ordered consumer: it emits each
    // unit's records as soon as every earlier unit has finished.
    std::size_t emitted = 0;
    while (emitted < units.size()) {
        std::unique_lock<std::mutex> lock(mtx);
        cv.wait(lock, [&] { return done[emitted] != 0; });
        auto recs = std::move(results[emitted]);
        done[emitted] = 2;
        ++emitted;
        lock.unlock();
        for (const auto& rec : recs) sink(rec);
    }
    for (auto& t : pool) t.join();
}

std::vector<SearchRecord> search_trace_pps(const SearchConfig& cfg) {
    std::vector<SearchRecord> out;
    search_trace_pps(cfg, [&out](const SearchRecord& rec) { out.push_back(rec); });
    return out;
}

std::vector<NihoRecord> search_niho(unsigned k) {
    auto ctx = FieldCtx::make(5, 2 * k);
    const std::uint64_t q = ipow(5, k);
    const SparsePolynomial identity =
        SparsePolynomial::from_terms(ctx, {{1, 1}});
    std::vector<NihoRecord> out;
    const std::array<std::pair<int, int>, 4> lambdas{
        {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (std::uint64_t s = 1; s <= q; ++s) {
        for (std::uint64_t t = s; t <= q; ++t) {
            for (const auto& [l1, l2] : lambdas) {
                if (s == t && l1 == -1 && l2 == 1) continue;  // mirror of (1,-1)
                const NihoParams params{k, s, t, l1, l2};
                const auto trinomial = niho_trinomial(params, ctx);
                const auto report = is_permutation(
                    trinomial, EvalDomain::whole_field(ctx), /*early_abort=*/true);
                if (!report.is_pp) continue;
                NihoRecord rec;
                rec.k = k;
                rec.s = s;
                rec.t = t;
                rec.lambda1 = l1;
                rec.lambda2 = l2;
                rec.is_pp = true;
                if (trinomial.terms == identity.terms) rec.family_tag = "trivial";
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

std::string SearchRecord::to_json() const {
    ordered_json obj{
        {"field",
         ordered_json{{"p", field.p}, {"j", field.j}, {"n", field.n}, {"modulus", modulus}}},
        {"k", k},
        {"k_coset", k_coset},
        {"gamma", gamma},
        {"is_pp", is_pp},
        {"family_tag", family_tag.empty() ? ordered_json(nullptr) : ordered_json(family_tag)}};
    return obj.dump();
}

std::string SearchRecord::csv_header() {
    return "p,j,n,modulus,k,k_coset,gamma,is_pp,family_tag";
}

std::string SearchRecord::to_csv() const {
    std::ostringstream out;
    out << field.p << ',' << field.j << ',' << field.n << ',';
    for (std::size_t i = 0; i < modulus.size(); ++i)
        out << (i ? ";" : "") << modulus[i];
    out << ',' << k << ',';
    for (std::size_t i = 0; i < k_coset.size(); ++i) out << (i ? ";" : "") << k_coset[i];
    out << ',' << gamma << ',' << (is_pp ? "true" : "false") << ','
        << (family_tag.empty() ? "novel" : family_tag);
    return out.str();
}

std::string NihoRecord::to_json() const {
    ordered_json obj{{"k", k},
                     {"s", s},
                     {"t", t},
                     {"lambda1", lambda1},
                     {"lambda2", lambda2},
                     {"is_pp", is_pp},
                     {"family_tag",
                      family_tag.empty() ? ordered_json(nullptr) : ordered_json(family_tag)}};
    return obj.dump();
}

std::string NihoRecord::csv_header() { return "k,s,t,lambda1,lambda2,is_pp,family_tag"; }

std::string NihoRecord::to_csv() const {
    std::ostringstream out;
    out << k << ',' << s << ',' << t << ',' << lambda1 << ',' << lambda2 << ','
        << (is_pp ? "true" : "false") << ',' << (family_tag.empty() ? "novel" : family_tag);
    return out.str();
}

}  // namespace permpoly
