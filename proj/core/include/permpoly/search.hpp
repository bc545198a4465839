#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permpoly/families.hpp"

namespace permpoly {

/// Orbit of k under multiplication by q modulo q^n - 1. Exponents in one
/// orbit give pointwise-equal trace maps, so searches only visit the
/// minimal representative.
struct KCoset {
    std::uint64_t k_min = 0;
    std::vector<std::uint64_t> coset;  // sorted ascending
};

KCoset canonical_k(std::uint64_t k, std::uint64_t q, unsigned n);

/// One field of the sweep: q = p^j, extension degree n (field F_{q^n}).
struct FieldSel {
    std::uint64_t p = 0;
    unsigned j = 0;
    unsigned n = 0;

    bool operator==(const FieldSel&) const = default;
};

struct SearchConfig {
    std::uint64_t max_order = 729;
    unsigned jobs = 1;
    std::vector<FieldSel> fields_filter;  // empty = every field within the bound
    bool early_abort = true;              // off only for diagnostics
};

/// One bijective map found by the sweep. `family_tag` is empty for rows not
/// matching any known class ("novel").
struct SearchRecord {
    FieldSel field;
    std::vector<std::uint64_t> modulus;
    std::uint64_t k = 0;                 // coset-canonical
    std::vector<std::uint64_t> k_coset;
    std::uint64_t gamma = 0;
    bool is_pp = true;
    std::string family_tag;

    std::string to_json() const;
    std::string to_csv() const;
    static std::string csv_header();
};

/**
 * Sweep every field F_{q^n} with q = p^j, n > 1 and q^n <= max_order; for
 * each coset-canonical k and each gamma != 0 emit a record iff
 * x + gamma * Tr_{q^n/q}(x^k) is a bijection. Work is sharded by
 * (field, k) across `jobs` workers; records reach the sink in canonical
 * (p, j, n, k, gamma) order regardless of the worker count, so equal
 * configs produce byte-identical outputs.
 */
void search_trace_pps(const SearchConfig& cfg,
                      const std::function<void(const SearchRecord&)>& sink);

std::vector<SearchRecord> search_trace_pps(const SearchConfig& cfg);

/// All (s, t, lambda1, lambda2) rows, s <= t with the symmetric duplicate
/// dropped at s == t, whose trinomial permutes F_{5^{2k}}.
struct NihoRecord {
    unsigned k = 1;
    std::uint64_t s = 1;
    std::uint64_t t = 1;
    int lambda1 = 1;
    int lambda2 = 1;
    bool is_pp = true;
    std::string family_tag;  // "trivial" when the trinomial collapses to x

    std::string to_json() const;
    std::string to_csv() const;
    static std::string csv_header();
};

std::vector<NihoRecord> search_niho(unsigned k);

/// Known-class tag for a trace-search hit; empty when novel.
std::string trace_family_tag(const FieldCtx& ctx, const FieldSel& sel,
                             const std::vector<std::uint64_t>& coset,
                             std::uint64_t gamma);

}  // namespace permpoly
