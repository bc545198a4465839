// Test-side oracles, deliberately independent of the library paths they
// cross-check: exhaustive enumeration and sort-based comparisons only.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "permpoly/field.hpp"

namespace oracle {

/// Every square in the field, by squaring all elements.
inline std::set<std::uint64_t> all_squares(const permpoly::FieldCtx& f) {
    std::set<std::uint64_t> out;
    for (std::uint64_t x = 0; x < f.order(); ++x) out.insert(f.mul(x, x));
    return out;
}

/// x^2 + ax + b has a root in the field.
inline bool quad_has_root(const permpoly::FieldCtx& f, std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t u = 0; u < f.order(); ++u)
        if (f.add(f.add(f.mul(u, u), f.mul(a, u)), b) == 0) return true;
    return false;
}

/// Multiplicative order by repeated multiplication.
inline std::uint64_t element_order(const permpoly::FieldCtx& f, std::uint64_t x) {
    std::uint64_t cur = x, ord = 1;
    while (cur != 1) {
        cur = f.mul(cur, x);
        ++ord;
        if (ord > f.order()) return 0;  // not a unit
    }
    return ord;
}

/// Bijectivity by sorting the full image and comparing against the domain.
inline bool is_bijection_sorted(std::vector<std::uint64_t> image,
                                std::vector<std::uint64_t> domain) {
    std::sort(image.begin(), image.end());
    std::sort(domain.begin(), domain.end());
    return image == domain;
}

/// The smallest-index monic irreducible quadratic over F_p, found by a root
/// scan (degree two is reducible exactly when it has a root).
inline std::vector<std::uint64_t> smallest_irreducible_quadratic(std::uint64_t p) {
    for (std::uint64_t v = 0;; ++v) {
        const std::uint64_t c0 = v % p, c1 = v / p;
        bool has_root = false;
        for (std::uint64_t u = 0; u < p && !has_root; ++u)
            has_root = (u * u + c1 * u + c0) % p == 0;
        if (!has_root) return {c0, c1, 1};
    }
}

}  // namespace oracle
