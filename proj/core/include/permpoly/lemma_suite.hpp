#pragma once

#include <string>
#include <vector>

#include "permpoly/families.hpp"
#include "permpoly/perm_check.hpp"

namespace permpoly {

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct LemmaSuiteReport {
    std::string suite;
    std::vector<LemmaCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * The mu-subgroup suite at q = 5^k (k even): +-2 are squares with roots in
 * F_q, the omega split partitions mu_{q+1}, the map is closed on and
 * permutes each half, and the sum/product systems {xy=1, x+y=+-1} have no
 * solutions in either half.
 */
LemmaSuiteReport run_mu_suite(unsigned k);

/**
 * The square-class suite over F_{5^k} (k odd): u^2+u+1 and u^2-2u-1 are
 * irreducible (discriminant criterion cross-checked against exhaustive root
 * search), the square classes partition F^*, and the whole-field map is
 * closed on and permutes each class.
 */
LemmaSuiteReport run_square_class_suite(unsigned k);

/**
 * The trace-family suite at q = 3^r: the gamma set lies in F_q and has the
 * expected size, every family map is a bijection, the inverter round-trips,
 * and at r = 2 the gamma set equals the root set of (g+1)(g^2-g-1).
 */
LemmaSuiteReport run_trace_suite(unsigned r);

std::string format_report(const LemmaSuiteReport& report);

}  // namespace permpoly
