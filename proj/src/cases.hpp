#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "verdict.hpp"

namespace cremona {

/// Knobs shared by the verification suites.
struct SuiteOptions {
    bool allow_large = false;  // permit the full rank-7 group enumeration
    uint64_t seed = kDefaultSeed;
};

/// Root/line counts per degree, Weyl group orders by exhaustive closure,
/// and root-system types of the simple-root bases.
Verdict verify_tables(const SuiteOptions& opts = {});

/// Class inventories of the encoded tables: exhaustive and bidirectional
/// for ranks 6 (and 7 when allowed), representative existence for rank 8
/// (completeness there is trusted table data and flagged as such).
Verdict verify_appendix(const SuiteOptions& opts = {});

/// Degree 6: hexagon symmetry, the unique involution type commuting with
/// the order-3 rotation, and the completed real structure.
Verdict case_dp6();

/// Degree 5: order-3 and order-5 elements of the rank-4 Weyl group and
/// the pentagon orbits on the ten (-1)-classes.
Verdict case_dp5();

/// Degree 4: exhaustive rank-5 scan ruling out order 10, the order-6
/// obstruction poly, and a minus-identity involution.
Verdict case_dp4();

/// Degree 3: exhaustive rank-6 scan of the order-3 traces and the
/// surviving twisted order-6 class.
Verdict case_dp3();

/// Degree 2: the four eigenvalue-1-free order-6 classes, the surviving
/// twist, and the minus-identity longest element. Runs in reduced mode
/// (encoded table, flagged) unless opts.allow_large permits the full
/// enumeration.
Verdict case_dp2(const SuiteOptions& opts = {});

/// Degree 1: order-3 representatives, the sign-twist survivor, the
/// minus-identity longest element, and the singular-fiber count.
Verdict case_dp1(const SuiteOptions& opts = {});

/// Runs a named suite: one of tables, appendix, dp6, dp5, dp4, dp3, dp2,
/// dp1, surfaces, all. Throws std::invalid_argument for unknown names.
std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace cremona
