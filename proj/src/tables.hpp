#pragma once

#include <set>
#include <string>
#include <vector>

#include "isometry.hpp"

namespace cremona {

/// One row of the encoded class tables: elements of small order in the
/// Weyl groups of E6 (orders 2,3,6,9), E7 (orders 2,3,6) and E8 (orders
/// 3 and 6), keyed by Carter label with the char poly on E_r.
struct ClassTableRow {
    int order;
    std::string label;
    CharPolyFactors factors;    // sorted by cyclotomic index
    std::string display;        // char poly as printed in the source tables
};

/// Class rows for r in {6,7,8}; empty for other r.
const std::vector<ClassTableRow>& class_table(int r);

/// Labels of all encoded rows matching (order, char poly); may hold
/// several entries (primed pairs share char polys) or be empty.
std::set<std::string> carter_labels(int r, int order, const CharPolyFactors& factors);

/// Trace on E_r implied by a factored char poly: sum of mult * mu(d).
long long trace_of_factors(const CharPolyFactors& factors);

/// Counts of roots and (-1)-classes per degree d = 9 - r.
struct CountRow {
    int degree;
    int r;
    int roots;
    int lines;
};
const std::vector<CountRow>& count_table();

/// Weyl group orders per lattice type.
struct WeylOrderRow {
    int r;
    std::string type;
    long long order;
};
const std::vector<WeylOrderRow>& weyl_order_table();

/// All encoded tables as TSV, one block per table.
std::string emit_tables_tsv();

}  // namespace cremona
