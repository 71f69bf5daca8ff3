#include "tables.hpp"

#include <stdexcept>

namespace cremona {

namespace {

// Factors are listed as {cyclotomic index, multiplicity}, ascending index.

const std::vector<ClassTableRow> kE6Rows = {
    {2, "A1", {{1, 5}, {2, 1}}, "p_1(t-1)^5"},
    {2, "A1^2", {{1, 4}, {2, 2}}, "p_1^2(t-1)^4"},
    {2, "A1^3", {{1, 3}, {2, 3}}, "p_1^3(t-1)^3"},
    {2, "A1^4", {{1, 2}, {2, 4}}, "p_1^4(t-1)^2"},
    {3, "A2", {{1, 4}, {3, 1}}, "(t^2+t+1)(t-1)^4"},
    {3, "A2^2", {{1, 2}, {3, 2}}, "(t^2+t+1)^2(t-1)^2"},
    {3, "A2^3", {{3, 3}}, "(t^2+t+1)^3"},
    {6, "E6(a2)", {{3, 1}, {6, 2}}, "(t^2+t+1)(t^2-t+1)^2"},
    {6, "D4", {{1, 2}, {2, 2}, {6, 1}}, "(t+1)(t^3+1)(t-1)^2"},
    {6, "A1xA5", {{2, 2}, {3, 1}, {6, 1}}, "(t+1)(t^5+t^4+t^3+t^2+t+1)"},
    {6, "A1^2xA2", {{1, 2}, {2, 2}, {3, 1}}, "(t+1)^2(t^2+t+1)(t-1)^2"},
    {6, "A1xA2", {{1, 3}, {2, 1}, {3, 1}}, "(t+1)(t^2+t+1)(t-1)^3"},
    {6, "A1xA2^2", {{1, 1}, {2, 1}, {3, 2}}, "(t+1)(t^2+t+1)^2(t-1)"},
    {6, "A5", {{1, 1}, {2, 1}, {3, 1}, {6, 1}}, "(t^5+t^4+t^3+t^2+t+1)(t-1)"},
    {9, "E6(a1)", {{9, 1}}, "t^6+t^3+1"},
};

const std::vector<ClassTableRow> kE7Rows = {
    {2, "A1", {{1, 6}, {2, 1}}, "p_1(t-1)^6"},
    {2, "A1^2", {{1, 5}, {2, 2}}, "p_1^2(t-1)^5"},
    {2, "(A1^3)'", {{1, 4}, {2, 3}}, "p_1^3(t-1)^4"},
    {2, "(A1^3)''", {{1, 4}, {2, 3}}, "p_1^3(t-1)^4"},
    {2, "(A1^4)'", {{1, 3}, {2, 4}}, "p_1^4(t-1)^3"},
    {2, "(A1^4)''", {{1, 3}, {2, 4}}, "p_1^4(t-1)^3"},
    {2, "A1^5", {{1, 2}, {2, 5}}, "p_1^5(t-1)^2"},
    {2, "A1^6", {{1, 1}, {2, 6}}, "p_1^6(t-1)"},
    {2, "A1^7", {{2, 7}}, "p_1^7"},
    {3, "A2", {{1, 5}, {3, 1}}, "p_2(t-1)^5"},
    {3, "A2^2", {{1, 3}, {3, 2}}, "p_2^2(t-1)^3"},
    {3, "A2^3", {{1, 1}, {3, 3}}, "p_2^3(t-1)"},
    {6, "A2xA1", {{1, 4}, {2, 1}, {3, 1}}, "p_2p_1(t-1)^4"},
    {6, "A2xA1^2", {{1, 3}, {2, 2}, {3, 1}}, "p_2p_1^2(t-1)^3"},
    {6, "D4", {{1, 3}, {2, 2}, {6, 1}}, "(t^3+1)(t+1)(t-1)^3"},
    {6, "A2xA1^3", {{1, 2}, {2, 3}, {3, 1}}, "p_2p_1^3(t-1)^2"},
    {6, "A2^2xA1", {{1, 2}, {2, 1}, {3, 2}}, "p_2^2p_1(t-1)^2"},
    {6, "(A5)'", {{1, 2}, {2, 1}, {3, 1}, {6, 1}}, "p_5(t-1)^2"},
    {6, "(A5)''", {{1, 2}, {2, 1}, {3, 1}, {6, 1}}, "p_5(t-1)^2"},
    {6, "D4xA1", {{1, 2}, {2, 3}, {6, 1}}, "(t^3+1)(t+1)^2(t-1)^2"},
    {6, "(A5xA1)'", {{1, 1}, {2, 2}, {3, 1}, {6, 1}}, "p_5p_1(t-1)"},
    {6, "(A5xA1)''", {{1, 1}, {2, 2}, {3, 1}, {6, 1}}, "p_5p_1(t-1)"},
    {6, "D4xA1^2", {{1, 1}, {2, 4}, {6, 1}}, "(t^3+1)(t+1)^3(t-1)"},
    {6, "D6(a2)", {{1, 1}, {2, 2}, {6, 2}}, "(t^3+1)^2(t-1)"},
    {6, "E6(a2)", {{1, 1}, {3, 1}, {6, 2}}, "(t^2+t+1)(t^2-t+1)^2(t-1)"},
    {6, "A5xA2", {{2, 1}, {3, 2}, {6, 1}}, "p_5p_2"},
    {6, "D4xA1^3", {{2, 5}, {6, 1}}, "(t^3+1)(t+1)^4"},
    {6, "D6(a2)xA1", {{2, 3}, {6, 2}}, "(t^3+1)^2(t+1)"},
    {6, "E7(a4)", {{2, 1}, {6, 3}}, "(t^2-t+1)^2(t^3+1)"},
};

const std::vector<ClassTableRow> kE8Rows = {
    {3, "A2", {{1, 6}, {3, 1}}, "(t^2+t+1)(t-1)^6"},
    {3, "A2^2", {{1, 4}, {3, 2}}, "(t^2+t+1)^2(t-1)^4"},
    {3, "A2^3", {{1, 2}, {3, 3}}, "(t^2+t+1)^3(t-1)^2"},
    {3, "A2^4", {{3, 4}}, "(t^2+t+1)^4"},
    {6, "A2xA1", {{1, 5}, {2, 1}, {3, 1}}, "p_2p_1(t-1)^5"},
    {6, "A2xA1^2", {{1, 4}, {2, 2}, {3, 1}}, "p_2p_1^2(t-1)^4"},
    {6, "D4", {{1, 4}, {2, 2}, {6, 1}}, "(t^3+1)(t+1)(t-1)^4"},
    {6, "A2xA1^3", {{1, 3}, {2, 3}, {3, 1}}, "p_2p_1^3(t-1)^3"},
    {6, "A2^2xA1", {{1, 3}, {2, 1}, {3, 2}}, "p_2^2p_1(t-1)^3"},
    {6, "A5", {{1, 3}, {2, 1}, {3, 1}, {6, 1}}, "p_5(t-1)^3"},
    {6, "D4xA1", {{1, 3}, {2, 3}, {6, 1}}, "(t^3+1)(t+1)^2(t-1)^3"},
    {6, "A2xA1^4", {{1, 2}, {2, 4}, {3, 1}}, "p_2p_1^4(t-1)^2"},
    {6, "A2^2xA1^2", {{1, 2}, {2, 2}, {3, 2}}, "p_2^2p_1^2(t-1)^2"},
    {6, "(A5xA1)'", {{1, 2}, {2, 2}, {3, 1}, {6, 1}}, "p_5p_1(t-1)^2"},
    {6, "(A5xA1)''", {{1, 2}, {2, 2}, {3, 1}, {6, 1}}, "p_5p_1(t-1)^2"},
    {6, "D4xA1^2", {{1, 2}, {2, 4}, {6, 1}}, "(t^3+1)(t+1)^3(t-1)^2"},
    {6, "D4xA2", {{1, 2}, {2, 2}, {3, 1}, {6, 1}}, "p_2(t^3+1)(t+1)(t-1)^2"},
    {6, "D6(a2)", {{1, 2}, {2, 2}, {6, 2}}, "(t^3+1)^2(t-1)^2"},
    {6, "E6(a2)", {{1, 2}, {3, 1}, {6, 2}}, "(t^2+t+1)(t^2-t+1)^2(t-1)^2"},
    {6, "A2^3xA1", {{1, 1}, {2, 1}, {3, 3}}, "p_2^3p_1(t-1)"},
    {6, "A5xA1^2", {{1, 1}, {2, 3}, {3, 1}, {6, 1}}, "p_5p_1^2(t-1)"},
    {6, "A5xA2", {{1, 1}, {2, 1}, {3, 2}, {6, 1}}, "p_5p_2(t-1)"},
    {6, "D4xA1^3", {{1, 1}, {2, 5}, {6, 1}}, "(t^3+1)(t+1)^4(t-1)"},
    {6, "D6(a2)xA1", {{1, 1}, {2, 3}, {6, 2}}, "(t^3+1)^2(t+1)(t-1)"},
    {6, "E6(a2)xA1", {{1, 1}, {2, 1}, {3, 1}, {6, 2}}, "(t^2-t+1)^2(t^2+t+1)(t+1)(t-1)"},
    {6, "E7(a4)", {{1, 1}, {2, 1}, {6, 3}}, "(t^2-t+1)^2(t^3+1)(t-1)"},
    {6, "A5xA2xA1", {{2, 2}, {3, 2}, {6, 1}}, "p_5p_2p_1"},
    {6, "D4xA1^4", {{2, 6}, {6, 1}}, "(t^3+1)(t+1)^5"},
    {6, "D4^2", {{2, 4}, {6, 2}}, "(t^3+1)^2(t+1)^2"},
    {6, "E6(a2)xA2", {{3, 2}, {6, 2}}, "p_2(t^2-t+1)^2(t^2+t+1)"},
    {6, "E7(a4)xA1", {{2, 2}, {6, 3}}, "p_1(t^2-t+1)^2(t^3+1)"},
    {6, "E8(a8)", {{6, 4}}, "(t^2-t+1)^4"},
};

const std::vector<ClassTableRow> kEmpty;

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

const std::vector<ClassTableRow>& class_table(int r) {
    switch (r) {
        case 6: return kE6Rows;
        case 7: return kE7Rows;
        case 8: return kE8Rows;
        default: return kEmpty;
    }
}

std::set<std::string> carter_labels(int r, int order, const CharPolyFactors& factors) {
    std::set<std::string> out;
    for (const auto& row : class_table(r))
        if (row.order == order && row.factors == factors) out.insert(row.label);
    return out;
}

long long trace_of_factors(const CharPolyFactors& factors) {
    long long t = 0;
    for (auto [d, m] : factors) t += static_cast<long long>(m) * mobius(d);
    return t;
}

const std::vector<CountRow>& count_table() {
    static const std::vector<CountRow> rows = {
        {1, 8, 240, 240}, {2, 7, 126, 56}, {3, 6, 72, 27},
        {4, 5, 40, 16},   {5, 4, 20, 10},  {6, 3, 8, 6},
    };
    return rows;
}

const std::vector<WeylOrderRow>& weyl_order_table() {
    static const std::vector<WeylOrderRow> rows = {
        {3, "A1xA2", 12},    {4, "A4", 120},       {5, "D5", 1920},
        {6, "E6", 51840},    {7, "E7", 2903040},   {8, "E8", 696729600},
    };
    return rows;
}

std::string emit_tables_tsv() {
    std::string s;
    s += "# counts\tdegree\tr\troots\tlines\n";
    for (const auto& c : count_table())
        s += "count\t" + std::to_string(c.degree) + "\t" + std::to_string(c.r) + "\t" +
             std::to_string(c.roots) + "\t" + std::to_string(c.lines) + "\n";
    s += "# weyl\tr\ttype\torder\n";
    for (const auto& w : weyl_order_table())
        s += "weyl\t" + std::to_string(w.r) + "\t" + w.type + "\t" + std::to_string(w.order) + "\n";
    for (int r : {6, 7, 8}) {
        s += "# classes r=" + std::to_string(r) + "\torder\tlabel\tcharpoly\ttrace\n";
        for (const auto& row : class_table(r))
            s += "class\t" + std::to_string(row.order) + "\t" + row.label + "\t" + row.display +
                 "\t" + std::to_string(trace_of_factors(row.factors)) + "\n";
    }
    return s;
}

}  // namespace cremona
