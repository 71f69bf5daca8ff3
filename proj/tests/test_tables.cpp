#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "isometry.hpp"
#include "tables.hpp"

using namespace cremona;

TEST_CASE("encoded class tables have the expected shape") {
    CHECK(class_table(6).size() == 15);
    CHECK(class_table(7).size() == 29);
    CHECK(class_table(8).size() == 32);
    CHECK(class_table(5).empty());
}

TEST_CASE("each row's char poly has the right degree and plausible order") {
    for (int r : {6, 7, 8}) {
        for (const auto& row : class_table(r)) {
            int degree = 0;
            int lcm = 1;
            for (const auto& [d, m] : row.factors) {
                degree += euler_phi(d) * m;
                lcm = lcm / std::gcd(lcm, d) * d;
            }
            CHECK(degree == r);
            // the char poly determines the order up to the eigenvalue content
            CHECK(lcm == row.order);
        }
    }
}

TEST_CASE("row displays expand to the same polynomial as the factors") {
    for (int r : {6, 7, 8})
        for (const auto& row : class_table(r)) {
            auto expanded = expand_factors(row.factors);
            CHECK(static_cast<int>(expanded.size()) == r + 1);
            // sanity: the product of cyclotomics is monic with constant +-1
            CHECK(expanded.back() == 1);
            CHECK((expanded.front() == 1 || expanded.front() == -1));
        }
}

TEST_CASE("traces derived from the factorizations match the published values") {
    // rank-6 table: (order, label) -> trace
    std::multiset<long long> traces6;
    for (const auto& row : class_table(6)) traces6.insert(trace_of_factors(row.factors));
    CHECK(traces6 == std::multiset<long long>{4, 2, 0, -2,      // order 2
                                              3, 0, -3,         // order 3
                                              1, 1, -2, -1, 1, -2, 0,  // order 6
                                              0});              // order 9
    // rank-8 order-3 rows
    std::multiset<long long> traces8;
    for (const auto& row : class_table(8))
        if (row.order == 3) traces8.insert(trace_of_factors(row.factors));
    CHECK(traces8 == std::multiset<long long>{5, 2, -1, -4});
}

TEST_CASE("primed rank-7 labels share char polys pairwise") {
    auto labels = carter_labels(7, 2, {{1, 4}, {2, 3}});
    CHECK(labels == std::set<std::string>{"(A1^3)'", "(A1^3)''"});
    auto a5 = carter_labels(7, 6, {{1, 2}, {2, 1}, {3, 1}, {6, 1}});
    CHECK(a5 == std::set<std::string>{"(A5)'", "(A5)''"});
}

TEST_CASE("lookup misses return the empty set") {
    CHECK(carter_labels(6, 7, {{7, 1}}).empty());
}

TEST_CASE("count and order tables carry the published numbers") {
    std::set<std::pair<int, int>> lines;
    for (const auto& row : count_table()) lines.insert({row.degree, row.lines});
    CHECK(lines == std::set<std::pair<int, int>>{
                       {1, 240}, {2, 56}, {3, 27}, {4, 16}, {5, 10}, {6, 6}});
    long long e7 = 0;
    for (const auto& row : weyl_order_table())
        if (row.type == "E7") e7 = row.order;
    CHECK(e7 == 2903040);
}

TEST_CASE("TSV emission covers every encoded table") {
    auto tsv = emit_tables_tsv();
    for (const char* needle :
         {"27", "2903040", "D6(a2)xA1", "E6(a1)", "t^6+t^3+1", "D4^2"})
        CHECK(tsv.find(needle) != std::string::npos);
}

TEST_CASE("p_k display notation round-trips familiar factorizations") {
    CHECK(charpoly_pk_string({{1, 2}, {2, 4}}) == "p_1^4(t-1)^2");
    CHECK(charpoly_pk_string({{9, 1}}) == "(t^6+t^3+1)");
}
