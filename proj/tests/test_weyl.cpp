#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "group.hpp"
#include "lattice.hpp"
#include "tables.hpp"

using namespace cremona;

TEST_CASE("isometry validation rejects non-isometries") {
    int r = 3;
    auto id = Isometry::identity(r);
    CHECK(id.is_identity());
    IntMat bad = id.m;
    bad[1][1] = 2;
    CHECK_THROWS(Isometry(r, bad));
    // permuting e0 into e1 breaks the form
    IntMat swap = id.m;
    std::swap(swap[0], swap[1]);
    CHECK_THROWS(Isometry(r, swap));
}

TEST_CASE("reflections are involutive isometries fixing K") {
    for (int r = 3; r <= 8; ++r) {
        auto K = canonical_class(r);
        for (const auto& alpha : simple_roots(r).alphas) {
            auto s = reflection(alpha);
            CHECK(s.compose(s).is_identity());
            CHECK(s.apply(K) == K);
            CHECK(s.apply(alpha) == -alpha);
            CHECK(s.inverse() == s);
        }
    }
}

TEST_CASE("inverse and composition behave") {
    auto alphas = simple_roots(6).alphas;
    auto w = reflection(alphas[0]).compose(reflection(alphas[3])).compose(
        reflection(alphas[5]));
    CHECK(w.compose(w.inverse()).is_identity());
    CHECK(w.inverse().compose(w).is_identity());
}

TEST_CASE("exhaustive closure reproduces the group orders") {
    std::map<int, long long> expected{{3, 12}, {4, 120}, {5, 1920}, {6, 51840}};
    for (const auto& [r, order] : expected) {
        auto gt = GroupTable::generate(r);
        CHECK(static_cast<long long>(gt.size()) == order);
        // index lookups are consistent
        auto w = gt.element(order / 2);
        auto idx = gt.index_of(w);
        REQUIRE(idx.has_value());
        CHECK(*idx == static_cast<std::size_t>(order / 2));
    }
}

TEST_CASE("rank 7 enumeration is refused without the resource flag") {
    CHECK_THROWS_AS(GroupTable::generate(7), ResourceError);
    CHECK_THROWS_AS(GroupTable::generate(8, true), ResourceError);
}

TEST_CASE("char polys of small Coxeter elements") {
    // the rank-4 Coxeter element has order 5 and char poly p4 = Phi_5
    auto alphas = simple_roots(4).alphas;
    auto cox = Isometry::identity(4);
    for (const auto& a : alphas) cox = cox.compose(reflection(a));
    auto inv = class_invariant(cox);
    CHECK(inv.order == 5);
    CHECK(inv.char_poly_factored == CharPolyFactors{{5, 1}});
    CHECK(inv.trace_on_Er == -1);
    CHECK(inv.eig1_multiplicity == 0);
}

TEST_CASE("class partition of the rank-4 group matches the symmetric group S5") {
    auto gt = GroupTable::generate(4);
    // elements of order 2 and 3 in S5: transpositions (10) + double
    // transpositions (15); 3-cycles (20)
    auto classes = gt.class_partition({2, 3});
    std::multiset<std::pair<int, std::size_t>> got;
    for (const auto& c : classes) got.insert({c.inv.order, c.size});
    CHECK(got == std::multiset<std::pair<int, std::size_t>>{{2, 10}, {2, 15}, {3, 20}});
}

TEST_CASE("longest element is minus the identity exactly for ranks 7 and 8") {
    CHECK(!restriction_is_minus_identity(longest_element(5)));
    CHECK(!restriction_is_minus_identity(longest_element(6)));
    CHECK(restriction_is_minus_identity(longest_element(7)));
    CHECK(restriction_is_minus_identity(longest_element(8)));
    for (int r : {5, 6, 7, 8}) CHECK(isometry_order(longest_element(r)) == 2);
}

TEST_CASE("encoded rank-6 rows all admit representatives") {
    for (const auto& row : class_table(6)) {
        auto w = carter_representative(6, row.label);
        auto inv = class_invariant(w);
        CHECK(inv.order == row.order);
        CHECK(inv.char_poly_factored == row.factors);
        CHECK(inv.carter_candidates.count(row.label) == 1);
    }
}

TEST_CASE("representatives can be requested by invariant") {
    ClassInvariant target;
    target.order = 3;
    target.char_poly_factored = {{1, 4}, {3, 2}};  // rank 8, class A2^2
    auto w = carter_representative(8, target);
    auto inv = class_invariant(w);
    CHECK(inv.order == 3);
    CHECK(inv.trace_on_Er == 2);
}

TEST_CASE("unknown labels are rejected") {
    CHECK_THROWS(carter_representative(6, "Z9"));
    CHECK_THROWS(carter_representative(5, "A2"));  // no encoded table for rank 5
}

TEST_CASE("root embedding respects the requested Gram matrix") {
    // two orthogonal A2 components in rank 6
    std::vector<std::vector<int>> gram = {
        {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    auto roots = find_root_embedding(6, gram);
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(intersect((*roots)[i], (*roots)[j]) == gram[i][j]);
    auto w = reflection_product(6, *roots);
    CHECK(isometry_order(w) == 3);
}

TEST_CASE("orders are capped") {
    CHECK(rank_of_type("E6") == 6);
    CHECK(type_of_rank(6) == "E6");
    CHECK_THROWS(rank_of_type("Z1"));
}
