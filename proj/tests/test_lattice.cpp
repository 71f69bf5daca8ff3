#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "isometry.hpp"
#include "lattice.hpp"

using namespace cremona;

TEST_CASE("intersection form is diagonal with signature (1, r)") {
    for (int r = 1; r <= 8; ++r) {
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= r; ++j) {
                long long expect = i != j ? 0 : (i == 0 ? 1 : -1);
                CHECK(intersect(basis_vector(r, i), basis_vector(r, j)) == expect);
            }
    }
}

TEST_CASE("canonical class has the right self-intersection") {
    for (int r = 1; r <= 8; ++r) {
        auto K = canonical_class(r);
        CHECK(self_intersection(K) == 9 - r);
        CHECK(intersect(K, basis_vector(r, 0)) == -3);
    }
}

TEST_CASE("root and (-1)-class counts match the reference table") {
    const int roots_expected[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
    const int lines_expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int r = 1; r <= 8; ++r) {
        CHECK(static_cast<int>(enumerate_roots(r).roots.size()) == roots_expected[r]);
        CHECK(static_cast<int>(enumerate_minus_one_classes(r).size()) == lines_expected[r]);
    }
}

TEST_CASE("every enumerated root really is a root, and closure adds nothing") {
    for (int r = 3; r <= 8; ++r) {
        auto K = canonical_class(r);
        auto roots = enumerate_roots(r).roots;
        std::set<LatticeVector> set(roots.begin(), roots.end());
        for (const auto& s : roots) {
            CHECK(self_intersection(s) == -2);
            CHECK(intersect(s, K) == 0);
            CHECK(set.count(-s) == 1);
        }
        // independent oracle: the set is closed under all its own reflections
        auto basis = simple_roots(r);
        for (const auto& alpha : basis.alphas) {
            auto refl = reflection(alpha);
            for (const auto& s : roots) CHECK(set.count(refl.apply(s)) == 1);
        }
    }
}

TEST_CASE("(-1)-classes form a single orbit under the simple reflections") {
    for (int r = 3; r <= 7; ++r) {
        auto lines = enumerate_minus_one_classes(r);
        std::set<LatticeVector> all(lines.begin(), lines.end());
        std::vector<Isometry> gens;
        for (const auto& alpha : simple_roots(r).alphas) gens.push_back(reflection(alpha));

        std::set<LatticeVector> orbit{basis_vector(r, r)};
        std::vector<LatticeVector> frontier{basis_vector(r, r)};
        while (!frontier.empty()) {
            auto v = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                auto w = g.apply(v);
                if (orbit.insert(w).second) frontier.push_back(w);
            }
        }
        CHECK(orbit == all);
    }
}

TEST_CASE("simple root basis has the expected pairings") {
    for (int r = 3; r <= 8; ++r) {
        auto basis = simple_roots(r);
        REQUIRE(static_cast<int>(basis.alphas.size()) == r);
        auto K = canonical_class(r);
        for (const auto& alpha : basis.alphas) {
            CHECK(self_intersection(alpha) == -2);
            CHECK(intersect(alpha, K) == 0);
        }
        // chain alpha_2 .. alpha_r, with alpha_1 attached to alpha_4
        for (int i = 1; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                CHECK(intersect(basis.alphas[i], basis.alphas[j]) == (j == i + 1 ? 1 : 0));
        if (r >= 4)
            CHECK(intersect(basis.alphas[0], basis.alphas[3]) == 1);
    }
}

TEST_CASE("diagram classifier names the familiar types") {
    const char* types[] = {"", "", "", "A1xA2", "A4", "D5", "E6", "E7", "E8"};
    for (int r = 3; r <= 8; ++r)
        CHECK(cartan_type(cartan_matrix(simple_roots(r))) == types[r]);
}

TEST_CASE("vector arithmetic and ordering") {
    LatticeVector a(3, {1, -1, 0, 2});
    LatticeVector b(3, {0, 1, 1, 1});
    CHECK((a + b).coords == std::vector<long long>{1, 0, 1, 3});
    CHECK((a - b).coords == std::vector<long long>{1, -2, -1, 1});
    CHECK((-a).coords == std::vector<long long>{-1, 1, 0, -2});
    CHECK((a * 3).coords == std::vector<long long>{3, -3, 0, 6});
    CHECK(b < a);
    CHECK_THROWS(LatticeVector(3, {1, 2}));
}
