#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "actions.hpp"
#include "curves.hpp"
#include "group.hpp"
#include "lattice.hpp"

using namespace cremona;

TEST_CASE("hexagon: six classes, 2-regular, girth 6, dihedral symmetry") {
    auto g = build_graph(3);
    CHECK(g.vertices.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(g.degree(i) == 2);
    CHECK(g.girth() == 6);
    CHECK(graph_automorphisms(g).size() == 12);
}

TEST_CASE("Petersen graph: ten classes, 3-regular, girth 5, S5 symmetry") {
    auto g = build_graph(4);
    CHECK(g.vertices.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(g.degree(i) == 3);
    CHECK(g.girth() == 5);
    CHECK(graph_automorphisms(g).size() == 120);
}

TEST_CASE("27 lines: 10-regular incidence graph") {
    auto g = build_graph(6);
    CHECK(g.vertices.size() == 27);
    for (int i = 0; i < 27; ++i) CHECK(g.degree(i) == 10);
}

TEST_CASE("isometries induce graph automorphisms") {
    auto g = build_graph(4);
    for (const auto& alpha : simple_roots(4).alphas) {
        auto perm = induced_permutation(g, reflection(alpha));
        std::set<int> image(perm.begin(), perm.end());
        CHECK(image.size() == g.vertices.size());
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
                CHECK(g.adj[i][j] == g.adj[perm[i]][perm[j]]);
    }
}

TEST_CASE("orbit partition under the full reflection set is a single orbit") {
    std::vector<Isometry> gens;
    for (const auto& alpha : simple_roots(5).alphas) gens.push_back(reflection(alpha));
    auto parts = orbits(gens, 5);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].size() == 16);
}

TEST_CASE("trivial action fixes every class") {
    auto parts = orbits({}, 3);
    CHECK(parts.size() == 6);
}

TEST_CASE("invariant classes and conjugate pairs") {
    int r = 3;
    auto e = [&](int i) { return basis_vector(r, i); };
    auto d = [&](int i, int j) { return e(0) - e(i) - e(j); };
    // the antipodal real structure pairs each e_i with the opposite d_jk
    auto sigma = complete_isometry(r, {d(2, 3), d(1, 3), d(1, 2)});
    auto cfg = invariant_exceptional({}, sigma, r);
    int singles = 0, pairs = 0, disjoint = 0;
    for (const auto& c : cfg) {
        if (c.pair_index < 0) {
            ++singles;
        } else {
            ++pairs;
            disjoint += c.disjoint;
        }
    }
    CHECK(singles == 0);
    CHECK(pairs == 3);
    CHECK(disjoint == 3);
}

TEST_CASE("anticanonical orbit coefficients") {
    auto a56 = orbit_anticanonical_coefficient(enumerate_minus_one_classes(7));
    REQUIRE(a56.has_value());
    CHECK(*a56 == Rational(-28));
    auto a6 = orbit_anticanonical_coefficient(enumerate_minus_one_classes(3));
    REQUIRE(a6.has_value());
    CHECK(*a6 == Rational(-1));
    // a single class is never proportional to K
    CHECK(!orbit_anticanonical_coefficient({enumerate_minus_one_classes(3)[0]}));
}

TEST_CASE("graph exports mention every vertex") {
    auto g = build_graph(3);
    auto dot = graph_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    auto js = graph_json(g);
    CHECK(js.find("\"edges\"") != std::string::npos);
}
