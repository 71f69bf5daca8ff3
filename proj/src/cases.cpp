#include "cases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "actions.hpp"
#include "curves.hpp"
#include "isometry.hpp"
#include "lattice.hpp"
#include "surfaces.hpp"
#include "tables.hpp"

namespace cremona {

namespace {

std::string join_lls(const std::vector<long long>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

/// Multiset of (order, char poly) over the given class-table rows.
std::multiset<std::pair<int, CharPolyFactors>> row_inventory(
    const std::vector<ClassTableRow>& rows) {
    std::multiset<std::pair<int, CharPolyFactors>> out;
    for (const auto& row : rows) out.insert({row.order, row.factors});
    return out;
}

std::multiset<std::pair<int, CharPolyFactors>> class_inventory(
    const std::vector<ConjClassInfo>& classes) {
    std::multiset<std::pair<int, CharPolyFactors>> out;
    for (const auto& c : classes) out.insert({c.inv.order, c.inv.char_poly_factored});
    return out;
}

std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
    return out;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

bool is_identity_perm(const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

}  // namespace

Verdict verify_tables(const SuiteOptions& opts) {
    Verdict v;
    v.case_id = "tables";

    for (const auto& row : count_table()) {
        auto lines = enumerate_minus_one_classes(row.r);
        auto roots = enumerate_roots(row.r);
        v.check("degree " + std::to_string(row.degree) + ": " + std::to_string(row.lines) +
                    " classes with square -1",
                static_cast<int>(lines.size()) == row.lines,
                "found " + std::to_string(lines.size()));
        v.check("degree " + std::to_string(row.degree) + ": " + std::to_string(row.roots) +
                    " roots",
                static_cast<int>(roots.roots.size()) == row.roots,
                "found " + std::to_string(roots.roots.size()));
    }

    for (const auto& row : weyl_order_table()) {
        std::string got = cartan_type(cartan_matrix(simple_roots(row.r)));
        v.check("rank " + std::to_string(row.r) + " simple roots span type " + row.type,
                got == row.type, "diagram type " + got);
    }

    for (int r : {4, 5, 6}) {
        auto gt = GroupTable::generate(r);
        long long expected = 0;
        for (const auto& row : weyl_order_table())
            if (row.r == r) expected = row.order;
        v.check("|W(" + gt.type_label() + ")| = " + std::to_string(expected) +
                    " by exhaustive closure",
                static_cast<long long>(gt.size()) == expected,
                "enumerated " + std::to_string(gt.size()));
    }
    if (opts.allow_large) {
        auto gt = GroupTable::generate(7, true);
        v.check("|W(E7)| = 2903040 by exhaustive closure",
                gt.size() == 2903040u, "enumerated " + std::to_string(gt.size()));
    } else {
        v.note("|W(E7)|", "skipped (needs allow_large); encoded value 2903040");
    }
    return v;
}

Verdict verify_appendix(const SuiteOptions& opts) {
    Verdict v;
    v.case_id = "appendix";

    {
        auto gt = GroupTable::generate(6);
        auto classes = gt.class_partition({2, 3, 6, 9});
        auto want = row_inventory(class_table(6));
        auto got = class_inventory(classes);
        v.check("rank 6: (order, char poly) inventory matches the encoded table exactly",
                got == want,
                std::to_string(classes.size()) + " classes vs " +
                    std::to_string(class_table(6).size()) + " rows");
        int order9 = 0;
        std::set<CharPolyFactors> polys9;
        for (const auto& c : classes)
            if (c.inv.order == 9) {
                ++order9;
                polys9.insert(c.inv.char_poly_factored);
            }
        v.check("rank 6: exactly one order-9 class, char poly t^6+t^3+1",
                order9 == 1 && polys9 == std::set<CharPolyFactors>{{{9, 1}}},
                std::to_string(order9) + " classes");
    }

    if (opts.allow_large) {
        auto gt = GroupTable::generate(7, true);
        auto classes = gt.class_partition({2, 3, 6});
        auto want = row_inventory(class_table(7));
        auto got = class_inventory(classes);
        v.check("rank 7: (order, char poly) inventory matches the encoded table exactly",
                got == want,
                std::to_string(classes.size()) + " classes vs " +
                    std::to_string(class_table(7).size()) + " rows");
        int order6 = 0;
        for (const auto& c : classes)
            if (c.inv.order == 6) ++order6;
        v.check("rank 7: 17 order-6 classes", order6 == 17, std::to_string(order6));
    } else {
        int ok = 0;
        for (const auto& row : class_table(7)) {
            auto w = carter_representative(7, row.label, opts.seed);
            auto inv = class_invariant(w);
            if (inv.order == row.order && inv.char_poly_factored == row.factors) ++ok;
        }
        v.check("rank 7 (reduced): every encoded row admits a constructed representative",
                ok == static_cast<int>(class_table(7).size()),
                std::to_string(ok) + "/" + std::to_string(class_table(7).size()));
        v.note("rank 7 completeness",
               "reduced mode: table completeness is trusted data, not machine-enumerated");
    }

    {
        int ok = 0;
        std::vector<long long> traces3;
        for (const auto& row : class_table(8)) {
            auto w = carter_representative(8, row.label, opts.seed);
            auto inv = class_invariant(w);
            if (inv.order == row.order && inv.char_poly_factored == row.factors) {
                ++ok;
                if (row.order == 3) traces3.push_back(inv.trace_on_Er);
            }
        }
        v.check("rank 8: every encoded row admits a constructed representative",
                ok == static_cast<int>(class_table(8).size()),
                std::to_string(ok) + "/" + std::to_string(class_table(8).size()));
        std::sort(traces3.rbegin(), traces3.rend());
        v.check("rank 8: order-3 traces are {5, 2, -1, -4}",
                traces3 == std::vector<long long>{5, 2, -1, -4}, join_lls(traces3));
        v.note("rank 8 completeness",
               "table completeness is trusted data (the group is not enumerated)");
    }
    return v;
}

Verdict case_dp6() {
    Verdict v;
    v.case_id = "dp6";
    const int r = 3;
    auto g = build_graph(r);
    auto autos = graph_automorphisms(g);
    v.check("the six (-1)-classes form a hexagon (girth 6, all degrees 2)",
            g.vertices.size() == 6 && g.girth() == 6 && g.degree(0) == 2);
    v.check("the hexagon has 12 graph automorphisms", autos.size() == 12,
            std::to_string(autos.size()));

    auto e = [&](int i) { return basis_vector(r, i); };
    Isometry rho = complete_isometry(r, {e(2), e(3), e(1)});
    v.check("the basis rotation e1->e2->e3 extends to an order-3 isometry",
            isometry_order(rho) == 3 && rho.apply(e(0)) == e(0));
    long long tr_pic = trace_on_root_lattice(rho) + 1;
    v.check("rotation trace on Pic is 1", tr_pic == 1, std::to_string(tr_pic));
    v.check("rotation fixed-locus Euler characteristic is 3",
            lefschetz_fixed_euler(rho) == 3);

    auto rho_perm = induced_permutation(g, rho);
    // involutions of the hexagon, their conjugacy types, and which commute
    // with the rotation
    std::vector<std::vector<int>> involutions;
    for (const auto& p : autos)
        if (!is_identity_perm(p) && is_identity_perm(compose_perm(p, p)))
            involutions.push_back(p);
    v.check("the hexagon has 7 involutive automorphisms", involutions.size() == 7,
            std::to_string(involutions.size()));

    std::vector<std::vector<int>> commuting;
    for (const auto& p : involutions)
        if (compose_perm(p, rho_perm) == compose_perm(rho_perm, p)) commuting.push_back(p);
    v.check("exactly one involution commutes with the rotation", commuting.size() == 1,
            std::to_string(commuting.size()));
    if (commuting.size() != 1) return v;
    const auto& anti = commuting.front();

    // its conjugacy class in the automorphism group is a singleton (it is
    // central), distinguishing its type from the six reflections
    std::set<std::vector<int>> conj_class;
    for (const auto& q : autos)
        conj_class.insert(compose_perm(compose_perm(q, anti), invert_perm(q)));
    v.check("the commuting involution is central (conjugacy class of size 1)",
            conj_class.size() == 1, std::to_string(conj_class.size()));
    bool fixed_free = true;
    for (std::size_t i = 0; i < anti.size(); ++i)
        fixed_free = fixed_free && anti[i] != static_cast<int>(i);
    v.check("it is the antipodal map (no fixed vertex)", fixed_free);

    // realize it as a real structure on the lattice
    std::vector<LatticeVector> images;
    for (int i = 1; i <= r; ++i) {
        auto it = std::find(g.vertices.begin(), g.vertices.end(), e(i));
        images.push_back(g.vertices[anti[it - g.vertices.begin()]]);
    }
    Isometry sigma = complete_isometry(r, images);
    LatticeVector want(r, {2, -1, -1, -1});
    v.check("sigma sends e0 to 2e0-e1-e2-e3", sigma.apply(e(0)) == want,
            sigma.apply(e(0)).str());
    bool pencils = true;
    for (int i = 1; i <= r; ++i)
        pencils = pencils && sigma.apply(e(0) - e(i)) == e(0) - e(i);
    v.check("sigma fixes each pencil class e0-ei", pencils);
    v.check("sigma is an involution commuting with the rotation",
            sigma.compose(sigma).is_identity() &&
                sigma.compose(rho) == rho.compose(sigma));

    auto pairs = invariant_exceptional({rho}, sigma, r);
    int disjoint_pairs = 0, singles = 0;
    for (const auto& c : pairs) {
        if (c.pair_index >= 0)
            disjoint_pairs += c.disjoint;
        else
            ++singles;
    }
    v.check("no single (-1)-class is invariant under rotation and sigma", singles == 0,
            std::to_string(singles));
    v.note("conjugate pairs", std::to_string(disjoint_pairs) +
                                  " disjoint conjugate pairs are setwise invariant");

    int rank_pair = invariant_picard_rank({r, {rho}, sigma});
    v.check("invariant Picard rank of <rotation, sigma> is 1", rank_pair == 1,
            std::to_string(rank_pair));
    int rank_rho = invariant_picard_rank({r, {rho}, std::nullopt});
    v.check("invariant Picard rank of the rotation alone is 2", rank_rho == 2,
            std::to_string(rank_rho));
    return v;
}

Verdict case_dp5() {
    Verdict v;
    v.case_id = "dp5";
    const int r = 4;
    auto gt = GroupTable::generate(r);
    v.check("the rank-4 Weyl group has order 120 (the symmetric group S5)",
            gt.size() == 120, std::to_string(gt.size()));

    auto g = build_graph(r);
    v.check("the ten (-1)-classes form the Petersen graph (3-regular, girth 5)",
            g.vertices.size() == 10 && g.degree(0) == 3 && g.girth() == 5);

    // independent oracle: classes <-> 2-subsets of a 5-set; an order-3
    // permutation of 5 points fixes exactly one 2-subset
    {
        std::vector<int> base{0, 1, 2, 3, 4};
        auto perm = base;
        std::set<int> fixed_counts;
        int scanned = 0;
        std::sort(perm.begin(), perm.end());
        do {
            auto sq = compose_perm(perm, perm);
            if (is_identity_perm(perm) || !is_identity_perm(compose_perm(sq, perm)))
                continue;
            ++scanned;
            int fixed = 0;
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) {
                    int pa = perm[a], pb = perm[b];
                    if (std::min(pa, pb) == a && std::max(pa, pb) == b) ++fixed;
                }
            fixed_counts.insert(fixed);
        } while (std::next_permutation(perm.begin(), perm.end()));
        v.check("oracle: each of the 20 order-3 permutations of 5 points fixes one 2-subset",
                scanned == 20 && fixed_counts == std::set<int>{1},
                std::to_string(scanned) + " permutations");
    }

    int n3 = 0, n5 = 0;
    bool fix3_one = true, orbits5_two = true, traces5_zero = true, minimal5 = true;
    bool euler5_two = true, no5_fixed = true;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        int ord = gt.order_of(i);
        if (ord == 3) {
            ++n3;
            auto perm = induced_permutation(g, gt.element(i));
            int fixed = 0;
            for (std::size_t k = 0; k < perm.size(); ++k)
                if (perm[k] == static_cast<int>(k)) ++fixed;
            fix3_one = fix3_one && fixed == 1;
        } else if (ord == 5) {
            ++n5;
            auto w = gt.element(i);
            auto orb = orbits({w}, r);
            orbits5_two = orbits5_two && orb.size() == 2 && orb[0].size() == 5 &&
                          orb[1].size() == 5;
            traces5_zero = traces5_zero && trace_on_root_lattice(w) + 1 == 0;
            minimal5 = minimal5 && cyclic_minimality(w);
            euler5_two = euler5_two && lefschetz_fixed_euler(w) == 2;
            auto perm = induced_permutation(g, w);
            for (std::size_t k = 0; k < perm.size(); ++k)
                if (perm[k] == static_cast<int>(k)) no5_fixed = false;
        }
    }
    v.check("every order-3 element fixes exactly one (-1)-class",
            n3 == 20 && fix3_one, std::to_string(n3) + " elements scanned");
    v.check("every order-5 element splits the classes into two pentagon orbits",
            n5 == 24 && orbits5_two, std::to_string(n5) + " elements scanned");
    v.check("every order-5 element has trace 0 on Pic", traces5_zero);
    v.check("no order-5 element fixes a (-1)-class", no5_fixed);
    v.check("every order-5 element has fixed-locus Euler characteristic 2", euler5_two);
    v.check("every order-5 element is minimal (no eigenvalue 1 on the root lattice)",
            minimal5);

    auto e = [&](int i) { return basis_vector(r, i); };
    auto d = [&](int i, int j) { return e(0) - e(i) - e(j); };
    Isometry w5 = complete_isometry(r, {d(1, 4), d(1, 2), d(2, 4), e(3)});
    LatticeVector want(r, {2, -1, -1, 0, -1});
    v.check("the pentagon permutation completes with e0 -> 2e0-e1-e2-e4",
            isometry_order(w5) == 5 && w5.apply(e(0)) == want, w5.apply(e(0)).str());
    return v;
}

Verdict case_dp4() {
    Verdict v;
    v.case_id = "dp4";
    auto gt = GroupTable::generate(5);
    v.check("the rank-5 Weyl group has order 1920 (exhaustive scan basis)",
            gt.size() == 1920, std::to_string(gt.size()));

    int n10 = 0, n_minus_id = 0;
    std::set<CharPolyFactors> polys3;
    bool order6_obstruction_absent = true;
    std::vector<std::size_t> idx3;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        int ord = gt.order_of(i);
        if (ord == 10) ++n10;
        if (ord == 3) {
            idx3.push_back(i);
            polys3.insert(class_invariant(gt.element(i)).char_poly_factored);
        }
        if (ord == 6) {
            auto inv = class_invariant(gt.element(i));
            if (inv.char_poly_factored == CharPolyFactors{{2, 3}, {3, 1}})
                order6_obstruction_absent = false;
        }
        if (ord == 2 && restriction_is_minus_identity(gt.element(i))) ++n_minus_id;
    }
    v.check("no element of order 10", n10 == 0, std::to_string(n10));
    v.check("order-3 elements all share the char poly (t^2+t+1)(t-1)^3",
            polys3 == std::set<CharPolyFactors>{{{1, 3}, {3, 1}}},
            std::to_string(idx3.size()) + " elements, " + std::to_string(polys3.size()) +
                " polys");
    v.check("no order-6 element has char poly (t+1)^3(t^2+t+1)", order6_obstruction_absent);
    v.check("no involution restricts to minus the identity", n_minus_id == 0,
            std::to_string(n_minus_id));
    v.check("the longest element is not minus the identity",
            !restriction_is_minus_identity(longest_element(5)));

    // directly: an order-3 g and a commuting involution s never multiply to
    // an eigenvalue-1-free element of trace -4
    long long products = 0;
    bool never = true;
    for (std::size_t i : idx3) {
        auto gi = gt.element(i);
        for (std::size_t s : gt.commuting_involutions(i)) {
            if (gt.element(s).is_identity()) continue;
            auto inv = class_invariant(gi.compose(gt.element(s)));
            ++products;
            if (inv.eig1_multiplicity == 0 && inv.trace_on_Er == -4) never = false;
        }
    }
    v.check("no product of an order-3 element and a commuting involution is "
            "eigenvalue-1-free with trace -4",
            never, std::to_string(products) + " products scanned");
    return v;
}

Verdict case_dp3() {
    Verdict v;
    v.case_id = "dp3";
    auto gt = GroupTable::generate(6);
    v.check("the rank-6 Weyl group has order 51840 (exhaustive scan basis)",
            gt.size() == 51840, std::to_string(gt.size()));

    auto classes = gt.class_partition({2, 3, 6, 9});
    std::set<long long> traces3;
    std::set<CharPolyFactors> polys6;
    bool a14_exists = false;
    for (const auto& c : classes) {
        if (c.inv.order == 3) traces3.insert(c.inv.trace_on_Er);
        if (c.inv.order == 6) polys6.insert(c.inv.char_poly_factored);
        if (c.inv.order == 2 && c.inv.char_poly_factored == CharPolyFactors{{1, 2}, {2, 4}})
            a14_exists = true;
    }
    std::set<long long> allowed{-3, 0, 3};
    v.check("order-3 traces lie in {3, 0, -3}",
            std::includes(allowed.begin(), allowed.end(), traces3.begin(), traces3.end()),
            join_lls({traces3.begin(), traces3.end()}));

    // trace-3 branch: neither (t+1)^4(t^2+t+1) nor (t+1)^4(t^2-t+1) occurs
    bool branch3_absent = !polys6.count({{2, 4}, {3, 1}}) && !polys6.count({{2, 4}, {6, 1}});
    v.check("no order-6 element has char poly (t+1)^4(t^2+t+1) or (t+1)^4(t^2-t+1)",
            branch3_absent);

    // trace-0 branch: of the three sign-twist candidates only
    // (t+1)^2(t^2+t+1)(t^2-t+1) occurs, the class A1xA5 of trace -2
    std::vector<CharPolyFactors> candidates = {
        {{2, 2}, {3, 2}}, {{2, 2}, {3, 1}, {6, 1}}, {{2, 2}, {6, 2}}};
    std::vector<int> present;
    for (const auto& cand : candidates) present.push_back(polys6.count(cand) ? 1 : 0);
    v.check("of the trace-0-branch candidates only (t+1)^2(t^2+t+1)(t^2-t+1) occurs",
            present == std::vector<int>{0, 1, 0});
    auto labels = carter_labels(6, 6, candidates[1]);
    v.check("the surviving candidate is the class A1xA5 with trace -2",
            labels == std::set<std::string>{"A1xA5"} &&
                trace_of_factors(candidates[1]) == -2);

    v.check("the involution class A1^4 (char poly p1^4(t-1)^2) exists", a14_exists);
    v.note("scan cardinality", "51840 elements classified exhaustively");
    return v;
}

Verdict case_dp2(const SuiteOptions& opts) {
    Verdict v;
    v.case_id = "dp2";

    // rows of order 6 with no eigenvalue 1, and the order-3 trace-1 row
    std::vector<std::pair<std::string, long long>> eig_free;
    std::set<CharPolyFactors> eig_free_polys;
    std::set<CharPolyFactors> order3_trace1;
    auto harvest = [&](int order, const CharPolyFactors& f, const std::string& label) {
        bool has_one = false;
        for (const auto& [d, m] : f) has_one = has_one || d == 1;
        if (order == 6 && !has_one) {
            eig_free.emplace_back(label, trace_of_factors(f));
            eig_free_polys.insert(f);
        }
        if (order == 3 && trace_of_factors(f) == 1) order3_trace1.insert(f);
    };

    if (opts.allow_large) {
        auto gt = GroupTable::generate(7, true);
        auto classes = gt.class_partition({2, 3, 6});
        for (const auto& c : classes) {
            std::string label = c.inv.carter_candidates.empty()
                                    ? charpoly_pk_string(c.inv.char_poly_factored)
                                    : *c.inv.carter_candidates.begin();
            harvest(c.inv.order, c.inv.char_poly_factored, label);
        }
        v.note("mode", "full enumeration of 2903040 elements");
    } else {
        for (const auto& row : class_table(7)) harvest(row.order, row.factors, row.label);
        v.note("mode",
               "reduced: encoded class table used as ground truth (flagged, not "
               "machine-enumerated)");
    }

    std::sort(eig_free.begin(), eig_free.end());
    std::multiset<long long> traces;
    for (const auto& [label, tr] : eig_free) traces.insert(tr);
    v.check("exactly 4 eigenvalue-1-free order-6 classes",
            eig_free_polys.size() == 4, std::to_string(eig_free_polys.size()));
    v.check("their traces are {-2, -4, -1, 2}",
            traces == std::multiset<long long>{-4, -2, -1, 2},
            join_lls({traces.begin(), traces.end()}));
    v.check("order-3 elements of trace 1 all have char poly p2^2(t-1)^3 (class A2^2)",
            order3_trace1 == std::set<CharPolyFactors>{{{1, 3}, {3, 2}}});

    // sign twists of Sp(A2^2) = {1,1,1,w3,w3bar,w3,w3bar} without eigenvalue 1
    auto twists = sign_twists(spectrum_from_factors({{1, 3}, {3, 2}}), true);
    std::multiset<long long> twist_traces;
    std::set<CharPolyFactors> twist_polys;
    for (const auto& [prof, tr] : twists) {
        twist_traces.insert(tr);
        auto f = spectrum_factors(prof);
        if (f) twist_polys.insert(*f);
    }
    v.check("the sign twists have traces {-5, -3, -1}",
            twist_traces == std::multiset<long long>{-5, -3, -1},
            join_lls({twist_traces.begin(), twist_traces.end()}));

    std::set<CharPolyFactors> survivors;
    for (const auto& f : twist_polys)
        if (eig_free_polys.count(f)) survivors.insert(f);
    bool unique_survivor =
        survivors == std::set<CharPolyFactors>{{{2, 3}, {6, 2}}};
    v.check("exactly one twist matches an eigenvalue-1-free class: (t^3+1)^2(t+1)",
            unique_survivor);
    v.check("the survivor is the class D6(a2)xA1 with trace -1",
            carter_labels(7, 6, {{2, 3}, {6, 2}}) ==
                    std::set<std::string>{"D6(a2)xA1"} &&
                trace_of_factors({{2, 3}, {6, 2}}) == -1);

    v.check("the longest element restricts to minus the identity (Geiser involution)",
            restriction_is_minus_identity(longest_element(7)));

    // K^2 = 2, so an orbit of s (-1)-classes summing to a*K has s = -2a even
    auto K = canonical_class(7);
    v.check("K^2 = 2 in rank 7, forcing even (-1)-class orbits under odd-order groups",
            self_intersection(K) == 2);
    auto all56 = enumerate_minus_one_classes(7);
    auto a = orbit_anticanonical_coefficient(all56);
    v.check("the full 56-class orbit sums to -28K (s = -2a with s even)",
            a && *a == Rational(-28), a ? a->str() : "none");

    v.check("an order-3 quartic action fixes 5 - 3g' points (g'=0: 5, g'=1: 2)",
            riemann_hurwitz_quartic_count(0) == 5 && riemann_hurwitz_quartic_count(1) == 2);
    return v;
}

Verdict case_dp1(const SuiteOptions& opts) {
    Verdict v;
    v.case_id = "dp1";

    std::vector<long long> traces3;
    for (const auto& label : {"A2", "A2^2", "A2^3", "A2^4"}) {
        auto w = carter_representative(8, label, opts.seed);
        auto inv = class_invariant(w);
        if (inv.order == 3) traces3.push_back(inv.trace_on_Er);
    }
    v.check("order-3 representatives A2..A2^4 realize traces {5, 2, -1, -4}",
            traces3 == std::vector<long long>{5, 2, -1, -4}, join_lls(traces3));

    auto w22 = carter_representative(8, "A2^2", opts.seed);
    auto inv22 = class_invariant(w22);
    v.check("A2^2 has char poly p2^2(t-1)^4 and is not minimal",
            inv22.char_poly_factored == CharPolyFactors{{1, 4}, {3, 2}} &&
                inv22.eig1_multiplicity == 4 && !cyclic_minimality(w22));

    auto twists = sign_twists(spectrum_from_factors({{1, 4}, {3, 2}}), true);
    std::multiset<long long> twist_traces;
    std::set<CharPolyFactors> twist_polys;
    for (const auto& [prof, tr] : twists) {
        twist_traces.insert(tr);
        auto f = spectrum_factors(prof);
        if (f) twist_polys.insert(*f);
    }
    v.check("sign twists of Sp(A2^2) without eigenvalue 1 have traces {-6, -4, -2}",
            twist_traces == std::multiset<long long>{-6, -4, -2},
            join_lls({twist_traces.begin(), twist_traces.end()}));

    // match the three twists against the encoded order-6 rows
    std::set<CharPolyFactors> order6_polys;
    for (const auto& row : class_table(8))
        if (row.order == 6) order6_polys.insert(row.factors);
    bool absent = !order6_polys.count({{2, 4}, {3, 2}}) &&
                  !order6_polys.count({{2, 4}, {3, 1}, {6, 1}});
    bool present = order6_polys.count({{2, 4}, {6, 2}}) > 0;
    v.check("twists (t+1)^4(t^2+t+1)^2 and (t+1)^4(t^2+t+1)(t^2-t+1) match no "
            "order-6 row",
            absent);
    v.check("the twist (t+1)^4(t^2-t+1)^2 matches exactly the class D4^2",
            present && carter_labels(8, 6, {{2, 4}, {6, 2}}) ==
                           std::set<std::string>{"D4^2"});

    auto wd42 = carter_representative(8, "D4^2", opts.seed);
    auto invd = class_invariant(wd42);
    v.check("a D4^2 representative exists: order 6, eigenvalue-1-free, trace -2",
            invd.order == 6 && invd.eig1_multiplicity == 0 && invd.trace_on_Er == -2);

    v.check("the longest element restricts to minus the identity (Bertini involution)",
            restriction_is_minus_identity(longest_element(8)));

    auto sols = singular_fiber_solutions();
    std::vector<std::pair<int, int>> want;
    for (int m = 6; m >= 0; --m) want.emplace_back(12 - 2 * m, m);
    std::sort(want.begin(), want.end());
    auto got = sols;
    std::sort(got.begin(), got.end());
    v.check("n_node + 2 n_cusp = 12 has exactly 7 solutions", got == want,
            std::to_string(sols.size()) + " solutions");
    std::vector<std::pair<int, int>> reduced;
    for (auto [n, m] : got)
        if (m >= 2) reduced.emplace_back(n, m - 2);
    v.check("discounting the two conjugate cuspidal fibers leaves "
            "(0,4),(2,3),(4,2),(6,1),(8,0)",
            reduced == std::vector<std::pair<int, int>>{
                           {0, 4}, {2, 3}, {4, 2}, {6, 1}, {8, 0}});
    return v;
}

std::vector<Verdict> run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "tables") return {verify_tables(opts)};
    if (name == "appendix") return {verify_appendix(opts)};
    if (name == "dp6") return {case_dp6()};
    if (name == "dp5") return {case_dp5()};
    if (name == "dp4") return {case_dp4()};
    if (name == "dp3") return {case_dp3()};
    if (name == "dp2") return {case_dp2(opts)};
    if (name == "dp1") return {case_dp1(opts)};
    if (name == "surfaces")
        return {verify_tau0(), verify_g0(), verify_s_alpha_lines(),
                verify_quadric_rotation(), verify_trilinear_forms()};
    if (name == "all") {
        std::vector<Verdict> out;
        for (const auto& n : {"tables", "appendix", "dp6", "dp5", "dp4", "dp3", "dp2",
                              "dp1", "surfaces"})
            for (auto& w : run_suite(n, opts)) out.push_back(std::move(w));
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace cremona
