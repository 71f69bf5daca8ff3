#include "actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "group.hpp"
#include "rational.hpp"
#include "tables.hpp"

namespace cremona {

std::vector<Isometry> close_action(const ActionSpec& spec, std::size_t cap) {
    std::vector<Isometry> gens = spec.generators;
    if (spec.sigma) {
        if (!spec.sigma->compose(*spec.sigma).is_identity())
            throw std::invalid_argument("sigma must be an involution");
        for (const auto& g : spec.generators)
            if (!(g.compose(*spec.sigma) == spec.sigma->compose(g)))
                throw std::invalid_argument("sigma must commute with every generator");
        gens.push_back(*spec.sigma);
    }
    for (const auto& g : gens)
        if (g.r != spec.r) throw std::invalid_argument("generator degree mismatch");

    std::set<Isometry> seen{Isometry::identity(spec.r)};
    std::vector<Isometry> elems(seen.begin(), seen.end());
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Isometry next = g.compose(elems[head]);
            if (seen.insert(next).second) {
                elems.push_back(next);
                if (elems.size() > cap)
                    throw ResourceError("group closure exceeded the element cap");
            }
        }
    }
    return elems;
}

int fixed_sublattice_rank(const std::vector<Isometry>& group) {
    if (group.empty()) throw std::invalid_argument("empty group");
    int n = group.front().r + 1;
    // kernel rank of (sum of matrices - |H| id) over Q
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& h : group)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] += Rational(h.m[i][j]);
    for (int i = 0; i < n; ++i) a[i][i] -= Rational(static_cast<long long>(group.size()));
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int row = rank; row < n; ++row)
            if (!a[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rational inv = Rational(1) / a[rank][col];
        for (int j = 0; j < n; ++j) a[rank][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == rank || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (int j = 0; j < n; ++j) a[row][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return n - rank;
}

int invariant_picard_rank(const ActionSpec& spec, std::size_t cap) {
    auto elems = close_action(spec, cap);
    long long total = 0;
    for (const auto& h : elems) {
        long long tr_pic = 0;
        for (int i = 0; i <= spec.r; ++i) tr_pic += h.m[i][i];
        total += tr_pic - 1;  // trace on E_r = trace on Pic minus the K-line
    }
    long long count = static_cast<long long>(elems.size());
    if (total % count != 0)
        throw std::logic_error("trace average is not an integer");
    int rank = static_cast<int>(1 + total / count);
    int oracle = fixed_sublattice_rank(elems);
    if (rank != oracle)
        throw std::logic_error("character formula disagrees with the fixed-sublattice rank");
    return rank;
}

bool cyclic_minimality(const Isometry& g) {
    return class_invariant(g).eig1_multiplicity == 0;
}

long long lefschetz_fixed_euler(const Isometry& h) {
    return trace_on_root_lattice(h) + 3;
}

namespace {

std::pair<int, int> reduced_root(int k, int d) {
    k = ((k % d) + d) % d;
    int g = std::gcd(k == 0 ? d : k, d);
    return {d / g, k / g};
}

}  // namespace

SpectrumProfile spectrum_from_factors(const CharPolyFactors& f) {
    SpectrumProfile p;
    for (auto [d, mult] : f)
        for (int k = 0; k < d; ++k) {
            if (std::gcd(k == 0 ? d : k, d) != 1 && !(d == 1 && k == 0)) continue;
            for (int c = 0; c < mult; ++c) p.entries.emplace_back(d, k);
        }
    std::sort(p.entries.begin(), p.entries.end());
    return p;
}

bool spectrum_real_closed(const SpectrumProfile& p) {
    std::map<std::pair<int, int>, int> count;
    for (auto e : p.entries) ++count[e];
    for (auto& [e, c] : count) {
        auto conj = reduced_root(e.first - e.second, e.first);
        auto it = count.find(conj);
        if (it == count.end() || it->second != c) return false;
    }
    return true;
}

std::optional<CharPolyFactors> spectrum_factors(const SpectrumProfile& p) {
    std::map<std::pair<int, int>, int> count;
    for (auto e : p.entries) ++count[e];
    std::map<int, int> mult;  // cyclotomic index -> multiplicity
    for (auto& [e, c] : count) {
        auto it = mult.find(e.first);
        if (it == mult.end())
            mult[e.first] = c;
        else if (it->second != c)
            return std::nullopt;
    }
    // every primitive residue must appear with the common multiplicity
    for (auto& [d, m] : mult) {
        int seen = 0;
        for (auto& [e, c] : count)
            if (e.first == d) ++seen;
        if (seen != euler_phi(d)) return std::nullopt;
    }
    CharPolyFactors f(mult.begin(), mult.end());
    return f;
}

std::vector<std::pair<SpectrumProfile, long long>> sign_twists(const SpectrumProfile& p,
                                                               bool exclude_one) {
    if (!spectrum_real_closed(p))
        throw std::invalid_argument("spectrum is not closed under conjugation");

    // units: each real eigenvalue individually, each conjugate pair jointly
    std::map<std::pair<int, int>, int> count;
    for (auto e : p.entries) ++count[e];
    struct Unit {
        std::vector<std::pair<int, int>> members;  // one or two entries
    };
    std::vector<Unit> units;
    for (auto& [e, c] : count) {
        auto conj = reduced_root(e.first - e.second, e.first);
        if (conj == e) {
            for (int i = 0; i < c; ++i) units.push_back({{e}});
        } else if (e < conj) {
            for (int i = 0; i < c; ++i) units.push_back({{e, conj}});
        }
    }
    if (units.size() > 20) throw std::invalid_argument("spectrum too large for twisting");

    auto negate = [](std::pair<int, int> e) {
        // multiply exp(2 pi i k/d) by -1: add 1/2 to k/d
        int d = e.first, k = e.second;
        return reduced_root(2 * k + d, 2 * d);
    };

    std::set<SpectrumProfile> seen;
    std::vector<std::pair<SpectrumProfile, long long>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << units.size()); ++mask) {
        SpectrumProfile q;
        for (std::size_t u = 0; u < units.size(); ++u)
            for (auto e : units[u].members)
                q.entries.push_back(mask >> u & 1 ? negate(e) : e);
        std::sort(q.entries.begin(), q.entries.end());
        if (exclude_one &&
            std::find(q.entries.begin(), q.entries.end(), std::make_pair(1, 0)) !=
                q.entries.end())
            continue;
        auto f = spectrum_factors(q);
        if (!f) continue;  // non-integer char poly
        if (!seen.insert(q).second) continue;
        out.emplace_back(q, trace_of_factors(*f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Isometry complete_isometry(int r, const std::vector<LatticeVector>& images) {
    if (static_cast<int>(images.size()) != r)
        throw std::invalid_argument(
            "completion needs the images of all of e_1..e_r; partial data is under-determined");
    LatticeVector sum(r, std::vector<long long>(r + 1, 0));
    for (const auto& v : images) {
        if (v.r != r) throw std::invalid_argument("degree mismatch in image");
        sum = sum + v;
    }
    LatticeVector num = sum - canonical_class(r);
    std::vector<long long> e0(r + 1);
    for (int i = 0; i <= r; ++i) {
        if (num.coords[i] % 3 != 0)
            throw std::invalid_argument("completion is not integral: no valid e_0 image");
        e0[i] = num.coords[i] / 3;
    }
    IntMat m(r + 1, std::vector<long long>(r + 1));
    for (int i = 0; i <= r; ++i) {
        m[i][0] = e0[i];
        for (int j = 1; j <= r; ++j) m[i][j] = images[j - 1].coords[i];
    }
    return Isometry(r, m);  // constructor validates form and K
}

int riemann_hurwitz_quartic_count(int genus_quotient) {
    // order-3 action on a genus-3 curve: 2g-2 = 3(2g'-2) + 2N forces
    // N = 5 - 3g', and N >= 0 restricts g' to {0, 1}
    if (genus_quotient != 0 && genus_quotient != 1)
        throw std::invalid_argument("quotient genus must be 0 or 1");
    return 5 - 3 * genus_quotient;
}

std::vector<std::pair<int, int>> singular_fiber_solutions() {
    std::vector<std::pair<int, int>> out;
    for (int cusp = 0; 2 * cusp <= 12; ++cusp) out.emplace_back(12 - 2 * cusp, cusp);
    return out;
}

}  // namespace cremona
