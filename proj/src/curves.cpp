#include "curves.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace cremona {

int IncidenceGraph::degree(int i) const {
    int d = 0;
    for (char e : adj[i]) d += e;
    return d;
}

int IncidenceGraph::girth() const {
    // shortest cycle through BFS from every vertex
    int n = static_cast<int>(vertices.size());
    int best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (!adj[v][w]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

IncidenceGraph build_graph(int r) {
    IncidenceGraph g;
    g.r = r;
    g.vertices = enumerate_minus_one_classes(r);
    int n = static_cast<int>(g.vertices.size());
    g.adj.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long p = intersect(g.vertices[i], g.vertices[j]);
            if (p < 0 || p > 3)
                throw std::logic_error("unexpected pairing between (-1)-classes");
            g.adj[i][j] = g.adj[j][i] = (p == 1);
        }
    return g;
}

std::vector<std::vector<int>> graph_automorphisms(const IncidenceGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> out;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img] || deg[img] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.adj[u][v] != g.adj[perm[u]][img]) ok = false;
            if (!ok) continue;
            perm[v] = img;
            used[img] = 1;
            place(v + 1);
            used[img] = 0;
            perm[v] = -1;
        }
    };
    place(0);
    return out;
}

std::vector<int> induced_permutation(const IncidenceGraph& g, const Isometry& w) {
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        LatticeVector img = w.apply(g.vertices[i]);
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), img);
        if (it == g.vertices.end() || !(*it == img))
            throw std::invalid_argument("isometry does not permute the (-1)-classes");
        perm[i] = static_cast<int>(it - g.vertices.begin());
    }
    return perm;
}

std::vector<std::vector<int>> orbits(const std::vector<Isometry>& action, int r) {
    IncidenceGraph g = build_graph(r);
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> perms;
    for (const auto& w : action) perms.push_back(induced_permutation(g, w));
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> orbit{i};
        comp[i] = i;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const auto& p : perms) {
                int img = p[orbit[head]];
                if (comp[img] < 0) {
                    comp[img] = i;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<InvariantConfig> invariant_exceptional(const std::vector<Isometry>& action,
                                                   const std::optional<Isometry>& sigma, int r) {
    if (sigma) {
        if (!isometry_order(*sigma) || !sigma->compose(*sigma).is_identity())
            throw std::invalid_argument("sigma must be an involution");
    }
    IncidenceGraph g = build_graph(r);
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> perms;
    for (const auto& w : action) perms.push_back(induced_permutation(g, w));
    std::vector<int> sp;
    if (sigma) sp = induced_permutation(g, *sigma);

    std::vector<InvariantConfig> out;
    for (int i = 0; i < n; ++i) {
        bool fixed = true;
        for (const auto& p : perms)
            if (p[i] != i) fixed = false;
        if (!fixed) continue;
        if (!sigma || sp[i] == i) {
            out.push_back({i, -1, false});
        } else if (sp[i] > i) {
            // conjugate pair {L, sigma L}; invariant iff each generator
            // preserves the two-element set, which fixing L already gives
            InvariantConfig c;
            c.index = i;
            c.pair_index = sp[i];
            c.disjoint = intersect(g.vertices[i], g.vertices[sp[i]]) == 0;
            out.push_back(c);
        }
    }
    // setwise-invariant pairs where the generators swap the two members
    if (sigma) {
        for (int i = 0; i < n; ++i) {
            int j = sp[i];
            if (j <= i) continue;
            bool setwise = true, pointwise = true;
            for (const auto& p : perms) {
                if (!((p[i] == i && p[j] == j) || (p[i] == j && p[j] == i))) setwise = false;
                if (p[i] != i || p[j] != j) pointwise = false;
            }
            if (!setwise || pointwise) continue;  // pointwise case handled above
            InvariantConfig c;
            c.index = i;
            c.pair_index = j;
            c.disjoint = intersect(g.vertices[i], g.vertices[j]) == 0;
            out.push_back(c);
        }
    }
    return out;
}

std::optional<Rational> orbit_anticanonical_coefficient(
    const std::vector<LatticeVector>& orbit) {
    if (orbit.empty()) throw std::invalid_argument("empty orbit");
    int r = orbit.front().r;
    LatticeVector sum(r, std::vector<long long>(r + 1, 0));
    for (const auto& v : orbit) sum = sum + v;
    LatticeVector k = canonical_class(r);
    // sum = a k  =>  a = (sum . K) / K^2; then verify coordinatewise
    Rational a(intersect(sum, k), self_intersection(k));
    for (int i = 0; i <= r; ++i)
        if (Rational(sum.coords[i]) != a * Rational(k.coords[i])) return std::nullopt;
    return a;
}

std::string graph_dot(const IncidenceGraph& g) {
    std::string s = "graph lines_r" + std::to_string(g.r) + " {\n";
    int n = static_cast<int>(g.vertices.size());
    for (int i = 0; i < n; ++i)
        s += "  v" + std::to_string(i) + " [label=\"" + g.vertices[i].str() + "\"];\n";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adj[i][j]) s += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    return s + "}\n";
}

std::string graph_json(const IncidenceGraph& g) {
    std::string s = "{\"r\":" + std::to_string(g.r) + ",\"vertices\":[";
    int n = static_cast<int>(g.vertices.size());
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += "[";
        for (int c = 0; c <= g.r; ++c) {
            if (c) s += ",";
            s += std::to_string(g.vertices[i].coords[c]);
        }
        s += "]";
    }
    s += "],\"edges\":[";
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adj[i][j]) {
                if (!first) s += ",";
                first = false;
                s += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            }
    return s + "]}";
}

}  // namespace cremona
