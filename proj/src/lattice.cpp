#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace cremona {

LatticeVector::LatticeVector(int r_, std::vector<long long> c) : r(r_), coords(std::move(c)) {
    if (r < 1 || r > 8) throw std::invalid_argument("degree r out of range 1..8");
    if (coords.size() != static_cast<size_t>(r + 1))
        throw std::invalid_argument("coordinate array length must be r+1");
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    if (r != o.r) throw std::invalid_argument("degree mismatch");
    auto c = coords;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords[i];
    return LatticeVector(r, c);
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    return *this + (-o);
}

LatticeVector LatticeVector::operator-() const {
    auto c = coords;
    for (auto& x : c) x = -x;
    return LatticeVector(r, c);
}

LatticeVector LatticeVector::operator*(long long k) const {
    auto c = coords;
    for (auto& x : c) x *= k;
    return LatticeVector(r, c);
}

std::string LatticeVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

LatticeVector basis_vector(int r, int i) {
    std::vector<long long> c(r + 1, 0);
    c.at(i) = 1;
    return LatticeVector(r, c);
}

long long intersect(const LatticeVector& u, const LatticeVector& v) {
    if (u.r != v.r) throw std::invalid_argument("degree mismatch");
    long long s = u.coords[0] * v.coords[0];
    for (int i = 1; i <= u.r; ++i) s -= u.coords[i] * v.coords[i];
    return s;
}

long long self_intersection(const LatticeVector& v) { return intersect(v, v); }

LatticeVector canonical_class(int r) {
    if (r < 1 || r > 8) throw std::invalid_argument("degree r out of range 1..8");
    std::vector<long long> c(r + 1, 1);
    c[0] = -3;
    return LatticeVector(r, c);
}

namespace {

// Enumerates all v with v^2 = square and v.K = pair_k.  Writing
// S = sum_{i>=1} v_i and Q = sum_{i>=1} v_i^2, the constraints become
// S = -3 v0 - pair_k and Q = v0^2 - square, and every partial assignment is
// pruned by the Cauchy-Schwarz bound S_rem^2 <= m * Q_rem on the m remaining
// coordinates.
std::vector<LatticeVector> scan(int r, long long square, long long pair_k) {
    std::vector<LatticeVector> out;
    std::vector<long long> c(r + 1, 0);

    std::function<void(int, long long, long long)> fill =
        [&](int i, long long s_rem, long long q_rem) {
            int m = r - i + 1;
            if (m == 0) {
                if (s_rem == 0 && q_rem == 0) out.emplace_back(r, c);
                return;
            }
            if (s_rem * s_rem > m * q_rem) return;
            long long bound = static_cast<long long>(std::sqrt(static_cast<double>(q_rem))) + 1;
            for (long long v = -bound; v <= bound; ++v) {
                if (v * v > q_rem) continue;
                c[i] = v;
                fill(i + 1, s_rem - v, q_rem - v * v);
            }
            c[i] = 0;
        };

    for (long long v0 = -12; v0 <= 12; ++v0) {
        long long s = -3 * v0 - pair_k;
        long long q = v0 * v0 - square;
        if (q < 0 || s * s > r * q) continue;
        c[0] = v0;
        fill(1, s, q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RootSet enumerate_roots(int r) {
    if (r < 1 || r > 8) throw std::invalid_argument("degree r out of range 1..8");
    RootSet rs;
    rs.r = r;
    rs.roots = scan(r, -2, 0);
    return rs;
}

std::vector<LatticeVector> enumerate_minus_one_classes(int r) {
    if (r < 1 || r > 8) throw std::invalid_argument("degree r out of range 1..8");
    return scan(r, -1, -1);
}

SimpleRootBasis simple_roots(int r) {
    if (r < 3) throw std::invalid_argument("simple roots need r >= 3");
    if (r > 8) throw std::invalid_argument("degree r out of range 1..8");
    SimpleRootBasis b;
    b.r = r;
    std::vector<long long> a1(r + 1, 0);
    a1[0] = 1;
    a1[1] = a1[2] = a1[3] = -1;
    b.alphas.emplace_back(r, a1);
    for (int i = 2; i <= r; ++i) {
        std::vector<long long> ai(r + 1, 0);
        ai[i - 1] = 1;
        ai[i] = -1;
        b.alphas.emplace_back(r, ai);
    }
    return b;
}

std::vector<std::vector<long long>> cartan_matrix(const SimpleRootBasis& basis) {
    size_t n = basis.alphas.size();
    std::vector<std::vector<long long>> cm(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            cm[i][j] = -intersect(basis.alphas[i], basis.alphas[j]);
    return cm;
}

namespace {

std::string classify_component(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& nodes) {
    int n = static_cast<int>(nodes.size());
    if (n == 1) return "A1";
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[nodes[i]].size());
    int branch = -1, leaves = 0;
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 3) return "unknown";
        if (deg[i] == 3) {
            if (branch >= 0) return "unknown";
            branch = i;
        }
        if (deg[i] == 1) ++leaves;
    }
    if (branch < 0) {
        if (leaves == 2) return "A" + std::to_string(n);
        return "unknown";
    }
    // one trivalent node: measure the three arm lengths
    std::vector<int> arms;
    for (int nb : adj[nodes[branch]]) {
        int len = 1, prev = nodes[branch], cur = nb;
        while (true) {
            int next = -1;
            for (int x : adj[cur])
                if (x != prev) next = x;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return "unknown";
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(arms[2] + 3);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return "E" + std::to_string(arms[2] + 4);
    return "unknown";
}

}  // namespace

std::string cartan_type(const std::vector<std::vector<long long>>& cartan) {
    int n = static_cast<int>(cartan.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) return "unknown";
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] == -1)
                adj[i].push_back(j);
            else if (cartan[i][j] != 0)
                return "unknown";
        }
    }
    std::vector<int> comp(n, -1);
    std::vector<std::string> parts;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i}, nodes;
        comp[i] = i;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = i;
                    stack.push_back(w);
                }
        }
        // relabel adjacency indices into the component
        std::vector<int> index(n, -1);
        for (int k = 0; k < static_cast<int>(nodes.size()); ++k) index[nodes[k]] = k;
        std::vector<std::vector<int>> local(nodes.size());
        for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
            for (int w : adj[nodes[k]]) local[k].push_back(index[w]);
        std::vector<int> ids(nodes.size());
        for (int k = 0; k < static_cast<int>(nodes.size()); ++k) ids[k] = k;
        parts.push_back(classify_component(local, ids));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "x";
        out += parts[i];
    }
    return out;
}

}  // namespace cremona
