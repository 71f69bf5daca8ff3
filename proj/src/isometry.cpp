#include "isometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "rational.hpp"
#include "tables.hpp"

namespace cremona {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty() || b.back() == 0) throw std::invalid_argument("bad divisor");
    if (a.size() < b.size()) return std::nullopt;
    IntPoly rem = a;
    IntPoly q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        long long lead = rem[i + b.size() - 1];
        if (lead % b.back() != 0) return std::nullopt;
        long long f = lead / b.back();
        q[i] = f;
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= f * b[j];
    }
    for (long long c : rem)
        if (c != 0) return std::nullopt;
    return q;
}

IntPoly cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // (t^d - 1) divided by the product of Phi_e over proper divisors e of d
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        auto q = poly_div_exact(p, cyclotomic(e));
        if (!q) throw std::logic_error("cyclotomic division failed");
        p = *q;
    }
    return p;
}

IntPoly expand_factors(const CharPolyFactors& f) {
    IntPoly p{1};
    for (auto [d, m] : f) {
        IntPoly phi = cyclotomic(d);
        for (int i = 0; i < m; ++i) p = poly_mul(p, phi);
    }
    return p;
}

namespace {

std::string poly_text(const IntPoly& p) {
    // Descending powers, omitting zero terms.
    std::string s;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        long long c = p[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i >= 1) {
            s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::string pow_suffix(int m) { return m == 1 ? "" : "^" + std::to_string(m); }

}  // namespace

std::string charpoly_string(const CharPolyFactors& f) {
    if (f.empty()) return "1";
    std::string s;
    for (auto [d, m] : f) s += "(" + poly_text(cyclotomic(d)) + ")" + pow_suffix(m);
    return s;
}

std::string charpoly_pk_string(const CharPolyFactors& f) {
    // p_k = t^k + ... + 1 = product of Phi_d over divisors d > 1 of k+1.
    // Greedily extract p_k factors (largest k first), then print leftover
    // cyclotomics explicitly.
    std::vector<int> mult(31, 0);
    for (auto [d, m] : f) {
        if (d > 30) return charpoly_string(f);
        mult[d] = m;
    }
    std::string s;
    for (int k = 8; k >= 1; --k) {
        std::vector<int> divs;
        for (int d = 2; d <= k + 1; ++d)
            if ((k + 1) % d == 0) divs.push_back(d);
        while (true) {
            bool ok = true;
            for (int d : divs)
                if (mult[d] == 0) ok = false;
            if (!ok) break;
            for (int d : divs) --mult[d];
            s += "p_" + std::to_string(k);
            int extra = 1;
            while (true) {
                bool again = true;
                for (int d : divs)
                    if (mult[d] == 0) again = false;
                if (!again) break;
                for (int d : divs) --mult[d];
                ++extra;
            }
            if (extra > 1) s = s.substr(0, s.size()) + "^" + std::to_string(extra);
            break;
        }
    }
    for (int d = 1; d <= 30; ++d)
        if (mult[d] > 0) s += "(" + poly_text(cyclotomic(d)) + ")" + pow_suffix(mult[d]);
    return s.empty() ? "1" : s;
}

Isometry::Isometry(int r_, IntMat mat) : r(r_), m(std::move(mat)) {
    size_t n = static_cast<size_t>(r + 1);
    if (m.size() != n) throw std::invalid_argument("isometry matrix size mismatch");
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("isometry matrix size mismatch");
    // preserves the form: columns must pairwise have the right products
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            long long s = m[0][i] * m[0][j];
            for (size_t k = 1; k < n; ++k) s -= m[k][i] * m[k][j];
            long long want = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (s != want) throw std::invalid_argument("matrix does not preserve the pairing");
        }
    }
    LatticeVector k = canonical_class(r);
    if (apply(k) != k) throw std::invalid_argument("matrix does not fix the canonical class");
}

Isometry Isometry::identity(int r) {
    Isometry w;
    w.r = r;
    w.m.assign(r + 1, std::vector<long long>(r + 1, 0));
    for (int i = 0; i <= r; ++i) w.m[i][i] = 1;
    return w;
}

LatticeVector Isometry::apply(const LatticeVector& v) const {
    if (v.r != r) throw std::invalid_argument("degree mismatch");
    std::vector<long long> c(r + 1, 0);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) c[i] += m[i][j] * v.coords[j];
    return LatticeVector(r, c);
}

Isometry Isometry::compose(const Isometry& o) const {
    if (r != o.r) throw std::invalid_argument("degree mismatch");
    Isometry w;
    w.r = r;
    w.m.assign(r + 1, std::vector<long long>(r + 1, 0));
    for (int i = 0; i <= r; ++i)
        for (int k = 0; k <= r; ++k) {
            long long a = m[i][k];
            if (a == 0) continue;
            for (int j = 0; j <= r; ++j) w.m[i][j] += a * o.m[k][j];
        }
    return w;
}

Isometry Isometry::inverse() const {
    // M^T J M = J with J = diag(1,-1,..,-1), so M^{-1} = J M^T J.
    Isometry w;
    w.r = r;
    w.m.assign(r + 1, std::vector<long long>(r + 1, 0));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
            long long sign = ((i == 0) == (j == 0)) ? 1 : -1;
            w.m[i][j] = sign * m[j][i];
        }
    return w;
}

bool Isometry::is_identity() const {
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Isometry reflection(const LatticeVector& alpha) {
    if (self_intersection(alpha) != -2 || intersect(alpha, canonical_class(alpha.r)) != 0)
        throw std::invalid_argument("reflection requires a root");
    int r = alpha.r;
    Isometry w = Isometry::identity(r);
    // columns: image of e_j is e_j + (e_j . alpha) alpha
    for (int j = 0; j <= r; ++j) {
        long long p = (j == 0 ? alpha.coords[0] : -alpha.coords[j]);
        for (int i = 0; i <= r; ++i) w.m[i][j] += p * alpha.coords[i];
    }
    return Isometry(r, w.m);
}

IntMat restrict_to_root_lattice(const Isometry& w) {
    // Solve G C = P where G is the Gram matrix of the simple roots and
    // P_ij = alpha_i . (w alpha_j); the result must be integral.
    auto basis = simple_roots(w.r);
    int n = w.r;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            aug[i][j] = Rational(intersect(basis.alphas[i], basis.alphas[j]));
            aug[i][n + j] = Rational(intersect(basis.alphas[i], w.apply(basis.alphas[j])));
        }
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!aug[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw std::logic_error("singular Gram matrix");
        std::swap(aug[col], aug[piv]);
        Rational inv = Rational(1) / aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            Rational f = aug[row][col];
            for (int j = 0; j < 2 * n; ++j) aug[row][j] -= f * aug[col][j];
        }
    }
    IntMat c(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!aug[i][n + j].is_integer())
                throw std::logic_error("restriction to the root lattice is not integral");
            c[i][j] = aug[i][n + j].num();
        }
    return c;
}

long long trace_on_root_lattice(const Isometry& w) {
    auto c = restrict_to_root_lattice(w);
    long long t = 0;
    for (size_t i = 0; i < c.size(); ++i) t += c[i][i];
    return t;
}

IntPoly char_poly(const IntMat& mat) {
    // Faddeev-LeVerrier: exact integer recurrence for det(tI - M).
    int n = static_cast<int>(mat.size());
    IntPoly c(n + 1, 0);
    c[n] = 1;
    IntMat aux(n, std::vector<long long>(n, 0));  // starts at zero
    for (int k = 1; k <= n; ++k) {
        // aux = M * (aux + c[n-k+1] I)
        IntMat next(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                long long a = mat[i][l];
                if (a == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[i][j] += a * (aux[l][j] + (l == j ? c[n - k + 1] : 0));
            }
        aux = next;
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += aux[i][i];
        if (tr % k != 0) throw std::logic_error("char poly recurrence not integral");
        c[n - k] = -tr / k;
    }
    return c;
}

CharPolyFactors factor_into_cyclotomics(const IntPoly& p, int order) {
    CharPolyFactors f;
    IntPoly rem = p;
    for (int d = 1; d <= order; ++d) {
        if (order % d) continue;
        IntPoly phi = cyclotomic(d);
        int m = 0;
        while (true) {
            auto q = poly_div_exact(rem, phi);
            if (!q) break;
            rem = *q;
            ++m;
        }
        if (m > 0) f.emplace_back(d, m);
    }
    if (rem.size() != 1 || rem[0] != 1)
        throw std::logic_error("char poly does not split into cyclotomics of the given order");
    return f;
}

int isometry_order(const Isometry& w) {
    Isometry p = w;
    for (int k = 1; k <= kOrderCap; ++k) {
        if (p.is_identity()) return k;
        p = p.compose(w);
    }
    throw std::runtime_error("order exceeds cap");
}

ClassInvariant class_invariant(const Isometry& w) {
    ClassInvariant inv;
    inv.order = isometry_order(w);
    IntMat c = restrict_to_root_lattice(w);
    IntPoly p = char_poly(c);
    inv.char_poly_factored = factor_into_cyclotomics(p, inv.order);
    inv.trace_on_Er = 0;
    for (size_t i = 0; i < c.size(); ++i) inv.trace_on_Er += c[i][i];
    inv.eig1_multiplicity = 0;
    for (auto [d, m] : inv.char_poly_factored)
        if (d == 1) inv.eig1_multiplicity = m;
    inv.carter_candidates = carter_labels(w.r, inv.order, inv.char_poly_factored);
    return inv;
}

std::vector<int> root_orbit_profile(const Isometry& w) {
    auto rs = enumerate_roots(w.r);
    std::vector<LatticeVector> sorted = rs.roots;  // already sorted
    auto index_of = [&](const LatticeVector& v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        if (it == sorted.end() || !(*it == v)) throw std::logic_error("image is not a root");
        return static_cast<int>(it - sorted.begin());
    };
    int n = static_cast<int>(sorted.size());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = index_of(w.apply(sorted[i]));
    std::vector<char> seen(n, 0);
    std::vector<int> profile;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = next[j];
            ++len;
        }
        profile.push_back(len);
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

}  // namespace cremona
