#include "surfaces.hpp"

#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "poly.hpp"

namespace cremona {

TrilinearForm canonical_trilinear_form(char which) {
    TrilinearForm f;
    auto set = [&](int i, int j, int k, long long v) { f.a[i][j][k] = Rational(v); };
    switch (which) {
        case 'a': set(0, 0, 0, 1); set(1, 1, 1, 1); break;
        case 'b': set(0, 0, 0, 1); set(1, 0, 1, 1); set(1, 1, 0, 1); break;
        case 'c': set(0, 0, 0, 1); set(0, 1, 1, 1); set(1, 0, 1, 1); set(1, 1, 0, -1); break;
        case 'd': set(0, 0, 0, 1); set(0, 1, 1, 1); break;
        case 'e': set(0, 0, 0, 1); break;
        default: throw std::invalid_argument("form must be one of a..e");
    }
    return f;
}

Rational hyperdeterminant(const TrilinearForm& f) {
    const Rational (&a)[2][2][2] = f.a;
    auto sq = [](const Rational& x) { return x * x; };
    Rational det = sq(a[0][0][0] * a[1][1][1]) + sq(a[0][0][1] * a[1][1][0]) +
                   sq(a[0][1][0] * a[1][0][1]) + sq(a[1][0][0] * a[0][1][1]);
    det -= Rational(2) *
           (a[0][0][0] * a[0][0][1] * a[1][1][0] * a[1][1][1] +
            a[0][0][0] * a[0][1][0] * a[1][0][1] * a[1][1][1] +
            a[0][0][0] * a[1][0][0] * a[0][1][1] * a[1][1][1] +
            a[0][0][1] * a[0][1][0] * a[1][0][1] * a[1][1][0] +
            a[0][0][1] * a[1][0][0] * a[0][1][1] * a[1][1][0] +
            a[0][1][0] * a[1][0][0] * a[0][1][1] * a[1][0][1]);
    det += Rational(4) * (a[0][0][0] * a[0][1][1] * a[1][0][1] * a[1][1][0] +
                          a[0][0][1] * a[0][1][0] * a[1][0][0] * a[1][1][1]);
    return det;
}

namespace {

// ---- arithmetic in F_{p^2} = F_p[u]/(u^2 - n), n a fixed nonresidue ----

struct GF2 {
    int p, n;

    using El = std::pair<int, int>;  // a + b u

    int mod(long long x) const { return static_cast<int>(((x % p) + p) % p); }
    El add(El x, El y) const { return {mod(x.first + y.first), mod(x.second + y.second)}; }
    El mul(El x, El y) const {
        return {mod((long long)x.first * y.first + (long long)n * x.second * y.second),
                mod((long long)x.first * y.second + (long long)x.second * y.first)};
    }
    bool zero(El x) const { return x.first == 0 && x.second == 0; }

    std::vector<std::array<El, 2>> projective_line() const {
        std::vector<std::array<El, 2>> pts;
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) pts.push_back({El{1, 0}, El{a, b}});
        pts.push_back({El{0, 0}, El{1, 0}});
        return pts;
    }
};

int smallest_nonresidue(int p) {
    for (int n = 2; n < p; ++n) {
        bool residue = false;
        for (int x = 1; x < p && !residue; ++x)
            if (x * x % p == n) residue = true;
        if (!residue) return n;
    }
    throw std::logic_error("no nonresidue found");
}

}  // namespace

bool finite_field_singular(const TrilinearForm& f, int p) {
    long long lcm = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) lcm = std::lcm(lcm, f.a[i][j][k].den());
    if (lcm % p == 0) throw std::invalid_argument("prime divides a denominator");
    GF2 gf{p, smallest_nonresidue(p)};
    int a[2][2][2];
    bool all_zero = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                a[i][j][k] = gf.mod(f.a[i][j][k].num() * (lcm / f.a[i][j][k].den()));
                all_zero = all_zero && a[i][j][k] == 0;
            }
    if (all_zero) throw std::invalid_argument("form vanishes mod p");

    auto line = gf.projective_line();
    for (const auto& x : line)
        for (const auto& y : line)
            for (const auto& z : line) {
                bool singular = true;
                // d/dx_i, d/dy_j, d/dz_k of sum a_ijk x_i y_j z_k
                for (int i = 0; i < 2 && singular; ++i) {
                    GF2::El s{0, 0};
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k)
                            s = gf.add(s, gf.mul({a[i][j][k], 0}, gf.mul(y[j], z[k])));
                    singular = gf.zero(s);
                }
                for (int j = 0; j < 2 && singular; ++j) {
                    GF2::El s{0, 0};
                    for (int i = 0; i < 2; ++i)
                        for (int k = 0; k < 2; ++k)
                            s = gf.add(s, gf.mul({a[i][j][k], 0}, gf.mul(x[i], z[k])));
                    singular = gf.zero(s);
                }
                for (int k = 0; k < 2 && singular; ++k) {
                    GF2::El s{0, 0};
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            s = gf.add(s, gf.mul({a[i][j][k], 0}, gf.mul(x[i], y[j])));
                    singular = gf.zero(s);
                }
                if (singular) return true;
            }
    return false;
}

namespace {

// ring with variables x1,x2,y1,y2,z1,z2 and the symbol i (sqrt -1)
constexpr int kTriVars = 6;

std::vector<Poly> tri_vars() {
    std::vector<Poly> v;
    for (int i = 0; i < kTriVars; ++i) v.push_back(Poly::var(kTriVars, i));
    return v;
}

// tau0: (x, y, z) -> (y, (z1, -z2), (x1, -x2))
std::vector<Poly> tau0_map() {
    auto v = tri_vars();
    return {v[2], v[3], v[4], -v[5], v[0], -v[1]};
}

Poly form_c_poly() {
    auto v = tri_vars();
    // x1 y1 z1 + x1 y2 z2 + x2 y1 z2 - x2 y2 z1
    return v[0] * v[2] * v[4] + v[0] * v[3] * v[5] + v[1] * v[2] * v[5] - v[1] * v[3] * v[4];
}

bool factorwise_proportional(const std::vector<Poly>& f, const std::vector<Poly>& g) {
    for (int k = 0; k < 3; ++k)
        if (!proportional({f[2 * k], f[2 * k + 1]}, {g[2 * k], g[2 * k + 1]})) return false;
    return true;
}

}  // namespace

Verdict verify_tau0() {
    Verdict v;
    v.case_id = "tau0";
    auto id = tri_vars();
    auto tau = tau0_map();

    auto compose = [&](const std::vector<Poly>& f, const std::vector<Poly>& g) {
        std::vector<Poly> out;
        for (const auto& p : f) out.push_back(p.substitute(g));
        return out;
    };
    auto tau2 = compose(tau, tau);
    auto tau3 = compose(tau2, tau);
    v.check("tau0 cubed is the identity (per P1 factor, up to scalar)",
            factorwise_proportional(tau3, id));

    Poly fc = form_c_poly();
    Poly pulled = fc.substitute(tau);
    v.check("form (c) is tau0-invariant up to scalar", proportional({pulled}, {fc}));

    // the singular-fiber bilinear forms, with i = sqrt(-1) coefficients
    QuadExt i(-1, Rational(0), Rational(1));
    auto w = tri_vars();
    auto& x1 = w[0]; auto& x2 = w[1]; auto& y1 = w[2];
    auto& y2 = w[3]; auto& z1 = w[4]; auto& z2 = w[5];
    auto line = [&](const Poly& re, const Poly& im, int sign) {
        return re + QuadExt(Rational(sign)) * (i * im);
    };
    std::vector<std::vector<Poly>> L(4);
    for (int s : {1, -1}) {
        L[1].push_back(line(y1 * z1 + y2 * z2, y1 * z2 - y2 * z1, s));
        L[2].push_back(line(x1 * z1 + x2 * z2, x1 * z2 - x2 * z1, s));
        L[3].push_back(line(x1 * y1 - x2 * y2, x1 * y2 + x2 * y1, s));
    }
    // pullback by tau0 carries the pencil over factor k to the pencil over
    // factor k+1 (a 3-cycle on {L1, L2, L3}, signs permuting freely)
    bool cycle = true;
    for (int k = 1; k <= 3; ++k) {
        int next = k % 3 + 1;
        for (const auto& lk : L[k]) {
            Poly pb = lk.substitute(tau);
            bool hit = false;
            for (const auto& ln : L[next])
                if (proportional({pb}, {ln})) hit = true;
            cycle = cycle && hit;
        }
    }
    v.check("tau0 pullback cycles the singular-fiber pairs L1 -> L2 -> L3 -> L1", cycle);

    // fixed points [t:1]x[t:1]x[-t:1], t in {0, +sqrt3, -sqrt3}
    QuadExt s3 = QuadExt::sqrt_of(3);
    bool fixed_ok = true, on_surface = true;
    for (QuadExt t : {QuadExt(0), s3, -s3}) {
        std::vector<QuadExt> pt{t, QuadExt(1), t, QuadExt(1), -t, QuadExt(1)};
        std::vector<QuadExt> img;
        for (const auto& p : tau) img.push_back(p.eval(pt));
        for (int k = 0; k < 3; ++k)
            fixed_ok = fixed_ok && proportional_values({img[2 * k], img[2 * k + 1]},
                                                       {pt[2 * k], pt[2 * k + 1]});
        on_surface = on_surface && fc.eval(pt).is_zero();
    }
    v.check("the three points [t:1]x[t:1]x[-t:1], t in {0,+-sqrt3}, are tau0-fixed", fixed_ok);
    v.check("those points lie on the form-(c) surface", on_surface);
    return v;
}

Verdict verify_g0() {
    Verdict v;
    v.case_id = "g0";
    // [x:y:z] -> [x(z-y) : z(x-y) : xz]
    int n = 3;
    Poly x = Poly::var(n, 0), y = Poly::var(n, 1), z = Poly::var(n, 2);
    std::vector<Poly> g{x * (z - y), z * (x - y), x * z};

    // reduce a rational projective point to coprime integer coordinates,
    // since raw iterates of a quadratic map overflow quickly
    auto normalize = [](std::vector<QuadExt> pt) {
        for (const auto& c : pt)
            if (!c.is_rational()) return pt;  // only rescale rational points
        long long lcm = 1, gcd = 0;
        for (const auto& c : pt) lcm = std::lcm(lcm, c.a().den());
        std::vector<long long> ints;
        for (const auto& c : pt) {
            long long v = c.a().num() * (lcm / c.a().den());
            ints.push_back(v);
            gcd = std::gcd(gcd, v);
        }
        if (gcd == 0) gcd = 1;
        std::vector<QuadExt> out;
        for (long long v : ints) out.emplace_back(v / gcd);
        return out;
    };
    auto apply = [&](const std::vector<QuadExt>& pt) {
        std::vector<QuadExt> out;
        for (const auto& p : g) out.push_back(p.eval(pt));
        return normalize(out);
    };
    auto degenerate = [](const std::vector<QuadExt>& pt) {
        for (const auto& c : pt)
            if (!c.is_zero()) return false;
        return true;
    };

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> coord(-20, 20);
    int verified = 0, resampled = 0;
    while (verified < 20) {
        std::vector<QuadExt> pt{QuadExt(coord(rng)), QuadExt(coord(rng)), QuadExt(coord(rng))};
        if (degenerate(pt)) continue;
        std::vector<QuadExt> cur = pt;
        bool bad = false;
        for (int k = 0; k < 5; ++k) {
            cur = apply(cur);
            if (degenerate(cur)) { bad = true; break; }
        }
        if (bad) { ++resampled; continue; }
        if (!proportional_values(cur, pt)) {
            v.check("g0^5 fixes a sampled point", false, "point " + pt[0].str());
            return v;
        }
        ++verified;
    }
    v.check("g0^5 is the identity on 20 sampled rational points", true,
            "resampled " + std::to_string(resampled) + " degenerate draws");

    // degenerate input [1:0:0] collapses to [0:0:0]
    v.check("indeterminacy detected on [1:0:0]",
            degenerate(apply({QuadExt(1), QuadExt(0), QuadExt(0)})));

    // fixed points [alpha:1:alpha^2], alpha = (1 +- sqrt5)/2
    bool fixed = true;
    for (int s : {1, -1}) {
        QuadExt alpha(5, Rational(1, 2), Rational(s, 2));
        std::vector<QuadExt> pt{alpha, QuadExt(1), alpha * alpha};
        fixed = fixed && proportional_values(apply(pt), pt);
    }
    v.check("both points [alpha:1:alpha^2], alpha=(1+-sqrt5)/2, are g0-fixed", fixed);
    return v;
}

Verdict verify_s_alpha_lines() {
    Verdict v;
    v.case_id = "s_alpha";
    // ring in u, v (line parameters) and the free symbol alpha
    int n = 3;
    Poly u = Poly::var(n, 0), w = Poly::var(n, 1), alpha = Poly::var(n, 2);

    // cubic alpha x0^3 + x1^3 + x2^3 + x3^3 - (x0+x1+x2+x3)^3 evaluated on
    // a parametrized point [x0:x1:x2:x3]
    auto cubic_on = [&](const std::vector<Poly>& p) {
        return alpha * p[0].pow(3) + p[1].pow(3) + p[2].pow(3) + p[3].pow(3) -
               (p[0] + p[1] + p[2] + p[3]).pow(3);
    };
    Poly zero(n);
    std::vector<std::vector<Poly>> lines = {
        {zero, u, -u, w},   // l1: x0 = x1 + x2 = 0
        {zero, w, u, -u},   // l2: x0 = x2 + x3 = 0
        {zero, u, w, -u},   // l3: x0 = x1 + x3 = 0
    };
    bool contained = true;
    for (const auto& l : lines) contained = contained && cubic_on(l).is_zero();
    v.check("all three lines lie on the cubic identically in alpha", contained);

    // the 3-cycle [x0:x1:x2:x3] -> [x0:x3:x1:x2] permutes l1 -> l2 -> l3
    auto cycle = [](const std::vector<Poly>& p) {
        return std::vector<Poly>{p[0], p[3], p[1], p[2]};
    };
    auto on_line = [&](const std::vector<Poly>& p, int which) {
        if (!p[0].is_zero()) return false;
        Poly s = which == 0 ? p[1] + p[2] : which == 1 ? p[2] + p[3] : p[1] + p[3];
        return s.is_zero();
    };
    bool permutes = on_line(cycle(lines[0]), 1) && on_line(cycle(lines[1]), 2) &&
                    on_line(cycle(lines[2]), 0);
    v.check("the coordinate 3-cycle maps l1 -> l2 -> l3 -> l1", permutes);

    {
        // invariance of the cubic itself, as an identity in x0..x3 and alpha
        Poly x0 = Poly::var(5, 0), x1 = Poly::var(5, 1), x2 = Poly::var(5, 2),
             x3 = Poly::var(5, 3), a5 = Poly::var(5, 4);
        Poly f = a5 * x0.pow(3) + x1.pow(3) + x2.pow(3) + x3.pow(3) -
                 (x0 + x1 + x2 + x3).pow(3);
        Poly g = f.substitute({x0, x3, x1, x2, a5});
        v.check("the 3-cycle preserves the cubic for every alpha", (g - f).is_zero());
    }

    // triangle vertices
    auto at = [&](const std::vector<Poly>& l, long long uv, long long wv) {
        std::vector<QuadExt> out;
        for (const auto& p : l)
            out.push_back(p.eval({QuadExt(uv), QuadExt(wv), QuadExt(0)}));
        return out;
    };
    auto pt = [](std::initializer_list<long long> c) {
        std::vector<QuadExt> out;
        for (long long x : c) out.emplace_back(x);
        return out;
    };
    // l1 (u,w) meets l2 where [0:u:-u:w] = [0:w:u:-u]: u = 1, w = 1 on l1
    bool vertices = proportional_values(at(lines[0], 1, 1), pt({0, 1, -1, 1})) &&
                    proportional_values(at(lines[0], 1, -1), pt({0, -1, 1, 1})) &&
                    proportional_values(at(lines[1], -1, -1), pt({0, -1, -1, 1}));
    v.check("pairwise intersections are [0:1:-1:1], [0:-1:1:1], [0:-1:-1:1]", vertices);
    return v;
}

Verdict verify_quadric_rotation() {
    Verdict v;
    v.case_id = "quadric_rotation";
    // variables x, y, z, w, c, s with the relation c^2 + s^2 = 1
    int n = 6;
    Poly x = Poly::var(n, 0), y = Poly::var(n, 1), z = Poly::var(n, 2), w = Poly::var(n, 3);
    Poly c = Poly::var(n, 4), s = Poly::var(n, 5);
    Poly one = Poly::constant(n, QuadExt(1));

    Poly q = x * x + y * y + z * z - w * w;
    std::vector<Poly> rot{c * x + s * y, -(s * x) + c * y, z, w, c, s};
    Poly pulled = q.substitute(rot);
    Poly diff = (pulled - q).reduce_square(5, one - c * c);  // s^2 -> 1 - c^2
    v.check("rotation preserves x^2+y^2+z^2-w^2 modulo c^2+s^2-1", diff.is_zero());

    bool fixed = true;
    for (long long zc : {1, -1}) {
        std::vector<QuadExt> pt{QuadExt(0), QuadExt(0), QuadExt(zc), QuadExt(1),
                                QuadExt(0), QuadExt(0)};
        // c, s stay symbolic in the map; evaluate with generic values 3/5, 4/5
        pt[4] = QuadExt(Rational(3, 5));
        pt[5] = QuadExt(Rational(4, 5));
        std::vector<QuadExt> img;
        for (int k = 0; k < 4; ++k) img.push_back(rot[k].eval(pt));
        fixed = fixed && proportional_values(
                             img, {QuadExt(0), QuadExt(0), QuadExt(zc), QuadExt(1)});
    }
    v.check("the poles [0:0:1:1] and [0:0:-1:1] are fixed", fixed);

    // explicit rational instance (c,s) = (3/5, 4/5)
    std::vector<QuadExt> inst{QuadExt(2), QuadExt(3), QuadExt(5), QuadExt(7),
                              QuadExt(Rational(3, 5)), QuadExt(Rational(4, 5))};
    v.check("instance (c,s)=(3/5,4/5) preserves the quadric value",
            pulled.eval(inst) == q.eval(inst));
    return v;
}

Verdict verify_trilinear_forms(int samples, uint64_t seed) {
    Verdict v;
    v.case_id = "trilinear_forms";
    const int primes[] = {5, 7};

    for (char which : {'a', 'b', 'c', 'd', 'e'}) {
        TrilinearForm f = canonical_trilinear_form(which);
        Rational det = hyperdeterminant(f);
        bool expect_singular = (which == 'b' || which == 'd' || which == 'e');
        v.check(std::string("form (") + which + ") hyperdeterminant " +
                    (expect_singular ? "vanishes" : "is nonzero"),
                det.is_zero() == expect_singular, "Det = " + det.str());
        for (int p : primes) {
            bool oracle = finite_field_singular(f, p);
            bool det_zero_mod_p = det.num() % p == 0;
            v.check(std::string("form (") + which + ") oracle agreement mod " +
                        std::to_string(p),
                    oracle == det_zero_mod_p);
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coef(-9, 9);
    int mismatches = 0, checked = 0;
    for (int t = 0; t < samples; ++t) {
        TrilinearForm f;
        bool all_zero = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    f.a[i][j][k] = Rational(coef(rng));
                    all_zero = all_zero && f.a[i][j][k].is_zero();
                }
        if (all_zero) continue;
        Rational det = hyperdeterminant(f);
        for (int p : primes) {
            bool reduces = false;
            bool oracle = false;
            try {
                oracle = finite_field_singular(f, p);
            } catch (const std::invalid_argument&) {
                reduces = true;  // form vanished mod p; skip this prime
            }
            if (reduces) continue;
            ++checked;
            if (oracle != (det.num() % p == 0)) ++mismatches;
        }
    }
    v.check("random forms: hyperdeterminant vanishing mod p matches the oracle",
            mismatches == 0,
            std::to_string(checked) + " prime-reductions checked, " +
                std::to_string(mismatches) + " mismatches");
    return v;
}

}  // namespace cremona
