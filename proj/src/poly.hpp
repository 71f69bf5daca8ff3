#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qext.hpp"

namespace cremona {

/// Sparse multivariate polynomial over QuadExt coefficients, with a
/// fixed number of variables.
class Poly {
public:
    using Monomial = std::vector<int>;

    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, QuadExt c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static Poly var(int nvars, int i, int power = 1) {
        Poly p(nvars);
        Monomial m(nvars, 0);
        m.at(i) = power;
        p.terms_[m] = QuadExt(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, QuadExt>& terms() const { return terms_; }

    friend Poly operator+(const Poly& f, const Poly& g) {
        f.match(g);
        Poly h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, c);
        return h;
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        f.match(g);
        Poly h = f;
        for (const auto& [m, c] : g.terms_) h.add_term(m, -c);
        return h;
    }
    Poly operator-() const { return constant(nvars_, QuadExt(0)) - *this; }
    friend Poly operator*(const Poly& f, const Poly& g) {
        f.match(g);
        Poly h(f.nvars_);
        for (const auto& [ma, ca] : f.terms_)
            for (const auto& [mb, cb] : g.terms_) {
                Monomial m(f.nvars_);
                for (int i = 0; i < f.nvars_; ++i) m[i] = ma[i] + mb[i];
                h.add_term(m, ca * cb);
            }
        return h;
    }
    friend Poly operator*(const QuadExt& c, const Poly& f) {
        return constant(f.nvars_, c) * f;
    }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        Poly out = constant(nvars_, QuadExt(1));
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    /// Substitutes images[i] for variable i; images must share one ring.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("substitution needs one image per variable");
        int target = images.empty() ? 0 : images.front().nvars_;
        Poly out(target);
        for (const auto& [m, c] : terms_) {
            Poly term = constant(target, c);
            for (int i = 0; i < nvars_; ++i)
                if (m[i] > 0) term = term * images[i].pow(m[i]);
            out = out + term;
        }
        return out;
    }

    QuadExt eval(const std::vector<QuadExt>& vals) const {
        if (static_cast<int>(vals.size()) != nvars_)
            throw std::invalid_argument("evaluation needs one value per variable");
        QuadExt out(0);
        for (const auto& [m, c] : terms_) {
            QuadExt t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < m[i]; ++k) t *= vals[i];
            out += t;
        }
        return out;
    }

    /// Repeatedly replaces var^2 by `replacement` until every exponent of
    /// var is < 2 (used for relations like s^2 = 1 - c^2).
    Poly reduce_square(int var, const Poly& replacement) const {
        Poly cur = *this;
        while (true) {
            bool reduced = false;
            Poly next(nvars_);
            for (const auto& [m, c] : cur.terms_) {
                if (m[var] >= 2) {
                    Monomial lower = m;
                    lower[var] -= 2;
                    Poly mono(nvars_);
                    mono.terms_[lower] = c;
                    next = next + mono * replacement;
                    reduced = true;
                } else {
                    next.add_term(m, c);
                }
            }
            cur = next;
            if (!reduced) return cur;
        }
    }

    friend bool operator==(const Poly& f, const Poly& g) { return (f - g).is_zero(); }

private:
    void match(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }
    void add_term(const Monomial& m, const QuadExt& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    std::map<Monomial, QuadExt> terms_;
};

/// True iff the tuples define the same projective point/map, i.e. all
/// cross products f_i g_j - f_j g_i vanish and neither tuple is zero.
inline bool proportional(const std::vector<Poly>& f, const std::vector<Poly>& g) {
    if (f.size() != g.size()) return false;
    bool fz = true, gz = true;
    for (const auto& p : f) fz = fz && p.is_zero();
    for (const auto& p : g) gz = gz && p.is_zero();
    if (fz || gz) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
    return true;
}

inline bool proportional_values(const std::vector<QuadExt>& x, const std::vector<QuadExt>& y) {
    if (x.size() != y.size()) return false;
    bool xz = true, yz = true;
    for (const auto& v : x) xz = xz && v.is_zero();
    for (const auto& v : y) yz = yz && v.is_zero();
    if (xz || yz) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

}  // namespace cremona
