#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace cremona {

using IntMat = std::vector<std::vector<long long>>;

/// Cyclotomic factorization: (index d, multiplicity), sorted by d.
using CharPolyFactors = std::vector<std::pair<int, int>>;

/// Integer polynomial, ascending coefficients.
using IntPoly = std::vector<long long>;

IntPoly cyclotomic(int d);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division; nullopt if the remainder is nonzero.
std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b);
IntPoly expand_factors(const CharPolyFactors& f);
std::string charpoly_string(const CharPolyFactors& f);     // explicit cyclotomic product
std::string charpoly_pk_string(const CharPolyFactors& f);  // appendix p_k notation where possible

int euler_phi(int n);

/// Lattice automorphism preserving the intersection form and fixing K,
/// stored as its (r+1)x(r+1) matrix acting on coordinate columns.
struct Isometry {
    int r = 0;
    IntMat m;

    Isometry() = default;
    Isometry(int r_, IntMat mat);  // validates form preservation and K-fixing

    static Isometry identity(int r);

    LatticeVector apply(const LatticeVector& v) const;
    Isometry compose(const Isometry& o) const;  // this after o
    Isometry inverse() const;                   // J M^T J
    bool is_identity() const;

    friend bool operator==(const Isometry&, const Isometry&) = default;
    friend bool operator<(const Isometry& a, const Isometry& b) { return a.m < b.m; }
};

/// x -> x + (x.alpha) alpha for a root alpha.
Isometry reflection(const LatticeVector& alpha);

/// Matrix of the restriction of w to E_r on the simple-root basis.
IntMat restrict_to_root_lattice(const Isometry& w);

long long trace_on_root_lattice(const Isometry& w);

/// Characteristic polynomial of an integer matrix (Faddeev-LeVerrier).
IntPoly char_poly(const IntMat& m);

/// Factors a char poly of a finite-order isometry into cyclotomics,
/// trying indices d dividing `order`.
CharPolyFactors factor_into_cyclotomics(const IntPoly& p, int order);

constexpr int kOrderCap = 30;

/// Multiplicative order by iterated powering; throws past kOrderCap.
int isometry_order(const Isometry& w);

struct ClassInvariant {
    int order = 1;
    CharPolyFactors char_poly_factored;
    long long trace_on_Er = 0;
    int eig1_multiplicity = 0;
    std::set<std::string> carter_candidates;

    friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
};

/// Order, factored char poly on E_r, trace, eigenvalue-1 multiplicity.
/// Carter candidates are filled from the encoded appendix tables for
/// r in {6,7,8}; empty otherwise.
ClassInvariant class_invariant(const Isometry& w);

/// Orbit-size multiset of <w> acting on the roots. Heuristic diagnostic
/// only; never used to split classes sharing (order, char poly).
std::vector<int> root_orbit_profile(const Isometry& w);

}  // namespace cremona
