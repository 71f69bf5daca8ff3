#pragma once

#include <string>
#include <vector>

namespace cremona {

/// Class in Pic of the plane blown up in r points, written on the basis
/// e0,...,er. The pairing is diagonal with e0^2 = 1 and ei^2 = -1.
struct LatticeVector {
    int r = 0;
    std::vector<long long> coords;  // length r+1

    LatticeVector() = default;
    LatticeVector(int r_, std::vector<long long> c);

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return a.coords < b.coords;
    }

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    LatticeVector operator*(long long k) const;

    std::string str() const;
};

LatticeVector basis_vector(int r, int i);  // e_i

long long intersect(const LatticeVector& u, const LatticeVector& v);
long long self_intersection(const LatticeVector& v);

LatticeVector canonical_class(int r);

struct RootSet {
    int r = 0;
    std::vector<LatticeVector> roots;  // lexicographically sorted
};

/// All s with s^2 = -2, s.K = 0, by bounded coefficient scan.
/// The scan bound on the e0 coefficient comes from Cauchy-Schwarz applied to
/// sum v_i = -3 v_0 and sum v_i^2 = v_0^2 + 2.
RootSet enumerate_roots(int r);

/// All v with v^2 = -1, v.K = -1, same scan scheme.
std::vector<LatticeVector> enumerate_minus_one_classes(int r);

struct SimpleRootBasis {
    int r = 0;
    std::vector<LatticeVector> alphas;  // alpha_1..alpha_r
};

/// alpha_1 = e0-e1-e2-e3, alpha_i = e_{i-1}-e_i for i >= 2. Requires r >= 3.
SimpleRootBasis simple_roots(int r);

/// Cartan matrix entries -(alpha_i . alpha_j).
std::vector<std::vector<long long>> cartan_matrix(const SimpleRootBasis& basis);

/// Classifies a simply-laced Cartan matrix by its diagram shape,
/// e.g. "A4", "D5", "E6", "A1xA2". Components sorted by rank then type.
std::string cartan_type(const std::vector<std::vector<long long>>& cartan);

}  // namespace cremona
