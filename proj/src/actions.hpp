#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isometry.hpp"
#include "lattice.hpp"

namespace cremona {

/// A finite group acting on Pic, given by generators, optionally with a
/// commuting real-structure involution sigma.
struct ActionSpec {
    int r = 0;
    std::vector<Isometry> generators;
    std::optional<Isometry> sigma;
};

constexpr std::size_t kClosureCap = 10000;

/// Elements of the group generated by the generators (and sigma when
/// present), by closure. Validates that sigma is an involution commuting
/// with every generator. Throws ResourceError past the cap.
std::vector<Isometry> close_action(const ActionSpec& spec, std::size_t cap = kClosureCap);

/// 1 + (1/|H|) sum of traces on E_r over the full group H. Cross-checked
/// internally against the rational kernel rank of (sum of matrices minus
/// |H| id) on all of Pic; a mismatch throws.
int invariant_picard_rank(const ActionSpec& spec, std::size_t cap = kClosureCap);

/// Rank of the fixed sublattice of Pic under the given elements,
/// computed over the rationals.
int fixed_sublattice_rank(const std::vector<Isometry>& group);

/// True iff Phi_1 does not divide the char poly of g on E_r.
bool cyclic_minimality(const Isometry& g);

/// Euler characteristic of the fixed locus: trace on E_r plus 3.
long long lefschetz_fixed_euler(const Isometry& h);

/// Multiset of exact roots of unity exp(2 pi i k/d), stored as reduced
/// (d, k) pairs, sorted.
struct SpectrumProfile {
    std::vector<std::pair<int, int>> entries;

    friend bool operator==(const SpectrumProfile&, const SpectrumProfile&) = default;
    friend bool operator<(const SpectrumProfile& a, const SpectrumProfile& b) {
        return a.entries < b.entries;
    }
};

SpectrumProfile spectrum_from_factors(const CharPolyFactors& f);

/// True iff the multiset is closed under conjugation.
bool spectrum_real_closed(const SpectrumProfile& p);

/// Cyclotomic factorization of the induced polynomial; nullopt when the
/// profile is not Galois-stable (non-integer coefficients).
std::optional<CharPolyFactors> spectrum_factors(const SpectrumProfile& p);

/// All sign assignments lambda -> +-lambda applied consistently
/// (conjugate pairs flip together, real eigenvalues individually),
/// keeping only profiles with an integer char poly, optionally dropping
/// those containing eigenvalue 1; deduplicated, with integer traces.
std::vector<std::pair<SpectrumProfile, long long>> sign_twists(const SpectrumProfile& p,
                                                               bool exclude_one);

/// Isometry determined by the images of e_1..e_r: the e_0 image is
/// forced by K-invariance, (sum of images - K)/3. Throws when the
/// completion is non-integral or fails to be an isometry fixing K.
Isometry complete_isometry(int r, const std::vector<LatticeVector>& images);

/// Fixed points of an order-3 action on a genus-3 curve with quotient
/// genus g: N = 5 - 3g, valid for g in {0, 1} only.
int riemann_hurwitz_quartic_count(int genus_quotient);

/// Nonnegative solutions of n_node + 2 n_cusp = 12.
std::vector<std::pair<int, int>> singular_fiber_solutions();

}  // namespace cremona
