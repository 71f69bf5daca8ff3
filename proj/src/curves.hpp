#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isometry.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace cremona {

/// Incidence graph of the (-1)-classes: edge iff intersection exactly 1.
/// Distinct classes never meet with intersection >= 2 for r <= 8; this is
/// asserted during construction.
struct IncidenceGraph {
    int r = 0;
    std::vector<LatticeVector> vertices;  // sorted
    std::vector<std::vector<char>> adj;

    int degree(int i) const;
    int girth() const;  // length of shortest cycle, -1 if forest
};

IncidenceGraph build_graph(int r);

/// All graph automorphisms as vertex permutations, by backtracking.
/// Intended for the small graphs (hexagon, Petersen).
std::vector<std::vector<int>> graph_automorphisms(const IncidenceGraph& g);

/// Vertex permutation induced by an isometry; throws if some image is
/// not a (-1)-class.
std::vector<int> induced_permutation(const IncidenceGraph& g, const Isometry& w);

/// Orbit partition of the (-1)-classes under the group generated by the
/// given isometries. Orbits are lists of vertex indices, each sorted;
/// the partition is sorted by smallest member.
std::vector<std::vector<int>> orbits(const std::vector<Isometry>& action, int r);

/// A single invariant class (pair_index < 0) or an action-invariant
/// conjugate pair {L, sigma L}.
struct InvariantConfig {
    int index = -1;       // vertex index of the class (or of L)
    int pair_index = -1;  // vertex index of sigma L, or -1 for a single
    bool disjoint = false;  // for pairs: L . sigma(L) == 0
};

/// Single classes fixed by every generator (and by sigma when present),
/// plus, when sigma is given, pairs {L, sigma L} with L != sigma L fixed
/// setwise by every generator. Pairs are reported once (index < pair_index)
/// with their disjointness flag.
std::vector<InvariantConfig> invariant_exceptional(const std::vector<Isometry>& action,
                                                   const std::optional<Isometry>& sigma, int r);

/// If the sum of the orbit equals a * K, returns a; nullopt otherwise.
std::optional<Rational> orbit_anticanonical_coefficient(
    const std::vector<LatticeVector>& orbit);

std::string graph_dot(const IncidenceGraph& g);
std::string graph_json(const IncidenceGraph& g);

}  // namespace cremona
