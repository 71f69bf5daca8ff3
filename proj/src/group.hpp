#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isometry.hpp"

namespace cremona {

/// Raised when a computation is refused or abandoned for size reasons
/// (maps to the resource-limit exit code).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a randomized or backtracking search exhausts its budget.
struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int rank_of_type(const std::string& type);  // "A4"->4 ... "E8"->8, "A1xA2"->3
std::string type_of_rank(int r);

struct ConjClassInfo {
    std::size_t rep_index;
    std::size_t size;
    ClassInvariant inv;
};

/// Fully enumerated Weyl group, stored as packed int8 matrices with a
/// hash index. E7 (2,903,040 elements) is gated behind allow_large;
/// E8 is refused outright.
class GroupTable {
public:
    /// BFS closure of the simple-root reflections. Uses a binary cache
    /// under $CREMONA_CACHE_DIR when set.
    static GroupTable generate(int r, bool allow_large = false);

    int r() const { return r_; }
    std::string type_label() const { return type_of_rank(r_); }
    std::size_t size() const { return count_; }

    Isometry element(std::size_t i) const;
    std::optional<std::size_t> index_of(const Isometry& w) const;

    int order_of(std::size_t i) const;

    /// Conjugacy classes of all elements whose order lies in the filter,
    /// sorted by (order, char poly, size). Orbits are closed under
    /// conjugation by the simple reflections only, which suffices since
    /// they generate.
    std::vector<ConjClassInfo> class_partition(const std::vector<int>& orders) const;

    /// Indices of all s with s^2 = id (identity included) commuting with
    /// element i.
    std::vector<std::size_t> commuting_involutions(std::size_t i) const;

private:
    GroupTable() = default;

    int r_ = 0;
    int n_ = 0;  // matrix side, r+1
    std::size_t count_ = 0;
    std::vector<int8_t> data_;              // count_ * n_ * n_ packed matrices
    std::vector<uint32_t> buckets_;         // open-addressing index into data_
    mutable std::vector<uint8_t> orders_;   // lazily filled

    const int8_t* at(std::size_t i) const { return data_.data() + i * n_ * n_; }
    std::optional<std::size_t> lookup(const int8_t* m) const;
    std::size_t insert_if_new(const int8_t* m);  // returns index
    void rebuild_buckets();
    void compute_orders() const;

    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;
};

/// Longest element by greedy descent on positive roots.
Isometry longest_element(int r);

/// True iff the restriction of w to E_r is minus the identity.
bool restriction_is_minus_identity(const Isometry& w);

constexpr uint64_t kDefaultSeed = 12345;

/// Representative of the encoded class-table row with the given label.
/// Product labels are built from an embedded orthogonal sub-root-system
/// (backtracking over the root set); exotic labels use fixed recipes
/// (Coxeter powers, twisting by the longest element) with a seeded
/// randomized fallback. The result is validated against the row's order
/// and char poly before being returned.
Isometry carter_representative(int r, const std::string& label, uint64_t seed = kDefaultSeed);

/// As above but keyed by (order, char poly); the label is chosen as the
/// first encoded row matching the target.
Isometry carter_representative(int r, const ClassInvariant& target, uint64_t seed = kDefaultSeed);

/// Product of the reflections in the given roots, left to right.
Isometry reflection_product(int r, const std::vector<LatticeVector>& roots);

/// Finds pairwise-compatible roots realizing the given Gram constraints:
/// target[i][j] = desired intersection of root i with root j (i != j),
/// diagonal ignored. Returns the chosen roots or nullopt.
std::optional<std::vector<LatticeVector>> find_root_embedding(
    int r, const std::vector<std::vector<int>>& target);

}  // namespace cremona
