#include "group.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>

#include "rational.hpp"
#include "tables.hpp"

namespace cremona {

int rank_of_type(const std::string& type) {
    for (const auto& row : weyl_order_table())
        if (row.type == type) return row.r;
    throw std::invalid_argument("unknown lattice type " + type);
}

std::string type_of_rank(int r) {
    for (const auto& row : weyl_order_table())
        if (row.r == r) return row.type;
    throw std::invalid_argument("no lattice type for r=" + std::to_string(r));
}

namespace {

void pack(const Isometry& w, int8_t* out) {
    int n = w.r + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i * n + j] = static_cast<int8_t>(w.m[i][j]);
}

Isometry unpack(int r, const int8_t* p) {
    int n = r + 1;
    IntMat m(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = p[i * n + j];
    return Isometry(r, m);
}

void mul(const int8_t* a, const int8_t* b, int8_t* c, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += int(a[i * n + k]) * b[k * n + j];
            c[i * n + j] = static_cast<int8_t>(s);
        }
}

bool is_id(const int8_t* a, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i * n + j] != (i == j ? 1 : 0)) return false;
    return true;
}

uint64_t hash_bytes(const int8_t* p, int len) {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < len; ++i) {
        h ^= static_cast<uint8_t>(p[i]);
        h *= 1099511628211ull;
    }
    return h;
}

long long expected_order(int r) {
    for (const auto& row : weyl_order_table())
        if (row.r == r) return row.order;
    return 0;
}

std::string cache_path(int r) {
    const char* dir = std::getenv("CREMONA_CACHE_DIR");
    if (!dir || !*dir) return "";
    return std::string(dir) + "/weyl_r" + std::to_string(r) + ".bin";
}

constexpr char kCacheMagic[8] = {'C', 'R', 'W', 'G', '0', '1', '\n', 0};

}  // namespace

std::optional<std::size_t> GroupTable::lookup(const int8_t* m) const {
    int len = n_ * n_;
    std::size_t mask = buckets_.size() - 1;
    std::size_t pos = hash_bytes(m, len) & mask;
    while (true) {
        uint32_t slot = buckets_[pos];
        if (slot == 0) return std::nullopt;
        std::size_t idx = slot - 1;
        if (std::memcmp(at(idx), m, len) == 0) return idx;
        pos = (pos + 1) & mask;
    }
}

std::size_t GroupTable::insert_if_new(const int8_t* m) {
    int len = n_ * n_;
    std::size_t mask = buckets_.size() - 1;
    std::size_t pos = hash_bytes(m, len) & mask;
    while (true) {
        uint32_t slot = buckets_[pos];
        if (slot == 0) {
            data_.insert(data_.end(), m, m + len);
            buckets_[pos] = static_cast<uint32_t>(count_ + 1);
            return count_++;
        }
        std::size_t idx = slot - 1;
        if (std::memcmp(at(idx), m, len) == 0) return idx;
        pos = (pos + 1) & mask;
    }
}

void GroupTable::rebuild_buckets() {
    std::size_t want = 4;
    while (want < 2 * count_ + 16) want <<= 1;
    buckets_.assign(want, 0);
    int len = n_ * n_;
    std::size_t mask = want - 1;
    for (std::size_t i = 0; i < count_; ++i) {
        std::size_t pos = hash_bytes(at(i), len) & mask;
        while (buckets_[pos] != 0) pos = (pos + 1) & mask;
        buckets_[pos] = static_cast<uint32_t>(i + 1);
    }
}

bool GroupTable::load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    uint32_t r = 0;
    uint64_t count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&r), 4);
    in.read(reinterpret_cast<char*>(&count), 8);
    if (!in || std::memcmp(magic, kCacheMagic, 8) != 0 || int(r) != r_) return false;
    std::size_t len = std::size_t(count) * n_ * n_;
    data_.resize(len);
    in.read(reinterpret_cast<char*>(data_.data()), static_cast<std::streamsize>(len));
    if (!in) return false;
    count_ = count;
    rebuild_buckets();
    return true;
}

void GroupTable::save_cache(const std::string& path) const {
    std::ofstream out(path + ".tmp", std::ios::binary);
    if (!out) return;
    uint32_t r = static_cast<uint32_t>(r_);
    uint64_t count = count_;
    out.write(kCacheMagic, 8);
    out.write(reinterpret_cast<const char*>(&r), 4);
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(data_.data()),
              static_cast<std::streamsize>(data_.size()));
    out.close();
    if (out) std::rename((path + ".tmp").c_str(), path.c_str());
}

GroupTable GroupTable::generate(int r, bool allow_large) {
    if (r == 8)
        throw ResourceError(
            "W(E8) is not enumerable at desk scale; use carter_representative for "
            "explicit elements");
    if (r < 3 || r > 7) throw std::invalid_argument("group generation needs 3 <= r <= 7");
    if (r == 7 && !allow_large)
        throw ResourceError("W(E7) enumeration (2903040 elements) requires the large-run flag");

    GroupTable g;
    g.r_ = r;
    g.n_ = r + 1;

    std::string cpath = cache_path(r);
    if (!cpath.empty() && g.load_cache(cpath)) return g;

    long long expect = expected_order(r);
    g.data_.reserve(std::size_t(expect) * g.n_ * g.n_);
    std::size_t want = 4;
    while (want < std::size_t(2 * expect + 16)) want <<= 1;
    g.buckets_.assign(want, 0);

    auto basis = simple_roots(r);
    std::vector<std::vector<int8_t>> gens;
    for (const auto& alpha : basis.alphas) {
        std::vector<int8_t> p(g.n_ * g.n_);
        pack(reflection(alpha), p.data());
        gens.push_back(std::move(p));
    }

    std::vector<int8_t> id(g.n_ * g.n_, 0);
    for (int i = 0; i < g.n_; ++i) id[i * g.n_ + i] = 1;
    g.insert_if_new(id.data());

    std::vector<int8_t> prod(g.n_ * g.n_);
    for (std::size_t head = 0; head < g.count_; ++head) {
        for (const auto& gen : gens) {
            // copy first: insert_if_new may reallocate data_ under at(head)
            std::vector<int8_t> cur(g.at(head), g.at(head) + g.n_ * g.n_);
            mul(gen.data(), cur.data(), prod.data(), g.n_);
            g.insert_if_new(prod.data());
        }
    }

    if (!cpath.empty()) g.save_cache(cpath);
    return g;
}

Isometry GroupTable::element(std::size_t i) const {
    if (i >= count_) throw std::out_of_range("element index");
    return unpack(r_, at(i));
}

std::optional<std::size_t> GroupTable::index_of(const Isometry& w) const {
    if (w.r != r_) return std::nullopt;
    std::vector<int8_t> p(n_ * n_);
    pack(w, p.data());
    return lookup(p.data());
}

void GroupTable::compute_orders() const {
    if (!orders_.empty()) return;
    orders_.resize(count_);
    int len = n_ * n_;
    std::vector<int8_t> pw(len), tmp(len);
    for (std::size_t i = 0; i < count_; ++i) {
        std::memcpy(pw.data(), at(i), len);
        int k = 1;
        while (!is_id(pw.data(), n_)) {
            mul(pw.data(), at(i), tmp.data(), n_);
            pw.swap(tmp);
            if (++k > kOrderCap) throw std::logic_error("group element order exceeds cap");
        }
        orders_[i] = static_cast<uint8_t>(k);
    }
}

int GroupTable::order_of(std::size_t i) const {
    if (i >= count_) throw std::out_of_range("element index");
    compute_orders();
    return orders_[i];
}

std::vector<ConjClassInfo> GroupTable::class_partition(const std::vector<int>& orders) const {
    compute_orders();
    auto wanted = [&](int o) {
        return std::find(orders.begin(), orders.end(), o) != orders.end();
    };

    auto basis = simple_roots(r_);
    std::vector<std::vector<int8_t>> gens;
    for (const auto& alpha : basis.alphas) {
        std::vector<int8_t> p(n_ * n_);
        pack(reflection(alpha), p.data());
        gens.push_back(std::move(p));
    }

    int len = n_ * n_;
    std::vector<char> assigned(count_, 0);
    std::vector<ConjClassInfo> out;
    std::vector<int8_t> t1(len), t2(len);
    for (std::size_t i = 0; i < count_; ++i) {
        if (assigned[i] || !wanted(orders_[i])) continue;
        std::vector<std::size_t> queue{i};
        assigned[i] = 1;
        std::size_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++size;
            std::size_t x = queue[head];
            for (const auto& gen : gens) {
                // reflections are involutions, so g x g is the conjugate
                mul(gen.data(), at(x), t1.data(), n_);
                mul(t1.data(), gen.data(), t2.data(), n_);
                auto idx = lookup(t2.data());
                if (!idx) throw std::logic_error("conjugate escaped the group table");
                if (!assigned[*idx]) {
                    assigned[*idx] = 1;
                    queue.push_back(*idx);
                }
            }
        }
        ConjClassInfo info;
        info.rep_index = i;
        info.size = size;
        info.inv = class_invariant(element(i));
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const ConjClassInfo& a, const ConjClassInfo& b) {
        if (a.inv.order != b.inv.order) return a.inv.order < b.inv.order;
        if (a.inv.char_poly_factored != b.inv.char_poly_factored)
            return a.inv.char_poly_factored < b.inv.char_poly_factored;
        if (a.size != b.size) return a.size < b.size;
        return a.rep_index < b.rep_index;
    });
    return out;
}

std::vector<std::size_t> GroupTable::commuting_involutions(std::size_t i) const {
    if (i >= count_) throw std::out_of_range("element index");
    compute_orders();
    int len = n_ * n_;
    std::vector<int8_t> ab(len), ba(len);
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < count_; ++s) {
        if (orders_[s] > 2) continue;
        mul(at(i), at(s), ab.data(), n_);
        mul(at(s), at(i), ba.data(), n_);
        if (std::memcmp(ab.data(), ba.data(), len) == 0) out.push_back(s);
    }
    return out;
}

namespace {

// Coefficients of a root on the simple-root basis, via the Gram system.
std::vector<Rational> root_coefficients(const SimpleRootBasis& basis,
                                        const LatticeVector& gamma) {
    int n = static_cast<int>(basis.alphas.size());
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = Rational(intersect(basis.alphas[i], basis.alphas[j]));
        aug[i][n] = Rational(intersect(basis.alphas[i], gamma));
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!aug[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw std::logic_error("singular Gram matrix");
        std::swap(aug[col], aug[piv]);
        Rational inv = Rational(1) / aug[col][col];
        for (int j = 0; j <= n; ++j) aug[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            Rational f = aug[row][col];
            for (int j = 0; j <= n; ++j) aug[row][j] -= f * aug[col][j];
        }
    }
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) c[i] = aug[i][n];
    return c;
}

bool is_positive_root(const SimpleRootBasis& basis, const LatticeVector& gamma) {
    for (const auto& c : root_coefficients(basis, gamma))
        if (c < Rational(0)) return false;
    return true;
}

}  // namespace

Isometry longest_element(int r) {
    auto basis = simple_roots(r);
    Isometry w = Isometry::identity(r);
    while (true) {
        bool advanced = false;
        for (const auto& alpha : basis.alphas) {
            if (is_positive_root(basis, w.apply(alpha))) {
                w = w.compose(reflection(alpha));
                advanced = true;
                break;
            }
        }
        if (!advanced) return w;
    }
}

bool restriction_is_minus_identity(const Isometry& w) {
    auto basis = simple_roots(w.r);
    for (const auto& alpha : basis.alphas)
        if (w.apply(alpha) != -alpha) return false;
    return true;
}

Isometry reflection_product(int r, const std::vector<LatticeVector>& roots) {
    Isometry w = Isometry::identity(r);
    for (const auto& root : roots) w = w.compose(reflection(root));
    return w;
}

std::optional<std::vector<LatticeVector>> find_root_embedding(
    int r, const std::vector<std::vector<int>>& target) {
    auto rs = enumerate_roots(r);
    int m = static_cast<int>(target.size());
    std::vector<LatticeVector> chosen;
    chosen.reserve(m);

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == m) return true;
        for (const auto& cand : rs.roots) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (intersect(chosen[j], cand) != target[j][i]) ok = false;
            if (!ok) continue;
            chosen.push_back(cand);
            if (place(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return chosen;
}

namespace {

struct DiagramComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 0;
};

// Parses a plain product label like "A2^2xA1" or "D4xA1^3" into components.
// Primes and enclosing parentheses are ignored; returns nullopt when a
// token carries a Carter suffix like "(a2)".
std::optional<std::vector<DiagramComponent>> parse_plain_label(const std::string& label) {
    std::string s;
    for (char c : label)
        if (c != '(' && c != ')' && c != '\'') s += c;
    if (label.find("(a") != std::string::npos) return std::nullopt;
    std::vector<DiagramComponent> comps;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('x', pos);
        std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end + 1;
        if (tok.empty()) return std::nullopt;
        char fam = tok[0];
        if (fam != 'A' && fam != 'D' && fam != 'E') return std::nullopt;
        std::size_t caret = tok.find('^');
        int rank = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                                      : caret - 1));
        int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        for (int i = 0; i < mult; ++i) comps.push_back({fam, rank});
    }
    return comps;
}

// Gram constraints of the disjoint union of the component diagrams:
// chains for A_k; D_k forks at the second node; E_k forks at the third.
std::vector<std::vector<int>> diagram_gram(const std::vector<DiagramComponent>& comps) {
    int m = 0;
    for (const auto& c : comps) m += c.rank;
    std::vector<std::vector<int>> g(m, std::vector<int>(m, 0));
    auto link = [&](int a, int b) { g[a][b] = g[b][a] = 1; };
    int base = 0;
    for (const auto& c : comps) {
        int k = c.rank;
        if (c.family == 'A') {
            for (int i = 0; i + 1 < k; ++i) link(base + i, base + i + 1);
        } else if (c.family == 'D') {
            for (int i = 0; i + 2 < k; ++i) link(base + i, base + i + 1);
            link(base + 1, base + k - 1);
        } else {
            for (int i = 0; i + 2 < k; ++i) link(base + i, base + i + 1);
            link(base + 2, base + k - 1);
        }
        base += k;
    }
    return g;
}

Isometry embed_and_multiply(int r, const std::vector<DiagramComponent>& comps) {
    auto roots = find_root_embedding(r, diagram_gram(comps));
    if (!roots) throw SearchError("no orthogonal embedding found for the requested diagram");
    return reflection_product(r, *roots);
}

bool matches_row(const Isometry& w, const ClassTableRow& row) {
    if (isometry_order(w) != row.order) return false;
    IntMat c = restrict_to_root_lattice(w);
    return factor_into_cyclotomics(char_poly(c), row.order) == row.factors;
}

// Swaps the factors exchanged by multiplication with -id on E_r:
// Phi_1 <-> Phi_2 and Phi_3 <-> Phi_6.
CharPolyFactors untwist(const CharPolyFactors& f) {
    CharPolyFactors out;
    for (auto [d, m] : f) {
        int nd = d == 1 ? 2 : d == 2 ? 1 : d == 3 ? 6 : d == 6 ? 3 : -1;
        if (nd < 0) throw SearchError("twist recipe only handles eigenvalues of order dividing 6");
        out.emplace_back(nd, m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Isometry random_search(int r, const ClassTableRow& row, uint64_t seed) {
    auto rs = enumerate_roots(r);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, rs.roots.size() - 1);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        Isometry w = Isometry::identity(r);
        int len = r + 4;
        for (int i = 0; i < len; ++i) w = w.compose(reflection(rs.roots[pick(rng)]));
        try {
            if (matches_row(w, row)) return w;
        } catch (const std::exception&) {
            // order cap or non-cyclotomic factor: not a match, keep looking
        }
    }
    throw SearchError("randomized search budget exhausted for label " + row.label);
}

}  // namespace

Isometry carter_representative(int r, const std::string& label, uint64_t seed) {
    const ClassTableRow* row = nullptr;
    for (const auto& cand : class_table(r))
        if (cand.label == label) { row = &cand; break; }
    if (!row) throw std::invalid_argument("label " + label + " not in the encoded tables for r=" +
                                          std::to_string(r));

    // 1. plain product labels: orthogonal diagram embedding
    if (auto comps = parse_plain_label(label)) {
        Isometry w = embed_and_multiply(r, *comps);
        if (matches_row(w, *row)) return w;
    } else if (label.rfind("E6(a2)", 0) == 0) {
        // 2. E6(a2) rows: square of an E6 Coxeter element, times the
        // Coxeter element of any orthogonal tail component
        std::vector<DiagramComponent> comps{{'E', 6}};
        if (label.size() > 6) {
            auto tail = parse_plain_label(label.substr(7));  // after "E6(a2)x"
            if (!tail) throw SearchError("unparseable tail in label " + label);
            for (const auto& c : *tail) comps.push_back(c);
        }
        auto roots = find_root_embedding(r, diagram_gram(comps));
        if (roots) {
            std::vector<LatticeVector> e6(roots->begin(), roots->begin() + 6);
            std::vector<LatticeVector> tail(roots->begin() + 6, roots->end());
            Isometry h = reflection_product(r, e6);
            Isometry w = h.compose(h).compose(reflection_product(r, tail));
            if (matches_row(w, *row)) return w;
        }
    } else if (label.find("(a") != std::string::npos) {
        // 3. other Carter-starred rows: twist a plain A2^a x A1^b product
        // by the longest element (which is -id on E_r for r = 7, 8)
        try {
            CharPolyFactors plain = untwist(row->factors);
            std::vector<DiagramComponent> comps;
            for (auto [d, m] : plain) {
                if (d == 3)
                    for (int i = 0; i < m; ++i) comps.push_back({'A', 2});
                else if (d == 2)
                    for (int i = 0; i < m; ++i) comps.push_back({'A', 1});
                else if (d != 1)
                    throw SearchError("untwisted target is not an A2/A1 product");
            }
            Isometry w0 = longest_element(r);
            if (restriction_is_minus_identity(w0)) {
                Isometry w = w0.compose(embed_and_multiply(r, comps));
                if (matches_row(w, *row)) return w;
            }
        } catch (const SearchError&) {
            // fall through to the randomized search
        }
    }

    return random_search(r, *row, seed);
}

Isometry carter_representative(int r, const ClassInvariant& target, uint64_t seed) {
    for (const auto& row : class_table(r))
        if (row.order == target.order && row.factors == target.char_poly_factored)
            return carter_representative(r, row.label, seed);
    throw std::invalid_argument("target invariant not in the encoded tables");
}

}  // namespace cremona
