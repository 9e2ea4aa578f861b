#pragma once

// Monochromatic induced copies of a poset inside a colored Boolean lattice,
// witness colorings (no blue P, no red Q_n), and exact poset Ramsey numbers
// R(P, Q_n) for small lattices.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace poset_ramsey {

/// images[e] is the lattice vertex that target element e maps to.
struct Embedding {
    std::vector<VertexMask> images;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Pins one target element to one lattice vertex.
struct Anchor {
    std::size_t element = 0;
    VertexMask vertex = 0;
};

/// Independent re-check: injective, induced (order preserved and reflected
/// under inclusion), every image inside the lattice and of color `color`.
inline bool is_colored_copy(const Poset& target, const Coloring& coloring, Color color,
                            const Embedding& e) {
    if (e.images.size() != target.size()) return false;
    for (std::size_t a = 0; a < e.images.size(); ++a) {
        if (e.images[a] >= coloring.vertex_count()) return false;
        if (!coloring.has(e.images[a], color)) return false;
        for (std::size_t b = 0; b < e.images.size(); ++b) {
            if (a == b) continue;
            if (e.images[a] == e.images[b]) return false;
            if (target.less(a, b) != pair_less(e.images[a], e.images[b])) return false;
        }
    }
    return true;
}

namespace detail {

/// Set of lattice vertices as packed bits.
class VertexSet {
public:
    explicit VertexSet(unsigned dim) : words_(((std::size_t{1} << dim) + 63) / 64) {}

    static VertexSet of_color(const Coloring& c, Color color) {
        VertexSet s(c.dim());
        for (std::size_t w = 0; w < s.words_.size(); ++w) {
            s.words_[w] = color == Color::blue ? c.words()[w] : ~c.words()[w];
        }
        s.trim(c.dim());
        return s;
    }

    bool contains(VertexMask v) const noexcept { return (words_[v / 64] >> (v % 64)) & 1u; }
    void insert(VertexMask v) noexcept { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void erase(VertexMask v) noexcept { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

private:
    void trim(unsigned dim) noexcept {
        const std::size_t n = std::size_t{1} << dim;
        if (n % 64 != 0) words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    }

    std::vector<std::uint64_t> words_;
};

/// Backtracking embedder. Target elements are placed in a fixed order (the
/// anchored element first, then a linear extension), each candidate vertex
/// drawn from the interval [join of images below, meet of images above] in
/// ascending mask order.
class LatticeEmbedder {
public:
    LatticeEmbedder(const Poset& target, unsigned dim, std::optional<std::size_t> anchored = {})
        : target_(target), dim_(dim), depth_(target.depths()), height_(target.heights()) {
        order_ = target.linear_extension();
        if (anchored) {
            auto it = std::find(order_.begin(), order_.end(), *anchored);
            std::rotate(order_.begin(), it, it + 1);
        }
        below_.resize(order_.size());
        above_.resize(order_.size());
        apart_.resize(order_.size());
        for (std::size_t pos = 0; pos < order_.size(); ++pos) {
            const auto x = order_[pos];
            for (std::size_t prev = 0; prev < pos; ++prev) {
                const auto a = order_[prev];
                if (target.less(a, x)) {
                    below_[pos].push_back(a);
                } else if (target.less(x, a)) {
                    above_[pos].push_back(a);
                } else {
                    apart_[pos].push_back(a);
                }
            }
        }
    }

    /// `allowed` restricts the usable vertices; `pinned` fixes the anchored
    /// element's image (it must be allowed).
    std::optional<Embedding> find(const VertexSet& allowed, std::optional<VertexMask> pinned = {}) {
        if (target_.size() > (std::size_t{1} << dim_)) return std::nullopt;
        allowed_ = &allowed;
        pinned_ = pinned;
        image_.assign(target_.size(), 0);
        if (!extend(0)) return std::nullopt;
        return Embedding{image_};
    }

private:
    bool admissible(std::size_t pos, VertexMask v) const {
        const auto x = order_[pos];
        if (!allowed_->contains(v)) return false;
        const auto layer = static_cast<std::size_t>(std::popcount(v));
        if (layer < depth_[x] || dim_ - layer < height_[x]) return false;
        for (std::size_t prev = 0; prev < pos; ++prev) {
            if (image_[order_[prev]] == v) return false;
        }
        for (auto a : apart_[pos]) {
            if (pair_comparable(v, image_[a])) return false;
        }
        return true;
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size()) return true;
        const auto x = order_[pos];
        const VertexMask full = dim_ == 0 ? 0 : static_cast<VertexMask>((std::uint64_t{1} << dim_) - 1);
        VertexMask lower = 0, upper = full;
        for (auto a : below_[pos]) lower |= image_[a];
        for (auto a : above_[pos]) upper &= image_[a];
        if (!pair_leq(lower, upper)) return false;

        if (pos == 0 && pinned_) {
            if (!pair_leq(lower, *pinned_) || !pair_leq(*pinned_, upper)) return false;
            if (!admissible(pos, *pinned_)) return false;
            image_[x] = *pinned_;
            return extend(pos + 1);
        }
        const VertexMask free = upper & ~lower;
        VertexMask s = 0;
        while (true) {
            const VertexMask v = lower | s;
            if (admissible(pos, v)) {
                image_[x] = v;
                if (extend(pos + 1)) return true;
            }
            if (s == free) break;
            s = ((s | ~free) + 1) & free;
        }
        return false;
    }

    const Poset& target_;
    unsigned dim_;
    std::vector<std::size_t> depth_, height_, order_;
    std::vector<std::vector<std::size_t>> below_, above_, apart_;
    const VertexSet* allowed_ = nullptr;
    std::optional<VertexMask> pinned_;
    std::vector<VertexMask> image_;
};

} // namespace detail

/// An induced copy of `target` on vertices of color `color`, or none after a
/// complete search. With an anchor, the copy maps anchor.element to
/// anchor.vertex.
inline std::optional<Embedding> find_colored_copy(const Poset& target, const Coloring& coloring,
                                                  Color color,
                                                  std::optional<Anchor> anchor = std::nullopt) {
    if (anchor) {
        if (anchor->element >= target.size()) throw precondition_error("anchor element out of range");
        if (anchor->vertex >= coloring.vertex_count()) throw precondition_error("anchor vertex out of range");
        if (!coloring.has(anchor->vertex, color)) {
            throw precondition_error("anchor vertex is not " + to_string(color));
        }
    }
    const auto allowed = detail::VertexSet::of_color(coloring, color);
    detail::LatticeEmbedder embedder(target, coloring.dim(),
                                     anchor ? std::optional(anchor->element) : std::nullopt);
    return embedder.find(allowed, anchor ? std::optional(anchor->vertex) : std::nullopt);
}

struct WitnessVerdict {
    bool ok = true;
    // Set when !ok: an offending copy and its color.
    std::optional<Embedding> violation;
    Color color = Color::blue;
};

/// A witness for R(P, Q_n) > N has no blue copy of `p` and no red copy of Q_n.
inline WitnessVerdict verify_witness(const Coloring& coloring, const Poset& p, unsigned n) {
    if (auto blue = find_colored_copy(p, coloring, Color::blue)) {
        return {false, std::move(blue), Color::blue};
    }
    if (n <= coloring.dim()) {
        if (auto red = find_colored_copy(make_boolean_poset(n), coloring, Color::red)) {
            return {false, std::move(red), Color::red};
        }
    }
    return {};
}

struct SearchOptions {
    bool symmetry = true;
    // Search nodes (vertex color assignments tried) before giving up.
    std::uint64_t max_nodes = std::uint64_t{1} << 26;
    unsigned max_dim = default_max_coloring_dimension;
};

enum class SearchStatus { found, none, inconclusive };

struct WitnessSearch {
    SearchStatus status = SearchStatus::none;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

// Ground-set permutations acting on masks, identity excluded.
inline std::vector<std::vector<VertexMask>> mask_permutations(unsigned dim) {
    std::vector<unsigned> perm(dim);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<VertexMask>> out;
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<VertexMask> table(std::size_t{1} << dim);
        for (VertexMask u = 0; u < table.size(); ++u) {
            VertexMask w = 0;
            for (unsigned b = 0; b < dim; ++b) {
                if ((u >> b) & 1u) w |= VertexMask{1} << perm[b];
            }
            table[u] = w;
        }
        out.push_back(std::move(table));
    }
    return out;
}

/// Depth-first search over colorings, vertices in ascending mask order, red
/// tried before blue, so the first witness found is the lexicographically
/// least one (bit string indexed by mask, red < blue).
class WitnessSearcher {
public:
    WitnessSearcher(const Poset& p, unsigned n, unsigned dim, const SearchOptions& options)
        : p_(p), n_(n), dim_(dim), options_(options), qn_(make_boolean_poset(n)),
          coloring_(dim, Color::red, options.max_dim), blue_(dim), red_(dim),
          qn_embedder_(qn_, dim, qn_.size() - 1) {
        for (auto m : p.maximal_elements()) {
            top_embedders_.emplace_back(m, LatticeEmbedder(p, dim, m));
        }
        if (options.symmetry) perms_ = mask_permutations(dim);
    }

    WitnessSearch run() {
        WitnessSearch result;
        if (p_.empty()) return result;  // the empty poset is always a blue copy
        const bool complete = assign(0);
        result.nodes = nodes_;
        if (found_) {
            result.status = SearchStatus::found;
            result.witness = coloring_;
        } else {
            result.status = complete ? SearchStatus::none : SearchStatus::inconclusive;
        }
        return result;
    }

private:
    // True when the subtree was explored completely (or a witness found).
    bool assign(VertexMask v) {
        if (v == coloring_.vertex_count()) {
            if (verify_witness(coloring_, p_, n_).ok) found_ = true;
            return true;
        }
        for (Color c : {Color::red, Color::blue}) {
            if (++nodes_ > options_.max_nodes) return false;
            coloring_.set(v, c);
            auto& set = c == Color::blue ? blue_ : red_;
            set.insert(v);
            if (!creates_copy(v, c) && canonical(v)) {
                if (!assign(v + 1)) return false;
                if (found_) return true;
            }
            set.erase(v);
        }
        coloring_.set(v, Color::red);
        return true;
    }

    // Every vertex below v in mask order is colored. A blue copy of p whose
    // numerically largest image is v maps a maximal element of p to v; a red
    // Q_n whose top is v lies entirely inside the colored downset of v.
    bool creates_copy(VertexMask v, Color c) {
        if (c == Color::blue) {
            for (auto& [element, embedder] : top_embedders_) {
                if (embedder.find(blue_, v)) return true;
            }
            return false;
        }
        if (static_cast<unsigned>(std::popcount(v)) < n_) return false;
        return qn_embedder_.find(red_, v).has_value();
    }

    // Rejects the prefix when some ground-set permutation sigma makes
    // c(sigma(.)) lexicographically smaller on a range fully decided by it.
    bool canonical(VertexMask v) const {
        for (const auto& sigma : perms_) {
            for (VertexMask u = 0; u <= v; ++u) {
                const VertexMask w = sigma[u];
                if (w > v) break;
                const bool cu = coloring_.is_blue(u), cw = coloring_.is_blue(w);
                if (cw == cu) continue;
                if (!cw) return false;
                break;
            }
        }
        return true;
    }

    const Poset& p_;
    unsigned n_;
    unsigned dim_;
    SearchOptions options_;
    Poset qn_;
    Coloring coloring_;
    VertexSet blue_, red_;
    LatticeEmbedder qn_embedder_;
    std::vector<std::pair<std::size_t, LatticeEmbedder>> top_embedders_;
    std::vector<std::vector<VertexMask>> perms_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
};

} // namespace detail

/// Searches for a coloring of Q_N with no blue copy of `p` and no red Q_n.
inline WitnessSearch find_witness(const Poset& p, unsigned n, unsigned dim,
                                  const SearchOptions& options = {}) {
    if (dim > options.max_dim) {
        throw budget_exceeded("2^" + std::to_string(dim) + " vertices exceed the coloring cap");
    }
    return detail::WitnessSearcher(p, n, dim, options).run();
}

enum class RamseyStatus { exact, lower_bound_only, inconclusive };

/// On `exact`, value = R(P, Q_n) and witnesses[N] certifies R > N for every
/// N < value. Otherwise value is the best certified lower bound; for
/// `inconclusive` the search budget ran out at N = value.
struct RamseyResult {
    RamseyStatus status = RamseyStatus::exact;
    unsigned value = 0;
    std::vector<Coloring> witnesses;
    std::uint64_t nodes = 0;
};

inline RamseyResult ramsey_exact(const Poset& p, unsigned n, unsigned max_dim,
                                 const SearchOptions& options = {}) {
    RamseyResult result;
    for (unsigned dim = 0; dim <= max_dim; ++dim) {
        if (dim < n && !p.empty()) {
            // No Q_n fits in Q_N at all, so the all-red coloring is a witness.
            result.witnesses.emplace_back(dim, Color::red, options.max_dim);
            continue;
        }
        const auto search = find_witness(p, n, dim, options);
        result.nodes += search.nodes;
        switch (search.status) {
        case SearchStatus::found:
            result.witnesses.push_back(*search.witness);
            break;
        case SearchStatus::none:
            result.status = RamseyStatus::exact;
            result.value = dim;
            return result;
        case SearchStatus::inconclusive:
            result.status = RamseyStatus::inconclusive;
            result.value = dim;
            return result;
        }
    }
    result.status = RamseyStatus::lower_bound_only;
    result.value = max_dim + 1;
    return result;
}

} // namespace poset_ramsey
