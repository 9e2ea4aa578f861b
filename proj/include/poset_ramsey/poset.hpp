#pragma once

// Finite strict partial orders and the families of them this library works
// with: chains, antichains, complete multipartite posets, spindles, Boolean
// lattices, and the gluing of a poset with a unique top onto one with a
// unique bottom.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace poset_ramsey {

// Guard against materializing huge relation matrices by accident
// (2^20 entries is a 1024-element poset, i.e. Q_10).
inline constexpr std::size_t default_relation_budget = std::size_t{1} << 20;

using Relation = std::pair<std::size_t, std::size_t>;

/// A finite poset stored as its strict order relation: less(i, j) means
/// element i lies strictly below element j. Reflexivity is implicit.
///
/// Instances are immutable once built; every factory validates
/// irreflexivity, antisymmetry and transitivity.
class Poset {
public:
    Poset() = default;

    /// Builds the transitive closure of `relations` (pairs i < j). Throws
    /// precondition_error if the relation has a cycle or an index is out of
    /// range.
    static Poset from_relations(std::size_t size, std::span<const Relation> relations,
                                std::size_t relation_budget = default_relation_budget) {
        Poset p(size, relation_budget);
        for (auto [i, j] : relations) {
            if (i >= size || j >= size) {
                throw precondition_error("relation (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") out of range for size " +
                                         std::to_string(size));
            }
            p.set(i, j);
        }
        p.close();
        for (std::size_t i = 0; i < size; ++i) {
            if (p.less(i, i)) {
                throw precondition_error("relation contains a cycle through element " +
                                         std::to_string(i));
            }
        }
        return p;
    }

    /// Builds from a predicate that must already describe a strict partial
    /// order; the three axioms are checked, not repaired.
    template <class Less>
    static Poset from_predicate(std::size_t size, Less&& less,
                                std::size_t relation_budget = default_relation_budget) {
        Poset p(size, relation_budget);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (less(i, j)) p.set(i, j);
            }
        }
        if (auto bad = p.first_axiom_failure()) throw precondition_error(*bad);
        return p;
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool less(std::size_t i, std::size_t j) const noexcept {
        return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    bool comparable(std::size_t i, std::size_t j) const noexcept {
        return less(i, j) || less(j, i);
    }

    std::size_t count_above(std::size_t i) const noexcept {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += std::popcount(rows_[i * words_ + w]);
        return c;
    }
    std::size_t count_below(std::size_t i) const noexcept {
        std::size_t c = 0;
        for (std::size_t j = 0; j < size_; ++j) c += less(j, i);
        return c;
    }
    std::size_t relation_count() const noexcept {
        std::size_t c = 0;
        for (auto w : rows_) c += std::popcount(w);
        return c;
    }

    std::vector<std::size_t> maximal_elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i) {
            if (count_above(i) == 0) out.push_back(i);
        }
        return out;
    }
    std::vector<std::size_t> minimal_elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i) {
            if (count_below(i) == 0) out.push_back(i);
        }
        return out;
    }
    std::optional<std::size_t> unique_maximum() const {
        auto m = maximal_elements();
        if (m.size() != 1) return std::nullopt;
        return m.front();
    }
    std::optional<std::size_t> unique_minimum() const {
        auto m = minimal_elements();
        if (m.size() != 1) return std::nullopt;
        return m.front();
    }

    /// Number of elements on the longest chain ending strictly below i.
    std::vector<std::size_t> depths() const {
        std::vector<std::size_t> d(size_, 0);
        for (auto i : linear_extension()) {
            for (std::size_t j = 0; j < size_; ++j) {
                if (less(j, i)) d[i] = std::max(d[i], d[j] + 1);
            }
        }
        return d;
    }
    /// Number of elements on the longest chain starting strictly above i.
    std::vector<std::size_t> heights() const {
        std::vector<std::size_t> h(size_, 0);
        auto order = linear_extension();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            for (std::size_t j = 0; j < size_; ++j) {
                if (less(*it, j)) h[*it] = std::max(h[*it], h[j] + 1);
            }
        }
        return h;
    }

    /// Elements sorted so that i < j implies i precedes j (ties by index).
    std::vector<std::size_t> linear_extension() const {
        std::vector<std::size_t> order(size_);
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> below(size_);
        for (std::size_t i = 0; i < size_; ++i) below[i] = count_below(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return below[a] < below[b]; });
        return order;
    }

    /// Cover relations of the Hasse diagram, sorted.
    std::vector<Relation> transitive_reduction() const {
        std::vector<Relation> out;
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                if (!less(i, j)) continue;
                bool covered = true;
                for (std::size_t m = 0; m < size_ && covered; ++m) {
                    if (less(i, m) && less(m, j)) covered = false;
                }
                if (covered) out.emplace_back(i, j);
            }
        }
        return out;
    }

    /// Subposet induced on `elements`, renumbered in the given order.
    Poset induced(std::span<const std::size_t> elements) const {
        return from_predicate(elements.size(), [&](std::size_t a, std::size_t b) {
            return less(elements[a], elements[b]);
        });
    }

    /// Description of the first violated axiom, if any.
    std::optional<std::string> first_axiom_failure() const {
        for (std::size_t i = 0; i < size_; ++i) {
            if (less(i, i)) return "not irreflexive at element " + std::to_string(i);
        }
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                if (!less(i, j)) continue;
                if (less(j, i)) {
                    return "not antisymmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
                }
                for (std::size_t k = 0; k < size_; ++k) {
                    if (less(j, k) && !less(i, k)) {
                        return "not transitive at (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")";
                    }
                }
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    Poset(std::size_t size, std::size_t relation_budget)
        : size_(size), words_((size + 63) / 64) {
        if (size != 0 && size > relation_budget / size) {
            throw budget_exceeded("poset with " + std::to_string(size) +
                                  " elements exceeds the relation budget of " +
                                  std::to_string(relation_budget) + " entries");
        }
        rows_.assign(size_ * words_, 0);
    }

    void set(std::size_t i, std::size_t j) noexcept {
        rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    // Warshall on bit rows.
    void close() noexcept {
        for (std::size_t k = 0; k < size_; ++k) {
            for (std::size_t i = 0; i < size_; ++i) {
                if (!less(i, k)) continue;
                for (std::size_t w = 0; w < words_; ++w) {
                    rows_[i * words_ + w] |= rows_[k * words_ + w];
                }
            }
        }
    }

    std::size_t size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Layer sizes (t_1, ..., t_l) of a complete multipartite poset, bottom layer
/// first.
struct MultipartiteSpec {
    std::vector<std::size_t> layer_sizes;

    std::size_t layers() const noexcept { return layer_sizes.size(); }
    std::size_t total() const noexcept {
        return std::accumulate(layer_sizes.begin(), layer_sizes.end(), std::size_t{0});
    }
    std::size_t widest() const noexcept {
        return layer_sizes.empty() ? 0
                                   : *std::max_element(layer_sizes.begin(), layer_sizes.end());
    }
    void validate() const {
        if (layer_sizes.empty()) throw precondition_error("multipartite spec needs a layer");
        for (auto t : layer_sizes) {
            if (t == 0) throw precondition_error("multipartite layer sizes must be positive");
        }
    }
};

/// An r-chain below an s-antichain below a t-chain.
struct SpindleSpec {
    std::size_t r = 0;
    std::size_t s = 1;
    std::size_t t = 0;

    void validate() const {
        if (s == 0) throw precondition_error("spindle antichain size must be at least 1");
    }
    MultipartiteSpec as_multipartite() const {
        MultipartiteSpec spec;
        spec.layer_sizes.assign(r, 1);
        spec.layer_sizes.push_back(s);
        spec.layer_sizes.insert(spec.layer_sizes.end(), t, 1);
        return spec;
    }
    std::size_t size() const noexcept { return r + s + t; }
};

inline Poset make_chain(std::size_t length) {
    return Poset::from_predicate(length, [](std::size_t i, std::size_t j) { return i < j; });
}

inline Poset make_antichain(std::size_t size) {
    return Poset::from_predicate(size, [](std::size_t, std::size_t) { return false; });
}

/// Elements are numbered layer by layer from the bottom, in construction
/// order within a layer.
inline Poset make_complete_multipartite(const MultipartiteSpec& spec) {
    spec.validate();
    std::vector<std::size_t> layer_of;
    layer_of.reserve(spec.total());
    for (std::size_t l = 0; l < spec.layers(); ++l) {
        layer_of.insert(layer_of.end(), spec.layer_sizes[l], l);
    }
    return Poset::from_predicate(layer_of.size(), [&](std::size_t i, std::size_t j) {
        return layer_of[i] < layer_of[j];
    });
}

inline Poset make_spindle(const SpindleSpec& spec) {
    spec.validate();
    return make_complete_multipartite(spec.as_multipartite());
}

inline Poset make_diamond(std::size_t s) { return make_spindle({1, s, 1}); }
inline Poset make_fork(std::size_t s) { return make_spindle({1, s, 0}); }

/// Element v is the subset whose indicator bitmask is v.
inline Poset make_boolean_poset(std::size_t dimension,
                                std::size_t relation_budget = default_relation_budget) {
    if (dimension >= 32) throw budget_exceeded("Boolean poset dimension too large");
    const std::size_t n = std::size_t{1} << dimension;
    return Poset::from_predicate(
        n, [](std::size_t a, std::size_t b) { return a != b && (a & b) == a; },
        relation_budget);
}

/// Identifies the unique maximum of `lower` with the unique minimum of
/// `upper`. Elements of `lower` keep their indices (the glued vertex keeps the
/// index of lower's maximum); the remaining elements of `upper` follow in
/// their original order.
inline Poset glue(const Poset& lower, const Poset& upper) {
    const auto top = lower.unique_maximum();
    if (!top) throw precondition_error("glue: lower poset has no unique maximal element");
    const auto bottom = upper.unique_minimum();
    if (!bottom) throw precondition_error("glue: upper poset has no unique minimal element");

    const std::size_t n1 = lower.size();
    const std::size_t size = n1 + upper.size() - 1;
    // origin[e] = index in `upper` for appended elements
    std::vector<std::size_t> origin;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        if (j != *bottom) origin.push_back(j);
    }
    const std::size_t glued = *top;
    enum class Part { lower, upper, glued };
    auto part = [&](std::size_t e) {
        if (e == glued) return Part::glued;
        return e < n1 ? Part::lower : Part::upper;
    };
    return Poset::from_predicate(size, [&](std::size_t x, std::size_t y) {
        const Part px = part(x), py = part(y);
        if (px == Part::lower && py == Part::lower) return lower.less(x, y);
        if (px == Part::upper && py == Part::upper) {
            return upper.less(origin[x - n1], origin[y - n1]);
        }
        if (px == Part::lower && py == Part::upper) return true;
        if (px == Part::lower && py == Part::glued) return true;
        if (px == Part::glued && py == Part::upper) return true;
        return false;
    });
}

} // namespace poset_ramsey
