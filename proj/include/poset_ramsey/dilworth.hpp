#pragma once

// Maximum antichains and minimum chain covers through bipartite matching on
// the strict order (Koenig's theorem). Both results are exact and certify
// each other: |cover| == |antichain|.

#include <cstddef>
#include <limits>
#include <vector>

#include "poset.hpp"

namespace poset_ramsey {

/// Chains of a chain cover, each listed bottom to top.
struct ChainCover {
    std::vector<std::vector<std::size_t>> chains;

    std::size_t size() const noexcept { return chains.size(); }
};

namespace detail {

inline constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

// Left copy of element i is joined to right copy of j whenever i < j.
struct OrderMatching {
    std::vector<std::size_t> right_of;  // left i -> right j
    std::vector<std::size_t> left_of;   // right j -> left i
    std::size_t size = 0;
};

inline bool augment(const Poset& p, std::size_t i, std::vector<char>& seen, OrderMatching& m) {
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (!p.less(i, j) || seen[j]) continue;
        seen[j] = 1;
        if (m.left_of[j] == unmatched || augment(p, m.left_of[j], seen, m)) {
            m.right_of[i] = j;
            m.left_of[j] = i;
            return true;
        }
    }
    return false;
}

inline OrderMatching maximum_order_matching(const Poset& p) {
    OrderMatching m;
    m.right_of.assign(p.size(), unmatched);
    m.left_of.assign(p.size(), unmatched);
    std::vector<char> seen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(p, i, seen, m)) ++m.size;
    }
    return m;
}

} // namespace detail

/// Minimum chain cover; its size equals the width of `p`.
inline ChainCover dilworth_cover(const Poset& p) {
    const auto m = detail::maximum_order_matching(p);
    ChainCover cover;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (m.left_of[i] != detail::unmatched) continue;  // not a chain head
        auto& chain = cover.chains.emplace_back();
        for (std::size_t e = i; e != detail::unmatched; e = m.right_of[e]) chain.push_back(e);
    }
    return cover;
}

/// A maximum antichain, ascending element order.
inline std::vector<std::size_t> max_antichain(const Poset& p) {
    const auto m = detail::maximum_order_matching(p);
    const std::size_t n = p.size();
    // Alternating reachability from unmatched left vertices.
    std::vector<char> left_reached(n), right_reached(n);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.right_of[i] == detail::unmatched) {
            left_reached[i] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.less(i, j) || right_reached[j]) continue;
            right_reached[j] = 1;
            const auto next = m.left_of[j];
            if (next != detail::unmatched && !left_reached[next]) {
                left_reached[next] = 1;
                stack.push_back(next);
            }
        }
    }
    // Koenig cover = (L \ reached) u (R n reached); the antichain is what it misses.
    std::vector<std::size_t> antichain;
    for (std::size_t x = 0; x < n; ++x) {
        if (left_reached[x] && !right_reached[x]) antichain.push_back(x);
    }
    if (antichain.size() != n - m.size) {
        throw invariant_violation("Koenig construction produced an antichain of the wrong size");
    }
    return antichain;
}

inline bool is_antichain(const Poset& p, std::span<const std::size_t> elements) {
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = a + 1; b < elements.size(); ++b) {
            if (elements[a] == elements[b] || p.comparable(elements[a], elements[b])) return false;
        }
    }
    return true;
}

/// Disjoint chains whose union is every element of `p`.
inline bool is_chain_cover(const Poset& p, const ChainCover& cover) {
    std::vector<char> used(p.size());
    for (const auto& chain : cover.chains) {
        if (chain.empty()) return false;
        for (std::size_t a = 0; a < chain.size(); ++a) {
            if (chain[a] >= p.size() || used[chain[a]]) return false;
            used[chain[a]] = 1;
            if (a + 1 < chain.size() && !p.less(chain[a], chain[a + 1])) return false;
        }
    }
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

} // namespace poset_ramsey
