#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the search or matching code it is compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <poset_ramsey/lattice.hpp>
#include <poset_ramsey/poset.hpp>

namespace poset_ramsey::oracle {

/// Largest antichain by enumerating every subset (size <= ~20).
inline std::size_t max_antichain_size(const Poset& p) {
    const std::size_t n = p.size();
    std::size_t best = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        const auto size = static_cast<std::size_t>(std::popcount(subset));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!((subset >> a) & 1u)) continue;
            for (std::size_t b = a + 1; b < n && ok; ++b) {
                if (((subset >> b) & 1u) && p.comparable(a, b)) ok = false;
            }
        }
        if (ok) best = size;
    }
    return best;
}

/// Does an induced copy of `target` exist in the relation `host_less` on
/// `host_size` elements? Tries every injection.
template <class HostLess>
bool copy_exists(const Poset& target, std::size_t host_size, HostLess&& host_less,
                 const std::vector<char>& usable = {}) {
    const std::size_t m = target.size();
    if (m > host_size) return false;
    std::vector<std::size_t> image(m);
    std::vector<char> used(host_size);
    auto rec = [&](auto&& self, std::size_t e) -> bool {
        if (e == m) {
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    if (a != b && target.less(a, b) != host_less(image[a], image[b])) return false;
                }
            }
            return true;
        }
        for (std::size_t h = 0; h < host_size; ++h) {
            if (used[h] || (!usable.empty() && !usable[h])) continue;
            used[h] = 1;
            image[e] = h;
            if (self(self, e + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool poset_copy_exists(const Poset& target, const Poset& host) {
    return copy_exists(target, host.size(), [&](std::size_t a, std::size_t b) { return host.less(a, b); });
}

inline bool colored_copy_exists(const Poset& target, const Coloring& c, Color color) {
    std::vector<char> usable(c.vertex_count());
    for (VertexMask v = 0; v < c.vertex_count(); ++v) usable[v] = c.has(v, color);
    return copy_exists(
        target, c.vertex_count(),
        [](std::size_t a, std::size_t b) { return a != b && (a & b) == a; }, usable);
}

inline bool is_witness(const Coloring& c, const Poset& p, unsigned n) {
    if (colored_copy_exists(p, c, Color::blue)) return false;
    if (n > c.dim()) return true;
    // Red Q_n as a poset on subsets of an n-set.
    const auto qn = Poset::from_predicate(std::size_t{1} << n, [](std::size_t a, std::size_t b) {
        return a != b && (a & b) == a;
    });
    return !colored_copy_exists(qn, c, Color::red);
}

/// Plain enumeration of all 2^(2^N) colorings (N <= 3 or so).
inline bool witness_exists(const Poset& p, unsigned n, unsigned dim) {
    const std::size_t vertices = std::size_t{1} << dim;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vertices); ++bits) {
        Coloring c(dim);
        for (VertexMask v = 0; v < vertices; ++v) {
            if ((bits >> v) & 1u) c.set(v, Color::blue);
        }
        if (is_witness(c, p, n)) return true;
    }
    return false;
}

/// Random strict order: random pairs i < j of a hidden permutation, closed.
inline Poset random_poset(std::size_t size, double density, SplitMix64& rng) {
    std::vector<std::size_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = size; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Relation> rel;
    const auto threshold = static_cast<std::uint64_t>(density * 1000.0);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            if (rng.below(1000) < threshold) rel.emplace_back(perm[a], perm[b]);
        }
    }
    return Poset::from_relations(size, rel);
}

inline Coloring coloring_from_bits(unsigned dim, std::uint64_t bits) {
    Coloring c(dim);
    for (VertexMask v = 0; v < (VertexMask{1} << dim); ++v) {
        if ((bits >> v) & 1u) c.set(v, Color::blue);
    }
    return c;
}

} // namespace poset_ramsey::oracle
