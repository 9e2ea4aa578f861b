#pragma once

// Boolean lattices Q(X u Y) over a split ground set, vertices as bitmasks,
// and blue/red colorings of every vertex.
//
// Bit positions 0..n-1 hold X, positions n..n+k-1 hold Y. A vertex is the
// subset whose indicator is its mask; inclusion is (a & b) == a.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace poset_ramsey {

using VertexMask = std::uint32_t;

inline constexpr unsigned max_mask_bits = 31;
// Full colorings store 2^N bits; N = 24 is 2 MiB.
inline constexpr unsigned default_max_coloring_dimension = 24;

enum class Color : std::uint8_t { red = 0, blue = 1 };

inline constexpr Color opposite(Color c) noexcept {
    return c == Color::blue ? Color::red : Color::blue;
}
inline std::string to_string(Color c) { return c == Color::blue ? "blue" : "red"; }

struct GroundSplit {
    unsigned n = 0;  // |X|
    unsigned k = 0;  // |Y|

    GroundSplit() = default;
    GroundSplit(unsigned n_, unsigned k_) : n(n_), k(k_) {
        if (n + k > max_mask_bits) throw precondition_error("ground set too large for masks");
    }

    unsigned dim() const noexcept { return n + k; }
    VertexMask x_mask() const noexcept { return (VertexMask{1} << n) - 1; }
    VertexMask y_mask() const noexcept { return ((VertexMask{1} << (n + k)) - 1) & ~x_mask(); }
    VertexMask full_mask() const noexcept { return (VertexMask{1} << (n + k)) - 1; }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << (n + k); }

    friend bool operator==(const GroundSplit&, const GroundSplit&) = default;
};

struct SplitParts {
    VertexMask x_part = 0;
    VertexMask y_part = 0;

    friend bool operator==(const SplitParts&, const SplitParts&) = default;
};

inline SplitParts split_parts(VertexMask v, const GroundSplit& g) noexcept {
    return {v & g.x_mask(), v & g.y_mask()};
}

/// Inclusion; for split vertices this is X-part and Y-part inclusion at once.
inline constexpr bool pair_leq(VertexMask a, VertexMask b) noexcept { return (a & b) == a; }
inline constexpr bool pair_less(VertexMask a, VertexMask b) noexcept {
    return a != b && pair_leq(a, b);
}
inline constexpr bool pair_comparable(VertexMask a, VertexMask b) noexcept {
    return pair_leq(a, b) || pair_leq(b, a);
}

inline unsigned layer_of(VertexMask v) noexcept { return std::popcount(v); }

/// A linear ordering (y_1, ..., y_k) of Y, stored as bit positions.
struct OrderingPi {
    std::vector<unsigned> perm;

    void validate(const GroundSplit& g) const {
        if (perm.size() != g.k) throw precondition_error("ordering must list every element of Y");
        std::vector<char> seen(g.k);
        for (auto b : perm) {
            if (b < g.n || b >= g.n + g.k || seen[b - g.n]) {
                throw precondition_error("ordering is not a permutation of Y's bit positions");
            }
            seen[b - g.n] = 1;
        }
    }

    static OrderingPi identity(const GroundSplit& g) {
        OrderingPi pi;
        pi.perm.resize(g.k);
        std::iota(pi.perm.begin(), pi.perm.end(), g.n);
        return pi;
    }

    friend bool operator==(const OrderingPi&, const OrderingPi&) = default;
    friend auto operator<=>(const OrderingPi&, const OrderingPi&) = default;
};

/// Y(i) = {y_1, ..., y_i}.
inline VertexMask prefix_mask(const OrderingPi& pi, std::size_t i) {
    if (i > pi.perm.size()) throw precondition_error("prefix index exceeds |Y|");
    VertexMask m = 0;
    for (std::size_t j = 0; j < i; ++j) m |= VertexMask{1} << pi.perm[j];
    return m;
}

/// All k! orderings of Y in lexicographic order.
inline std::vector<OrderingPi> all_orderings(const GroundSplit& g) {
    std::vector<OrderingPi> out;
    auto pi = OrderingPi::identity(g);
    do {
        out.push_back(pi);
    } while (std::next_permutation(pi.perm.begin(), pi.perm.end()));
    return out;
}

/// Bit v set means vertex v is blue. Always total over all 2^N vertices.
class Coloring {
public:
    Coloring() : Coloring(0) {}

    explicit Coloring(unsigned dim, Color fill = Color::red,
                      unsigned max_dim = default_max_coloring_dimension)
        : dim_(dim) {
        if (dim > max_dim || dim > max_mask_bits) {
            throw budget_exceeded("coloring dimension " + std::to_string(dim) +
                                  " exceeds the cap of " + std::to_string(max_dim));
        }
        words_.assign((vertex_count() + 63) / 64, fill == Color::blue ? ~std::uint64_t{0} : 0);
        trim();
    }

    unsigned dim() const noexcept { return dim_; }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << dim_; }

    bool is_blue(VertexMask v) const noexcept { return (words_[v / 64] >> (v % 64)) & 1u; }
    Color at(VertexMask v) const noexcept { return is_blue(v) ? Color::blue : Color::red; }
    bool has(VertexMask v, Color c) const noexcept { return at(v) == c; }

    void set(VertexMask v, Color c) noexcept {
        const auto bit = std::uint64_t{1} << (v % 64);
        if (c == Color::blue) {
            words_[v / 64] |= bit;
        } else {
            words_[v / 64] &= ~bit;
        }
    }
    void flip(VertexMask v) noexcept { words_[v / 64] ^= std::uint64_t{1} << (v % 64); }

    std::size_t count(Color c) const noexcept {
        std::size_t blue = 0;
        for (auto w : words_) blue += std::popcount(w);
        return c == Color::blue ? blue : vertex_count() - blue;
    }

    /// Packed bits, vertex 0 in bit 0 of word 0.
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    void trim() noexcept {
        if (vertex_count() % 64 != 0) {
            words_.back() &= (std::uint64_t{1} << (vertex_count() % 64)) - 1;
        }
    }

    unsigned dim_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Vertex blue iff its layer (popcount) is listed.
inline Coloring layered_coloring(const GroundSplit& g, const std::vector<unsigned>& blue_layers) {
    for (auto l : blue_layers) {
        if (l > g.dim()) throw precondition_error("layer index exceeds the lattice dimension");
    }
    Coloring c(g.dim());
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        if (std::find(blue_layers.begin(), blue_layers.end(), layer_of(v)) != blue_layers.end()) {
            c.set(v, Color::blue);
        }
    }
    return c;
}

/// SplitMix64 (Steele, Lea, Flood): state advances by the golden-gamma
/// constant, output is the standard 30/27/31 xor-shift-multiply finalizer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

/// Exact rational probability num/den.
struct Probability {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    void validate() const {
        if (den == 0 || num > den) throw precondition_error("probability must lie in [0, 1]");
    }
};

/// Vertex v (ascending) is blue iff the v-th SplitMix64 draw x satisfies
/// x * den < num * 2^64, i.e. x / 2^64 < num / den exactly.
inline Coloring random_coloring(const GroundSplit& g, std::uint64_t seed, Probability p) {
    p.validate();
    Coloring c(g.dim());
    SplitMix64 rng(seed);
    const auto threshold = static_cast<unsigned __int128>(p.num) << 64;
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        const auto x = static_cast<unsigned __int128>(rng.next());
        if (x * p.den < threshold) c.set(v, Color::blue);
    }
    return c;
}

} // namespace poset_ramsey
