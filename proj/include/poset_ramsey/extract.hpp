#pragma once

// Executable forms of the structural arguments behind the upper bounds:
//
//  * chain_or_red: for an ordering pi of Y, either a blue chain
//    (X_0, Y(0)) < ... < (X_k, Y(k)) with nested X-parts, or a red Q_n;
//  * the spindle pipeline: blue chains for many orderings, grouped by their
//    r lowest and t highest vertices, then either an s-antichain among the
//    chain vertices (a blue spindle) or a small Dilworth cover whose
//    Y-restrictions force two orderings to coincide;
//  * clear-vertex classification used when gluing two posets.
//
// Every result is a certificate with an independent checker that uses only
// lattice primitives.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "dilworth.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "search.hpp"

namespace poset_ramsey {

struct CheckResult {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// vertices[i] = (X_i, Y(i)) for the ordering pi.
struct BlueChainCert {
    GroundSplit split;
    OrderingPi pi;
    std::vector<VertexMask> vertices;

    friend bool operator==(const BlueChainCert&, const BlueChainCert&) = default;
};

/// A red copy of Q_n; images[v] is the image of the subset with mask v.
struct RedQnCert {
    unsigned n = 0;
    Embedding embedding;

    friend bool operator==(const RedQnCert&, const RedQnCert&) = default;
};

using ChainOrRed = std::variant<BlueChainCert, RedQnCert>;

inline CheckResult check_blue_chain(const BlueChainCert& cert, const Coloring& coloring) {
    const auto& g = cert.split;
    if (g.dim() != coloring.dim()) return CheckResult::fail("split does not match coloring dimension");
    try {
        cert.pi.validate(g);
    } catch (const precondition_error& e) {
        return CheckResult::fail(e.what());
    }
    if (cert.vertices.size() != g.k + 1) return CheckResult::fail("chain must have k+1 vertices");
    for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
        const auto v = cert.vertices[i];
        if (v > g.full_mask()) return CheckResult::fail("vertex outside the lattice");
        if (!coloring.is_blue(v)) return CheckResult::fail("vertex " + std::to_string(i) + " is not blue");
        const auto parts = split_parts(v, g);
        if (parts.y_part != prefix_mask(cert.pi, i)) {
            return CheckResult::fail("Y-part of vertex " + std::to_string(i) + " is not Y(" +
                                     std::to_string(i) + ")");
        }
        if (i > 0 && !pair_leq(split_parts(cert.vertices[i - 1], g).x_part, parts.x_part)) {
            return CheckResult::fail("X-parts not nested at " + std::to_string(i));
        }
    }
    return {};
}

inline CheckResult check_red_qn(const RedQnCert& cert, const Coloring& coloring) {
    const auto& images = cert.embedding.images;
    if (cert.n > max_mask_bits || images.size() != (std::size_t{1} << cert.n)) {
        return CheckResult::fail("red Q_n certificate needs 2^n images");
    }
    for (VertexMask a = 0; a < images.size(); ++a) {
        if (images[a] >= coloring.vertex_count()) return CheckResult::fail("image outside the lattice");
        if (coloring.is_blue(images[a])) return CheckResult::fail("image " + std::to_string(a) + " is blue");
        for (VertexMask b = 0; b < images.size(); ++b) {
            if (a != b && images[a] == images[b]) return CheckResult::fail("images not distinct");
            if (pair_leq(a, b) != pair_leq(images[a], images[b])) {
                return CheckResult::fail("inclusion not preserved/reflected");
            }
        }
    }
    return {};
}

/// Blue chain first (nested X-parts chosen left to right, smallest mask
/// first); otherwise a red Q_n. Throws invariant_violation if neither exists,
/// which the chain-versus-red-cube dichotomy rules out.
inline ChainOrRed chain_or_red(const Coloring& coloring, const GroundSplit& g, const OrderingPi& pi) {
    if (coloring.dim() != g.dim()) throw precondition_error("coloring dimension must be n+k");
    pi.validate(g);
    const std::size_t xs = std::size_t{1} << g.n;

    // extendable[i][X]: a valid chain tail starts at (X, Y(i)).
    std::vector<std::vector<char>> extendable(g.k + 1, std::vector<char>(xs));
    for (std::size_t i = g.k + 1; i-- > 0;) {
        const auto y = prefix_mask(pi, i);
        std::vector<char> has_superset(xs, 1);
        if (i < g.k) {
            has_superset = extendable[i + 1];
            for (unsigned b = 0; b < g.n; ++b) {
                for (std::size_t x = 0; x < xs; ++x) {
                    if (!((x >> b) & 1u)) has_superset[x] |= has_superset[x | (std::size_t{1} << b)];
                }
            }
        }
        for (std::size_t x = 0; x < xs; ++x) {
            extendable[i][x] = has_superset[x] && coloring.is_blue(static_cast<VertexMask>(x) | y);
        }
    }

    BlueChainCert cert{g, pi, {}};
    VertexMask prev = 0;
    for (std::size_t i = 0; i <= g.k; ++i) {
        std::optional<VertexMask> pick;
        for (std::size_t x = 0; x < xs; ++x) {
            if (extendable[i][x] && pair_leq(prev, static_cast<VertexMask>(x))) {
                pick = static_cast<VertexMask>(x);
                break;
            }
        }
        if (!pick) break;
        prev = *pick;
        cert.vertices.push_back(*pick | prefix_mask(pi, i));
    }
    if (cert.vertices.size() == g.k + 1) return cert;
    if (!cert.vertices.empty()) throw invariant_violation("blue chain search lost its tail");

    if (auto red = find_colored_copy(make_boolean_poset(g.n), coloring, Color::red)) {
        return RedQnCert{g.n, std::move(*red)};
    }
    throw invariant_violation("coloring has neither a blue Y-chain nor a red Q_n");
}

struct ChainFamily {
    GroundSplit split;
    std::vector<BlueChainCert> entries;
};

using FamilyOrRed = std::variant<ChainFamily, RedQnCert>;

/// One blue chain per ordering, or the red Q_n of the lowest-index ordering
/// that produced one. Work is spread over `threads` workers; the result does
/// not depend on the thread count.
inline FamilyOrRed collect_chain_family(const Coloring& coloring, const GroundSplit& g,
                                        const std::vector<OrderingPi>& orderings,
                                        unsigned threads = 1) {
    {
        std::set<OrderingPi> distinct(orderings.begin(), orderings.end());
        if (distinct.size() != orderings.size()) throw precondition_error("orderings must be distinct");
    }
    std::vector<std::optional<ChainOrRed>> results(orderings.size());
    std::vector<std::exception_ptr> errors(orderings.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_stop{orderings.size()};
    auto stop_at = [&](std::size_t i) {
        auto cur = first_stop.load();
        while (i < cur && !first_stop.compare_exchange_weak(cur, i)) {
        }
    };
    auto work = [&] {
        for (std::size_t i = next++; i < orderings.size(); i = next++) {
            if (i > first_stop.load()) continue;
            try {
                results[i] = chain_or_red(coloring, g, orderings[i]);
                if (std::holds_alternative<RedQnCert>(*results[i])) stop_at(i);
            } catch (...) {
                errors[i] = std::current_exception();
                stop_at(i);
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
    }
    if (const auto i = first_stop.load(); i < orderings.size()) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        return std::get<RedQnCert>(*results[i]);
    }
    ChainFamily family{g, {}};
    for (auto& r : results) family.entries.push_back(std::get<BlueChainCert>(std::move(*r)));
    return family;
}

/// Members agreeing on the vertices at every index in I = {0..r-1} u {k-t+1..k}.
struct EndClass {
    GroundSplit split;
    std::vector<std::size_t> indices;
    std::vector<VertexMask> end_vertices;
    std::vector<BlueChainCert> members;
};

/// Partition by end-vertex tuple, largest class first (ties: first member
/// earlier in the family).
inline std::vector<EndClass> pigeonhole_end_classes(const ChainFamily& family, std::size_t r,
                                                    std::size_t t) {
    const auto k = family.split.k;
    if (r + t > k + 1) throw precondition_error("r + t must not exceed k + 1");
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < r; ++i) indices.push_back(i);
    for (std::size_t i = k + 1 - t; i <= k && t > 0; ++i) indices.push_back(i);

    std::vector<EndClass> classes;
    std::map<std::vector<VertexMask>, std::size_t> slot;
    for (const auto& chain : family.entries) {
        if (chain.vertices.size() != k + 1) throw precondition_error("family chain has wrong length");
        std::vector<VertexMask> key;
        for (auto i : indices) key.push_back(chain.vertices[i]);
        auto [it, fresh] = slot.try_emplace(key, classes.size());
        if (fresh) classes.push_back({family.split, indices, key, {}});
        classes[it->second].members.push_back(chain);
    }
    std::stable_sort(classes.begin(), classes.end(), [](const EndClass& a, const EndClass& b) {
        return a.members.size() > b.members.size();
    });
    return classes;
}

/// The poset induced by the union of all member-chain vertices (duplicates
/// merged), elements in ascending mask order.
struct VertexPoset {
    std::vector<VertexMask> vertices;
    Poset order;

    std::size_t index_of(VertexMask v) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) throw precondition_error("vertex not in the induced poset");
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

inline VertexPoset induced_vertex_poset(std::vector<VertexMask> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    auto order = Poset::from_predicate(vertices.size(), [&](std::size_t a, std::size_t b) {
        return pair_less(vertices[a], vertices[b]);
    });
    return {std::move(vertices), std::move(order)};
}

inline VertexPoset class_poset(const EndClass& cls) {
    std::vector<VertexMask> all;
    for (const auto& m : cls.members) all.insert(all.end(), m.vertices.begin(), m.vertices.end());
    return induced_vertex_poset(std::move(all));
}

struct SpindleCert {
    SpindleSpec spec;
    std::vector<VertexMask> lower;
    std::vector<VertexMask> antichain;
    std::vector<VertexMask> upper;

    std::vector<VertexMask> all() const {
        std::vector<VertexMask> v = lower;
        v.insert(v.end(), antichain.begin(), antichain.end());
        v.insert(v.end(), upper.begin(), upper.end());
        return v;
    }
    friend bool operator==(const SpindleCert&, const SpindleCert&) = default;
};

/// Blue, and the listed vertices realize S_{r,s,t} element by element (lower
/// chain, antichain, upper chain in constructor order).
inline CheckResult check_spindle(const SpindleCert& cert, const Coloring& coloring) {
    if (cert.spec.s == 0) return CheckResult::fail("spindle antichain size must be positive");
    if (cert.lower.size() != cert.spec.r || cert.antichain.size() != cert.spec.s ||
        cert.upper.size() != cert.spec.t) {
        return CheckResult::fail("part sizes do not match (r, s, t)");
    }
    const auto vertices = cert.all();
    for (auto v : vertices) {
        if (v >= coloring.vertex_count()) return CheckResult::fail("vertex outside the lattice");
        if (!coloring.is_blue(v)) return CheckResult::fail("vertex " + std::to_string(v) + " is not blue");
    }
    const auto shape = make_spindle(cert.spec);
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = 0; b < vertices.size(); ++b) {
            if (a != b && vertices[a] == vertices[b]) return CheckResult::fail("vertices not distinct");
            if (shape.less(a, b) != pair_less(vertices[a], vertices[b])) {
                return CheckResult::fail("relations do not form the spindle");
            }
        }
    }
    return {};
}

/// Chains over lattice vertices, each ascending.
struct MaskChainCover {
    std::vector<std::vector<VertexMask>> chains;

    std::size_t size() const noexcept { return chains.size(); }
    friend bool operator==(const MaskChainCover&, const MaskChainCover&) = default;
};

using SpindleOrCover = std::variant<SpindleCert, MaskChainCover>;

/// Either s pairwise incomparable vertices of the class poset, completed by
/// the class's end vertices to a blue spindle, or a Dilworth cover of the
/// class poset by at most s-1 chains.
inline SpindleOrCover assemble_spindle(const EndClass& cls, const SpindleSpec& spec, const GroundSplit& g) {
    spec.validate();
    if (cls.members.empty()) throw precondition_error("end class is empty");
    if (spec.r + spec.t > g.k) throw precondition_error("r + t must leave a middle vertex (r + t <= k)");
    if (cls.indices.size() != spec.r + spec.t) throw precondition_error("end class built for another (r, t)");
    for (const auto& m : cls.members) {
        if (m.vertices.size() != g.k + 1) throw precondition_error("member chain has wrong length");
    }
    const auto poset = class_poset(cls);

    // End vertices sit on every member chain, so they are comparable to all
    // of the class poset and never belong to an antichain of size >= 2.
    std::vector<std::size_t> middle;
    for (std::size_t e = 0; e < poset.vertices.size(); ++e) {
        if (std::find(cls.end_vertices.begin(), cls.end_vertices.end(), poset.vertices[e]) ==
            cls.end_vertices.end()) {
            middle.push_back(e);
        }
    }
    const auto middle_poset = poset.order.induced(middle);
    const auto antichain = max_antichain(middle_poset);
    if (antichain.size() >= spec.s) {
        SpindleCert cert{spec, {}, {}, {}};
        cert.lower.assign(cls.end_vertices.begin(), cls.end_vertices.begin() + spec.r);
        cert.upper.assign(cls.end_vertices.begin() + spec.r, cls.end_vertices.end());
        for (std::size_t a = 0; a < spec.s; ++a) cert.antichain.push_back(poset.vertices[middle[antichain[a]]]);
        return cert;
    }
    MaskChainCover cover;
    for (const auto& chain : dilworth_cover(poset.order).chains) {
        auto& out = cover.chains.emplace_back();
        for (auto e : chain) out.push_back(poset.vertices[e]);
    }
    return cover;
}

/// Evidence for the distinct-orderings contradiction. Each cover chain i
/// carries at most one Y-part of each size l (y_levels[i][l]); member j is
/// labelled by the cover chain holding its l-th vertex, for each l. With
/// more than |cover|^(k+1) members two labelings collide, and equal labels
/// force equal Y-parts at every level, hence equal orderings.
struct ContradictionReport {
    GroundSplit split;
    std::vector<BlueChainCert> members;
    MaskChainCover cover;
    std::vector<std::vector<std::optional<VertexMask>>> y_levels;
    std::vector<std::vector<std::size_t>> labels;
    std::size_t first = 0;
    std::size_t second = 0;
    bool orderings_equal = false;
};

namespace detail {

// (|cover|)^(k+1) < members, without overflow.
inline bool exceeds_label_count(std::size_t members, std::size_t chains, std::size_t levels) {
    std::size_t bound = 1;
    for (std::size_t l = 0; l < levels; ++l) {
        if (chains != 0 && bound > members / chains) return true;
        bound *= chains;
    }
    return members > bound;
}

inline std::vector<std::vector<std::optional<VertexMask>>> y_restrictions(const MaskChainCover& cover,
                                                                          const GroundSplit& g) {
    std::vector<std::vector<std::optional<VertexMask>>> levels(
        cover.size(), std::vector<std::optional<VertexMask>>(g.k + 1));
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (auto v : cover.chains[i]) {
            const auto y = split_parts(v, g).y_part;
            auto& slot = levels[i][static_cast<std::size_t>(std::popcount(y))];
            if (slot && *slot != y) {
                throw invariant_violation("cover chain holds two Y-parts of equal size");
            }
            slot = y;
        }
    }
    return levels;
}

inline OrderingPi ordering_from_prefixes(const BlueChainCert& chain) {
    OrderingPi pi;
    for (std::size_t l = 1; l < chain.vertices.size(); ++l) {
        const auto y_now = split_parts(chain.vertices[l], chain.split).y_part;
        const auto y_before = split_parts(chain.vertices[l - 1], chain.split).y_part;
        pi.perm.push_back(static_cast<unsigned>(std::countr_zero(y_now & ~y_before)));
    }
    return pi;
}

} // namespace detail

inline ContradictionReport distinctness_contradiction(const EndClass& cls, const MaskChainCover& cover,
                                                      const GroundSplit& g) {
    const std::size_t levels = g.k + 1;
    if (!detail::exceeds_label_count(cls.members.size(), cover.size(), levels)) {
        throw precondition_error("class needs more than |cover|^(k+1) members");
    }
    ContradictionReport report{g, cls.members, cover, detail::y_restrictions(cover, g), {}, 0, 0, false};

    std::map<VertexMask, std::size_t> chain_of;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (auto v : cover.chains[i]) chain_of[v] = i;
    }
    std::map<std::vector<std::size_t>, std::size_t> seen;
    bool collided = false;
    for (std::size_t j = 0; j < cls.members.size(); ++j) {
        const auto& chain = cls.members[j].vertices;
        if (chain.size() != levels) throw precondition_error("member chain has wrong length");
        std::vector<std::size_t> label;
        for (auto v : chain) {
            auto it = chain_of.find(v);
            if (it == chain_of.end()) throw precondition_error("cover misses a member vertex");
            label.push_back(it->second);
        }
        report.labels.push_back(label);
        if (collided) continue;
        auto [it, fresh] = seen.try_emplace(std::move(label), j);
        if (!fresh) {
            report.first = it->second;
            report.second = j;
            collided = true;
        }
    }
    if (!collided) throw invariant_violation("pigeonhole scan found no colliding labelings");
    report.orderings_equal = detail::ordering_from_prefixes(cls.members[report.first]) ==
                             detail::ordering_from_prefixes(cls.members[report.second]);
    return report;
}

/// Re-derives everything in the report from the coloring and the listed
/// chains: blue member chains, a genuine cover, the Y-level table, the
/// labels, the collision, and the equality of the two orderings.
inline CheckResult check_contradiction(const ContradictionReport& rep, const Coloring& coloring) {
    const auto& g = rep.split;
    const std::size_t levels = g.k + 1;
    if (g.dim() != coloring.dim()) return CheckResult::fail("split does not match coloring dimension");
    for (std::size_t j = 0; j < rep.members.size(); ++j) {
        if (!(rep.members[j].split == g)) return CheckResult::fail("member split mismatch");
        if (auto r = check_blue_chain(rep.members[j], coloring); !r) {
            return CheckResult::fail("member " + std::to_string(j) + ": " + r.reason);
        }
    }
    if (!detail::exceeds_label_count(rep.members.size(), rep.cover.size(), levels)) {
        return CheckResult::fail("too few members for the pigeonhole step");
    }
    std::map<VertexMask, std::size_t> chain_of;
    for (std::size_t i = 0; i < rep.cover.size(); ++i) {
        const auto& chain = rep.cover.chains[i];
        if (chain.empty()) return CheckResult::fail("empty cover chain");
        for (std::size_t a = 0; a < chain.size(); ++a) {
            if (a + 1 < chain.size() && !pair_less(chain[a], chain[a + 1])) {
                return CheckResult::fail("cover chain " + std::to_string(i) + " is not a chain");
            }
            if (!chain_of.emplace(chain[a], i).second) return CheckResult::fail("cover chains overlap");
        }
    }
    std::set<VertexMask> member_vertices;
    for (const auto& m : rep.members) member_vertices.insert(m.vertices.begin(), m.vertices.end());
    if (member_vertices.size() != chain_of.size()) {
        return CheckResult::fail("cover is not exactly the member vertices");
    }
    for (auto v : member_vertices) {
        if (!chain_of.count(v)) return CheckResult::fail("cover misses a member vertex");
    }
    if (rep.y_levels.size() != rep.cover.size()) return CheckResult::fail("Y-level table has wrong shape");
    for (std::size_t i = 0; i < rep.cover.size(); ++i) {
        if (rep.y_levels[i].size() != levels) return CheckResult::fail("Y-level table has wrong shape");
        std::vector<std::optional<VertexMask>> derived(levels);
        for (auto v : rep.cover.chains[i]) {
            const auto y = split_parts(v, g).y_part;
            auto& slot = derived[static_cast<std::size_t>(std::popcount(y))];
            if (slot && *slot != y) return CheckResult::fail("cover chain holds two Y-parts of equal size");
            slot = y;
        }
        if (derived != rep.y_levels[i]) return CheckResult::fail("Y-level table disagrees with the cover");
    }
    if (rep.labels.size() != rep.members.size()) return CheckResult::fail("label table has wrong shape");
    for (std::size_t j = 0; j < rep.members.size(); ++j) {
        if (rep.labels[j].size() != levels) return CheckResult::fail("label table has wrong shape");
        for (std::size_t l = 0; l < levels; ++l) {
            const auto v = rep.members[j].vertices[l];
            if (chain_of.at(v) != rep.labels[j][l]) return CheckResult::fail("label disagrees with the cover");
            if (rep.y_levels[rep.labels[j][l]][l] != split_parts(v, g).y_part) {
                return CheckResult::fail("member Y-part is not the chain's level-l Y-part");
            }
        }
    }
    if (rep.first >= rep.members.size() || rep.second >= rep.members.size() || rep.first == rep.second) {
        return CheckResult::fail("collision pair out of range");
    }
    if (rep.labels[rep.first] != rep.labels[rep.second]) return CheckResult::fail("collision labels differ");
    const bool equal = rep.members[rep.first].pi == rep.members[rep.second].pi;
    if (!equal || !rep.orderings_equal) return CheckResult::fail("colliding members have different orderings");
    return {};
}

/// Outcome of the whole spindle pipeline on one coloring.
struct PipelineInconclusive {
    std::size_t class_size = 0;
    MaskChainCover cover;
};
using PipelineOutcome = std::variant<RedQnCert, SpindleCert, ContradictionReport, PipelineInconclusive>;

/// Collects chains for `orderings`, groups them by end vertices and, class by
/// class from the largest, returns the first spindle or contradiction found.
/// Inconclusive means no class was large enough for the pigeonhole step.
inline PipelineOutcome spindle_pipeline(const Coloring& coloring, const GroundSplit& g,
                                        const SpindleSpec& spec, const std::vector<OrderingPi>& orderings,
                                        unsigned threads = 1) {
    auto family = collect_chain_family(coloring, g, orderings, threads);
    if (auto* red = std::get_if<RedQnCert>(&family)) return *red;
    const auto classes = pigeonhole_end_classes(std::get<ChainFamily>(family), spec.r, spec.t);
    std::optional<PipelineInconclusive> first_miss;
    for (const auto& cls : classes) {
        auto result = assemble_spindle(cls, spec, g);
        if (auto* spindle = std::get_if<SpindleCert>(&result)) return *spindle;
        const auto& cover = std::get<MaskChainCover>(result);
        if (detail::exceeds_label_count(cls.members.size(), cover.size(), g.k + 1)) {
            return distinctness_contradiction(cls, cover, g);
        }
        if (!first_miss) first_miss = PipelineInconclusive{cls.members.size(), cover};
    }
    if (!first_miss) throw precondition_error("no orderings given");
    return *first_miss;
}

struct VertexClear {
    bool blue = false;
    bool p1_clear = false;
    bool p2_clear = false;
    bool green = false;  // blue and p1-clear; everything else is yellow
};

/// For every blue vertex: p1-clear iff no blue copy of p1 has it as the
/// image of p1's maximum; p2-clear iff no blue copy of p2 has it as the image
/// of p2's minimum.
inline std::vector<VertexClear> classify_clear(const Coloring& coloring, const GroundSplit& g,
                                               const Poset& p1, const Poset& p2) {
    if (coloring.dim() != g.dim()) throw precondition_error("coloring dimension must be n+k");
    const auto top = p1.unique_maximum();
    if (!top) throw precondition_error("p1 needs a unique maximal element");
    const auto bottom = p2.unique_minimum();
    if (!bottom) throw precondition_error("p2 needs a unique minimal element");

    const auto blue = detail::VertexSet::of_color(coloring, Color::blue);
    detail::LatticeEmbedder top_search(p1, coloring.dim(), *top);
    detail::LatticeEmbedder bottom_search(p2, coloring.dim(), *bottom);
    std::vector<VertexClear> flags(coloring.vertex_count());
    for (VertexMask v = 0; v < coloring.vertex_count(); ++v) {
        if (!coloring.is_blue(v)) continue;
        auto& f = flags[v];
        f.blue = true;
        f.p1_clear = !top_search.find(blue, v).has_value();
        f.p2_clear = !bottom_search.find(blue, v).has_value();
        f.green = f.p1_clear;
    }
    return flags;
}

} // namespace poset_ramsey
