#pragma once

// Induced-subposet ("copy") search between two explicit posets, and
// order-isomorphism on top of it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "poset.hpp"

namespace poset_ramsey {

/// images[e] is the host element that target element e maps to.
using PosetMap = std::vector<std::size_t>;

namespace detail {

class PosetCopySearch {
public:
    PosetCopySearch(const Poset& target, const Poset& host, bool exact_degrees)
        : target_(target), host_(host), exact_degrees_(exact_degrees),
          image_(target.size()), used_(host.size()) {
        for (std::size_t e = 0; e < target.size(); ++e) {
            t_up_.push_back(target.count_above(e));
            t_down_.push_back(target.count_below(e));
        }
        for (std::size_t h = 0; h < host.size(); ++h) {
            h_up_.push_back(host.count_above(h));
            h_down_.push_back(host.count_below(h));
        }
    }

    std::optional<PosetMap> run() {
        if (target_.size() > host_.size()) return std::nullopt;
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    bool fits(std::size_t e, std::size_t h) const {
        if (exact_degrees_) {
            if (t_up_[e] != h_up_[h] || t_down_[e] != h_down_[h]) return false;
        } else if (t_up_[e] > h_up_[h] || t_down_[e] > h_down_[h]) {
            return false;
        }
        for (std::size_t a = 0; a < e; ++a) {
            if (target_.less(a, e) != host_.less(image_[a], h)) return false;
            if (target_.less(e, a) != host_.less(h, image_[a])) return false;
        }
        return true;
    }

    bool extend(std::size_t e) {
        if (e == target_.size()) return true;
        for (std::size_t h = 0; h < host_.size(); ++h) {
            if (used_[h] || !fits(e, h)) continue;
            used_[h] = 1;
            image_[e] = h;
            if (extend(e + 1)) return true;
            used_[h] = 0;
        }
        return false;
    }

    const Poset& target_;
    const Poset& host_;
    bool exact_degrees_;
    std::vector<std::size_t> t_up_, t_down_, h_up_, h_down_;
    PosetMap image_;
    std::vector<char> used_;
};

} // namespace detail

/// First induced copy of `target` in `host`, trying target elements in index
/// order and host candidates in ascending index.
inline std::optional<PosetMap> find_poset_copy(const Poset& target, const Poset& host) {
    return detail::PosetCopySearch(target, host, false).run();
}

/// True iff `image` is injective and both preserves and reflects the order.
inline bool is_poset_copy(const Poset& target, const Poset& host, const PosetMap& image) {
    if (image.size() != target.size()) return false;
    for (std::size_t a = 0; a < image.size(); ++a) {
        if (image[a] >= host.size()) return false;
        for (std::size_t b = 0; b < image.size(); ++b) {
            if (a != b && image[a] == image[b]) return false;
            if (target.less(a, b) != host.less(image[a], image[b])) return false;
        }
    }
    return true;
}

inline bool are_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size() || a.relation_count() != b.relation_count()) return false;
    auto signature = [](const Poset& p) {
        std::vector<std::pair<std::size_t, std::size_t>> sig;
        const auto depth = p.depths();
        for (std::size_t e = 0; e < p.size(); ++e) {
            sig.emplace_back(p.count_below(e) * p.size() + depth[e], p.count_above(e));
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (signature(a) != signature(b)) return false;
    return detail::PosetCopySearch(a, b, true).run().has_value();
}

} // namespace poset_ramsey
