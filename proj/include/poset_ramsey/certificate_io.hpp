#pragma once

// Certificate JSON. Every document carries a "kind" tag: "blue_chain",
// "red_qn", "spindle" or "contradiction". Masks are plain integers.

#include <string>
#include <variant>

#include <json.hpp>

#include "errors.hpp"
#include "extract.hpp"

namespace poset_ramsey {

using Certificate = std::variant<BlueChainCert, RedQnCert, SpindleCert, ContradictionReport>;

namespace detail {

inline nlohmann::json chain_json(const BlueChainCert& c) {
    return {{"pi", c.pi.perm}, {"vertices", c.vertices}};
}

template <class T>
T field(const nlohmann::json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name)) {
        throw format_error(std::string("missing field \"") + name + "\"", name);
    }
    try {
        return doc.at(name).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad field \"") + name + "\": " + e.what(), name);
    }
}

inline GroundSplit split_field(const nlohmann::json& doc) {
    const auto n = field<unsigned>(doc, "n");
    const auto k = field<unsigned>(doc, "k");
    if (n + k > max_mask_bits) throw format_error("n + k too large", "n,k");
    return {n, k};
}

inline BlueChainCert chain_from(const nlohmann::json& doc, const GroundSplit& g) {
    return {g, OrderingPi{field<std::vector<unsigned>>(doc, "pi")}, field<std::vector<VertexMask>>(doc, "vertices")};
}

} // namespace detail

inline nlohmann::json certificate_to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> nlohmann::json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BlueChainCert>) {
                auto j = detail::chain_json(c);
                j["kind"] = "blue_chain";
                j["n"] = c.split.n;
                j["k"] = c.split.k;
                return j;
            } else if constexpr (std::is_same_v<T, RedQnCert>) {
                return {{"kind", "red_qn"}, {"n", c.n}, {"images", c.embedding.images}};
            } else if constexpr (std::is_same_v<T, SpindleCert>) {
                return {{"kind", "spindle"}, {"r", c.spec.r}, {"s", c.spec.s}, {"t", c.spec.t},
                        {"lower", c.lower}, {"antichain", c.antichain}, {"upper", c.upper}};
            } else {
                nlohmann::json members = nlohmann::json::array();
                for (const auto& m : c.members) members.push_back(detail::chain_json(m));
                nlohmann::json levels = nlohmann::json::array();
                for (const auto& row : c.y_levels) {
                    auto& out = levels.emplace_back(nlohmann::json::array());
                    for (const auto& y : row) out.push_back(y ? nlohmann::json(*y) : nlohmann::json(nullptr));
                }
                return {{"kind", "contradiction"}, {"n", c.split.n}, {"k", c.split.k},
                        {"members", members}, {"cover", c.cover.chains}, {"y_levels", levels},
                        {"labels", c.labels}, {"first", c.first}, {"second", c.second},
                        {"orderings_equal", c.orderings_equal}};
            }
        },
        cert);
}

inline Certificate certificate_from_json(const nlohmann::json& doc) {
    const auto kind = detail::field<std::string>(doc, "kind");
    if (kind == "blue_chain") return detail::chain_from(doc, detail::split_field(doc));
    if (kind == "red_qn") {
        return RedQnCert{detail::field<unsigned>(doc, "n"), {detail::field<std::vector<VertexMask>>(doc, "images")}};
    }
    if (kind == "spindle") {
        SpindleCert c;
        c.spec = {detail::field<std::size_t>(doc, "r"), detail::field<std::size_t>(doc, "s"),
                  detail::field<std::size_t>(doc, "t")};
        c.lower = detail::field<std::vector<VertexMask>>(doc, "lower");
        c.antichain = detail::field<std::vector<VertexMask>>(doc, "antichain");
        c.upper = detail::field<std::vector<VertexMask>>(doc, "upper");
        return c;
    }
    if (kind == "contradiction") {
        ContradictionReport rep;
        rep.split = detail::split_field(doc);
        const auto members = detail::field<nlohmann::json>(doc, "members");
        if (!members.is_array()) throw format_error("\"members\" must be an array", "members");
        for (const auto& m : members) rep.members.push_back(detail::chain_from(m, rep.split));
        rep.cover.chains = detail::field<std::vector<std::vector<VertexMask>>>(doc, "cover");
        const auto levels = detail::field<nlohmann::json>(doc, "y_levels");
        if (!levels.is_array()) throw format_error("\"y_levels\" must be an array", "y_levels");
        for (const auto& row : levels) {
            if (!row.is_array()) throw format_error("\"y_levels\" rows must be arrays", "y_levels");
            auto& out = rep.y_levels.emplace_back();
            for (const auto& y : row) {
                if (y.is_null()) {
                    out.emplace_back();
                } else if (y.is_number_unsigned()) {
                    out.emplace_back(y.get<VertexMask>());
                } else {
                    throw format_error("\"y_levels\" entries must be masks or null", "y_levels");
                }
            }
        }
        rep.labels = detail::field<std::vector<std::vector<std::size_t>>>(doc, "labels");
        rep.first = detail::field<std::size_t>(doc, "first");
        rep.second = detail::field<std::size_t>(doc, "second");
        rep.orderings_equal = detail::field<bool>(doc, "orderings_equal");
        return rep;
    }
    throw format_error("unknown certificate kind '" + kind + "'", "kind");
}

inline Certificate parse_certificate(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error("invalid JSON: " + std::string(e.what()), "byte " + std::to_string(e.byte));
    }
    return certificate_from_json(doc);
}

inline CheckResult check_certificate(const Certificate& cert, const Coloring& coloring) {
    return std::visit(
        [&](const auto& c) -> CheckResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BlueChainCert>) {
                return check_blue_chain(c, coloring);
            } else if constexpr (std::is_same_v<T, RedQnCert>) {
                return check_red_qn(c, coloring);
            } else if constexpr (std::is_same_v<T, SpindleCert>) {
                return check_spindle(c, coloring);
            } else {
                return check_contradiction(c, coloring);
            }
        },
        cert);
}

inline std::string certificate_kind(const Certificate& cert) {
    static constexpr const char* names[] = {"blue_chain", "red_qn", "spindle", "contradiction"};
    return names[cert.index()];
}

} // namespace poset_ramsey
