#pragma once

// The `ramsey` command line. run() parses arguments, dispatches to one
// subcommand and reports on the given streams.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or input error,
// 3 search budget exhausted (partial results are still written).

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "certificate_io.hpp"
#include "coloring_io.hpp"
#include "extract.hpp"
#include "poset.hpp"
#include "poset_io.hpp"
#include "search.hpp"

namespace poset_ramsey::cli {

enum ExitCode : int { success = 0, verification_failed = 1, usage = 2, inconclusive = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot write '" + path + "'");
    out << text;
}

// Parses a file; format errors are reported against its path.
template <class F>
auto load(const std::string& path, F&& parse) {
    const auto text = read_file(path);
    try {
        return parse(text);
    } catch (const format_error& e) {
        throw usage_error(path + ": " + e.what());
    }
}

inline std::vector<std::size_t> parse_counts(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
            throw usage_error(flag + " expects comma-separated counts, got '" + text + "'");
        }
        out.push_back(std::stoul(item));
    }
    if (out.empty()) throw usage_error(flag + " needs at least one value");
    return out;
}

inline SpindleSpec parse_spindle(const std::string& text) {
    const auto v = parse_counts(text, "--spindle");
    if (v.size() != 3) throw usage_error("--spindle expects r,s,t");
    return {v[0], v[1], v[2]};
}

inline Probability parse_probability(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw usage_error("--p expects num/den, got '" + text + "'");
    const auto num = parse_counts(text.substr(0, slash), "--p");
    const auto den = parse_counts(text.substr(slash + 1), "--p");
    Probability p{num.at(0), den.at(0)};
    if (num.size() != 1 || den.size() != 1 || p.den == 0 || p.num > p.den) {
        throw usage_error("--p must be a fraction in [0, 1]");
    }
    return p;
}

/// Exactly one way to name a poset: a JSON file or one builder flag.
struct PosetSource {
    std::string file, chain, antichain, boolean, multipartite, spindle, diamond, fork;

    void attach(CLI::App* app) {
        app->add_option("--poset", file, "poset JSON file");
        app->add_option("--chain", chain, "chain on L elements");
        app->add_option("--antichain", antichain, "antichain on T elements");
        app->add_option("--boolean", boolean, "Boolean lattice Q_d");
        app->add_option("--multipartite", multipartite, "complete multipartite poset, layer sizes a,b,...");
        app->add_option("--spindle", spindle, "spindle r,s,t");
        app->add_option("--diamond", diamond, "diamond with an s-antichain");
        app->add_option("--fork", fork, "fork with an s-antichain");
    }

    int given() const {
        int count = 0;
        for (const auto* s : {&file, &chain, &antichain, &boolean, &multipartite, &spindle, &diamond, &fork}) {
            count += !s->empty();
        }
        return count;
    }

    Poset build() const {
        if (given() != 1) throw usage_error("give exactly one poset source (--poset or one builder flag)");
        auto one = [](const std::string& text, const char* flag) {
            const auto v = parse_counts(text, flag);
            if (v.size() != 1) throw usage_error(std::string(flag) + " expects a single count");
            return v[0];
        };
        if (!file.empty()) return load(file, parse_poset);
        if (!chain.empty()) return make_chain(one(chain, "--chain"));
        if (!antichain.empty()) return make_antichain(one(antichain, "--antichain"));
        if (!boolean.empty()) return make_boolean_poset(static_cast<unsigned>(one(boolean, "--boolean")));
        if (!multipartite.empty()) return make_complete_multipartite({parse_counts(multipartite, "--multipartite")});
        if (!spindle.empty()) return make_spindle(parse_spindle(spindle));
        if (!diamond.empty()) return make_diamond(one(diamond, "--diamond"));
        return make_fork(one(fork, "--fork"));
    }
};

inline json interval_json(const Interval& i) { return json::array({i.lower(), i.upper()}); }

inline std::string interval_text(const Interval& i) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << "[" << i.lower() << ", " << i.upper() << "]";
    return s.str();
}

inline std::string pad(const std::string& key) { return key + std::string(key.size() < 14 ? 14 - key.size() : 1, ' '); }

// ---------------------------------------------------------------------------

struct ConstructCmd {
    PosetSource source;
    std::vector<std::string> glue;
    std::string out;

    void attach(CLI::App* app) {
        source.attach(app);
        app->add_option("--glue", glue, "glue two poset files: lower upper")->expected(2);
        app->add_option("--out", out, "write the poset JSON here instead of stdout");
    }

    int run(std::ostream& os) const {
        Poset p;
        if (!glue.empty()) {
            if (source.given() != 0) throw usage_error("--glue takes no other poset source");
            p = poset_ramsey::glue(load(glue[0], parse_poset), load(glue[1], parse_poset));
        } else {
            p = source.build();
        }
        const auto text = poset_to_json(p).dump() + "\n";
        if (out.empty()) {
            os << text;
        } else {
            write_file(out, text);
            os << "wrote " << out << " (" << p.size() << " elements)\n";
        }
        return success;
    }
};

struct BoundCmd {
    std::string spindle, multipartite, chain, antichain;
    dimension_t n = 0;
    bool as_json = false;

    void attach(CLI::App* app) {
        app->add_option("--spindle", spindle, "spindle r,s,t");
        app->add_option("--multipartite", multipartite, "complete multipartite poset a,b,...");
        app->add_option("--chain", chain, "chain length L");
        app->add_option("--antichain", antichain, "antichain size T");
        app->add_option("--n", n, "dimension n of Q_n")->required()->check(CLI::PositiveNumber);
        app->add_flag("--json", as_json, "machine-readable output");
    }

    int run(std::ostream& os, std::ostream& es) const {
        const int given = !spindle.empty() + !multipartite.empty() + !chain.empty() + !antichain.empty();
        if (given != 1) throw usage_error("give exactly one of --spindle, --multipartite, --chain, --antichain");
        json record;
        std::vector<std::pair<std::string, std::string>> rows;
        std::vector<std::string> warnings;
        rows.emplace_back("n", std::to_string(n));

        if (!spindle.empty()) {
            const auto spec = parse_spindle(spindle);
            const auto b = spindle_bound_detail(n, spec);
            record = {{"kind", "spindle"}, {"n", n},         {"r", spec.r},           {"s", spec.s},
                      {"t", spec.t},       {"k_star", b.k_star}, {"bound", b.bound}, {"chain_rule", b.chain_rule}};
            rows.emplace_back("poset", "S_{" + std::to_string(spec.r) + "," + std::to_string(spec.s) + "," +
                                           std::to_string(spec.t) + "}");
            rows.emplace_back("k*", std::to_string(b.k_star));
            rows.emplace_back("bound", std::to_string(b.bound));
            if (n >= 2) {
                const auto realized = Interval::of(b.k_star) * log2(Interval::of(n)) / Interval::of(n);
                record["realized_factor"] = interval_json(realized);
                rows.emplace_back("realized", interval_text(realized) + "  (k* log n / n)");
            }
            if (!b.chain_rule) {
                const auto sides = claim_sides(n, b.k_star, spec.r, spec.t, spec.s);
                record["claim_lhs"] = scientific(sides.lhs);
                record["claim_rhs"] = scientific(sides.rhs);
                rows.emplace_back("claim lhs", "k*! = " + scientific(sides.lhs));
                rows.emplace_back("claim rhs", scientific(sides.rhs));
                if (n >= 3 && std::log2(double(spec.s)) < std::log2(double(n))) {
                    const auto params = spindle_bound_params(n, spec);
                    record["formula_k"] = interval_json(params.k_formula);
                    rows.emplace_back("c n / log n", interval_text(params.k_formula));
                }
            }
        } else if (!multipartite.empty()) {
            const MultipartiteSpec spec{parse_counts(multipartite, "--multipartite")};
            const auto b = theorem1_bound_detail(n, spec);
            json steps = json::array();
            for (const auto& st : b.steps) {
                steps.push_back({{"from", st.from}, {"to", st.to}, {"k_star", st.k_star},
                                 {"realized_factor", interval_json(st.realized_factor)}});
            }
            record = {{"kind", "multipartite"}, {"n", n}, {"layers", spec.layer_sizes}, {"widest", b.widest},
                      {"bound", b.bound}, {"steps", steps}};
            rows.emplace_back("layers", multipartite);
            for (std::size_t j = 0; j < b.steps.size(); ++j) {
                rows.emplace_back("step " + std::to_string(j + 1),
                                  std::to_string(b.steps[j].from) + " -> " + std::to_string(b.steps[j].to) +
                                      "  k*=" + std::to_string(b.steps[j].k_star) +
                                      "  realized=" + interval_text(b.steps[j].realized_factor));
            }
            rows.emplace_back("bound", std::to_string(b.bound));
            if (n >= 2) {
                record["closed_form"] = interval_json(b.closed_form());
                record["within_closed_form"] = b.closed_form().certainly_at_least(mpz_class(std::to_string(b.bound)));
                rows.emplace_back("closed form", interval_text(b.closed_form()) + "  n(1+(2+eps)/log n)^l");
            }
            record["within_rational_form"] = b.within_rational_form();
            const double log_n = std::log2(double(n));
            if (n >= 2 && std::log2(double(b.widest)) / log_n > 0.5) {
                warnings.push_back("log t / log n > 1/2: the asymptotic hypothesis on t is far from met");
            }
            if (double(spec.layers()) > log_n) {
                warnings.push_back("more layers than log n: the asymptotic hypothesis on l is far from met");
            }
        } else if (!chain.empty()) {
            const auto ell = parse_counts(chain, "--chain").at(0);
            const auto value = chain_bound(ell, n);
            record = {{"kind", "chain"}, {"n", n}, {"length", ell}, {"value", value}};
            rows.emplace_back("poset", "chain of " + std::to_string(ell));
            rows.emplace_back("value", std::to_string(value) + "  (exact)");
        } else {
            const auto t = parse_counts(antichain, "--antichain").at(0);
            const auto alpha = antichain_alpha(t);
            record = {{"kind", "antichain"}, {"n", n}, {"size", t}, {"alpha", alpha},
                      {"lower", n}, {"upper", n + alpha}};
            rows.emplace_back("poset", "antichain of " + std::to_string(t));
            rows.emplace_back("alpha", std::to_string(alpha));
            rows.emplace_back("range", "[" + std::to_string(n) + ", " + std::to_string(n + alpha) + "]");
        }
        for (const auto& w : warnings) es << "warning: " << w << "\n";
        if (as_json) {
            record["warnings"] = warnings;
            os << record.dump(2) << "\n";
        } else {
            for (const auto& [k, v] : rows) os << pad(k) << v << "\n";
        }
        return success;
    }
};

struct SearchFlags {
    std::string symmetry = "on";
    std::uint64_t max_nodes = SearchOptions{}.max_nodes;
    unsigned max_dim = default_max_coloring_dimension;

    void attach(CLI::App* app) {
        app->add_option("--symmetry", symmetry, "on|off")->check(CLI::IsMember({"on", "off"}));
        app->add_option("--max-nodes", max_nodes, "search node budget")->check(CLI::PositiveNumber);
        app->add_option("--max-dim", max_dim, "largest lattice dimension to color");
    }
    SearchOptions options() const { return {symmetry == "on", max_nodes, max_dim}; }
};

struct ExactCmd {
    PosetSource source;
    SearchFlags flags;
    unsigned n = 0;
    unsigned nmax = 0;
    std::string out_dir = ".";
    bool as_json = false;

    void attach(CLI::App* app) {
        source.attach(app);
        flags.attach(app);
        app->add_option("--n", n, "dimension n of Q_n")->required();
        app->add_option("--nmax", nmax, "largest N to try")->required();
        app->add_option("--out-dir", out_dir, "directory for witness colorings");
        app->add_flag("--json", as_json, "machine-readable output");
    }

    int run(std::ostream& os) const {
        const auto p = source.build();
        if (nmax > flags.max_dim) throw usage_error("--nmax exceeds --max-dim");
        const auto result = ramsey_exact(p, n, nmax, flags.options());
        std::filesystem::create_directories(out_dir);
        json files = json::array();
        std::vector<std::string> paths;
        for (std::size_t dim = 0; dim < result.witnesses.size(); ++dim) {
            const auto name = "witness_n" + std::to_string(n) + "_N" + std::to_string(dim) + ".col";
            const auto path = (std::filesystem::path(out_dir) / name).string();
            write_file(path, write_coloring(result.witnesses[dim]));
            files.push_back({{"N", dim}, {"file", name}});
            paths.push_back(path);
        }
        const char* status = result.status == RamseyStatus::exact              ? "exact"
                             : result.status == RamseyStatus::lower_bound_only ? "lower_bound"
                                                                               : "inconclusive";
        if (as_json) {
            json record = {{"status", status}, {"n", n},           {"nmax", nmax},
                           {"value", result.value}, {"nodes", result.nodes}, {"symmetry", flags.symmetry == "on"},
                           {"poset", poset_to_json(p)}, {"out_dir", out_dir}, {"witnesses", files}};
            os << record.dump(2) << "\n";
        } else {
            switch (result.status) {
            case RamseyStatus::exact: os << result.value << "\n"; break;
            case RamseyStatus::lower_bound_only: os << "> " << nmax << "  (lower bound " << result.value << ")\n"; break;
            case RamseyStatus::inconclusive:
                os << ">= " << result.value << "  (budget exhausted at N=" << result.value << ")\n";
                break;
            }
            for (std::size_t i = 0; i < paths.size(); ++i) os << "witness N=" << i << ": " << paths[i] << "\n";
        }
        return result.status == RamseyStatus::inconclusive ? inconclusive : success;
    }
};

struct WitnessCmd {
    PosetSource source;
    SearchFlags flags;
    unsigned n = 0;
    unsigned dim = 0;
    std::string out, check;

    void attach(CLI::App* app) {
        source.attach(app);
        flags.attach(app);
        app->add_option("--n", n, "dimension n of Q_n")->required();
        app->add_option("--N", dim, "lattice dimension to color");
        app->add_option("--out", out, "write a found witness here");
        app->add_option("--check", check, "verify this coloring file instead of searching");
    }

    int run(std::ostream& os) const {
        const auto p = source.build();
        if (!check.empty()) {
            const auto c = load(check, [&](const std::string& t) { return read_coloring(t, flags.max_dim); });
            const auto verdict = verify_witness(c, p, n);
            if (verdict.ok) {
                os << "witness: no blue P, no red Q_" << n << " in Q_" << c.dim() << "\n";
                return success;
            }
            os << "not a witness: " << to_string(verdict.color) << " copy at";
            for (auto v : verdict.violation->images) os << ' ' << v;
            os << "\n";
            return verification_failed;
        }
        const auto search = find_witness(p, n, dim, flags.options());
        switch (search.status) {
        case SearchStatus::found:
            if (out.empty()) {
                os << write_coloring(*search.witness);
            } else {
                write_file(out, write_coloring(*search.witness));
                os << "found; wrote " << out << "\n";
            }
            return success;
        case SearchStatus::none:
            os << "none: every coloring of Q_" << dim << " has a blue P or a red Q_" << n << "\n";
            return success;
        case SearchStatus::inconclusive: break;
        }
        os << "inconclusive after " << search.nodes << " nodes\n";
        return inconclusive;
    }
};

struct ColoringCmd {
    unsigned n = 0, k = 0;
    std::optional<std::uint64_t> seed;
    bool random = false;
    std::string p = "1/2", layered, out;

    void attach(CLI::App* app) {
        app->add_option("--n", n, "size of X");
        app->add_option("--k", k, "size of Y");
        app->add_flag("--random", random, "independent random colors");
        app->add_option("--seed", seed, "seed (required with --random)");
        app->add_option("--p", p, "probability of blue, num/den");
        app->add_option("--layered", layered, "blue layers l1,l2,...");
        app->add_option("--out", out, "output file (default stdout)");
    }

    int run(std::ostream& os) const {
        if (random == !layered.empty()) throw usage_error("give exactly one of --random, --layered");
        const GroundSplit g(n, k);
        if (g.dim() > default_max_coloring_dimension) throw budget_exceeded("dimension above the coloring cap");
        Coloring c;
        if (random) {
            if (!seed) throw usage_error("--random needs an explicit --seed");
            c = random_coloring(g, *seed, parse_probability(p));
        } else {
            std::vector<unsigned> layers;
            for (auto l : parse_counts(layered, "--layered")) layers.push_back(static_cast<unsigned>(l));
            c = layered_coloring(g, layers);
        }
        if (out.empty()) {
            os << write_coloring(c);
        } else {
            write_file(out, write_coloring(c));
        }
        return success;
    }
};

struct ExtractCmd {
    std::string coloring_file, out, pi, spindle, p1, p2;
    unsigned n = 0;
    unsigned threads = 1;
    bool as_json = false;

    CLI::App* chain_app = nullptr;
    CLI::App* spindle_app = nullptr;
    CLI::App* clear_app = nullptr;

    void attach(CLI::App* app) {
        app->require_subcommand(1);
        chain_app = app->add_subcommand("chain", "blue Y-chain for one ordering, or a red Q_n");
        spindle_app = app->add_subcommand("spindle", "blue spindle, contradiction, or a red Q_n");
        clear_app = app->add_subcommand("clear", "clear-vertex classification for a glued pair");
        for (auto* sub : {chain_app, spindle_app, clear_app}) {
            sub->add_option("--coloring", coloring_file, "coloring file")->required();
            sub->add_option("--n", n, "size of X (Y is the rest)")->required();
        }
        for (auto* sub : {chain_app, spindle_app}) sub->add_option("--out", out, "certificate file");
        chain_app->add_option("--pi", pi, "ordering of Y's bit positions, e.g. 3,2");
        spindle_app->add_option("--spindle", spindle, "spindle r,s,t")->required();
        spindle_app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        clear_app->add_option("--p1", p1, "lower poset file (unique maximum)")->required();
        clear_app->add_option("--p2", p2, "upper poset file (unique minimum)")->required();
        clear_app->add_flag("--json", as_json, "machine-readable output");
    }

    int emit(const Certificate& cert, std::ostream& os) const {
        const auto text = certificate_to_json(cert).dump() + "\n";
        if (out.empty()) {
            os << text;
        } else {
            write_file(out, text);
            os << certificate_kind(cert) << " certificate written to " << out << "\n";
        }
        return success;
    }

    int run(std::ostream& os) const {
        const auto c = load(coloring_file, [](const std::string& t) { return read_coloring(t); });
        if (n > c.dim()) throw usage_error("--n exceeds the coloring dimension");
        const GroundSplit g(n, c.dim() - n);

        if (chain_app->parsed()) {
            OrderingPi ordering = OrderingPi::identity(g);
            if (!pi.empty()) {
                ordering.perm.clear();
                for (auto b : parse_counts(pi, "--pi")) ordering.perm.push_back(static_cast<unsigned>(b));
            }
            const auto result = chain_or_red(c, g, ordering);
            return std::visit([&](const auto& cert) { return emit(cert, os); }, result);
        }
        if (spindle_app->parsed()) {
            const auto outcome = spindle_pipeline(c, g, parse_spindle(spindle), all_orderings(g), threads);
            if (const auto* miss = std::get_if<PipelineInconclusive>(&outcome)) {
                os << "inconclusive: largest end class has " << miss->class_size << " chains, cover has "
                   << miss->cover.size() << " chains; too few for the pigeonhole step\n";
                return inconclusive;
            }
            return std::visit(
                [&](const auto& cert) -> int {
                    if constexpr (std::is_same_v<std::decay_t<decltype(cert)>, PipelineInconclusive>) {
                        return inconclusive;
                    } else {
                        return emit(cert, os);
                    }
                },
                outcome);
        }
        const auto lower = load(p1, parse_poset), upper = load(p2, parse_poset);
        const auto flags = classify_clear(c, g, lower, upper);
        json rows = json::array();
        std::size_t blue = 0, green = 0, neither = 0;
        for (VertexMask v = 0; v < flags.size(); ++v) {
            const auto& f = flags[v];
            if (!f.blue) continue;
            ++blue;
            green += f.green;
            neither += !f.p1_clear && !f.p2_clear;
            if (as_json) {
                rows.push_back({{"vertex", v}, {"p1_clear", f.p1_clear}, {"p2_clear", f.p2_clear},
                                {"color", f.green ? "green" : "yellow"}});
            } else {
                os << "vertex " << v << (f.p1_clear ? " p1-clear" : "") << (f.p2_clear ? " p2-clear" : "")
                   << (f.green ? " green" : " yellow") << "\n";
            }
        }
        if (as_json) {
            os << json{{"blue", blue}, {"green", green}, {"neither_clear", neither}, {"vertices", rows}}.dump(2)
               << "\n";
        } else {
            os << blue << " blue, " << green << " green, " << neither << " neither clear\n";
        }
        return success;
    }
};

struct VerifyCertCmd {
    std::string coloring_file, cert_file;

    void attach(CLI::App* app) {
        app->add_option("--coloring", coloring_file, "coloring file")->required();
        app->add_option("--cert", cert_file, "certificate JSON")->required();
    }

    int run(std::ostream& os) const {
        const auto c = load(coloring_file, [](const std::string& t) { return read_coloring(t); });
        const auto cert = load(cert_file, parse_certificate);
        const auto verdict = check_certificate(cert, c);
        if (verdict.ok) {
            os << "ok: " << certificate_kind(cert) << "\n";
            return success;
        }
        os << "rejected: " << verdict.reason << "\n";
        return verification_failed;
    }
};

struct ExportDotCmd {
    PosetSource source;
    std::string out;

    void attach(CLI::App* app) {
        source.attach(app);
        app->add_option("--out", out, "output file (default stdout)");
    }

    int run(std::ostream& os) const {
        const auto dot = export_dot(source.build());
        if (out.empty()) {
            os << dot;
        } else {
            write_file(out, dot);
        }
        return success;
    }
};

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poset Ramsey numbers R(P, Q_n): exact values, bounds and certificates", "ramsey"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    detail::ConstructCmd construct;
    detail::BoundCmd bound;
    detail::ExactCmd exact;
    detail::WitnessCmd witness;
    detail::ColoringCmd coloring;
    detail::ExtractCmd extract;
    detail::VerifyCertCmd verify;
    detail::ExportDotCmd dot;

    auto* construct_app = app.add_subcommand("construct", "build a poset and write it as JSON");
    auto* bound_app = app.add_subcommand("bound", "certified upper bounds")->alias("bounds");
    auto* exact_app = app.add_subcommand("exact", "exact R(P, Q_n) by complete search");
    auto* witness_app = app.add_subcommand("witness", "search for or check a witness coloring");
    auto* coloring_app = app.add_subcommand("coloring", "generate a coloring file");
    auto* extract_app = app.add_subcommand("extract", "structural certificates from a coloring");
    auto* verify_app = app.add_subcommand("verify-cert", "check a certificate against a coloring");
    auto* dot_app = app.add_subcommand("export-dot", "Hasse diagram in Graphviz DOT");
    construct.attach(construct_app);
    bound.attach(bound_app);
    exact.attach(exact_app);
    witness.attach(witness_app);
    coloring.attach(coloring_app);
    extract.attach(extract_app);
    verify.attach(verify_app);
    dot.attach(dot_app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands()) err << sub->help();
        return usage;
    }

    try {
        if (construct_app->parsed()) return construct.run(out);
        if (bound_app->parsed()) return bound.run(out, err);
        if (exact_app->parsed()) return exact.run(out);
        if (witness_app->parsed()) return witness.run(out);
        if (coloring_app->parsed()) return coloring.run(out);
        if (extract_app->parsed()) return extract.run(out);
        if (verify_app->parsed()) return verify.run(out);
        return dot.run(out);
    } catch (const format_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return inconclusive;
    } catch (const invariant_violation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return verification_failed;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace poset_ramsey::cli
