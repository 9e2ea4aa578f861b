#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <poset_ramsey/cli.hpp>
#include <poset_ramsey/poset_copy.hpp>

using namespace poset_ramsey;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result ramsey(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ramsey_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, ConstructMultipartite) {
    const auto r = ramsey({"construct", "--multipartite", "3,4,2", "--out", path("k342.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto p = parse_poset(slurp(path("k342.json")));
    EXPECT_EQ(p.size(), 9u);
    EXPECT_TRUE(are_isomorphic(p, make_complete_multipartite({{3, 4, 2}})));
}

TEST_F(CliTest, ConstructRoundTripEveryBuilder) {
    const std::vector<std::pair<std::vector<std::string>, Poset>> grid = {
        {{"--chain", "4"}, make_chain(4)},
        {{"--antichain", "3"}, make_antichain(3)},
        {{"--boolean", "3"}, make_boolean_poset(3)},
        {{"--multipartite", "1,2,1"}, make_complete_multipartite({{1, 2, 1}})},
        {{"--multipartite", "2,3"}, make_complete_multipartite({{2, 3}})},
        {{"--spindle", "2,3,1"}, make_spindle({2, 3, 1})},
        {{"--spindle", "0,2,0"}, make_spindle({0, 2, 0})},
        {{"--diamond", "3"}, make_diamond(3)},
        {{"--fork", "2"}, make_fork(2)},
    };
    for (const auto& [flags, expected] : grid) {
        std::vector<std::string> args = {"construct"};
        args.insert(args.end(), flags.begin(), flags.end());
        args.insert(args.end(), {"--out", path("p.json")});
        ASSERT_EQ(ramsey(args).code, 0);
        EXPECT_TRUE(are_isomorphic(parse_poset(slurp(path("p.json"))), expected)) << flags[0];
    }
}

TEST_F(CliTest, ConstructGlue) {
    ASSERT_EQ(ramsey({"construct", "--multipartite", "1,2,1", "--out", path("d.json")}).code, 0);
    const auto r = ramsey({"construct", "--glue", path("d.json"), path("d.json"), "--out", path("g.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(are_isomorphic(parse_poset(slurp(path("g.json"))), make_complete_multipartite({{1, 2, 1, 2, 1}})));
}

TEST_F(CliTest, ExactPrintsValueAndPersistsWitnesses) {
    ASSERT_EQ(ramsey({"construct", "--boolean", "1", "--out", path("q1.json")}).code, 0);
    const auto r = ramsey({"exact", "--poset", path("q1.json"), "--n", "2", "--nmax", "4", "--out-dir", path("w")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "3");
    for (int dim = 0; dim < 3; ++dim) {
        const auto file = path("w/witness_n2_N" + std::to_string(dim) + ".col");
        ASSERT_TRUE(fs::exists(file));
        EXPECT_NE(r.out.find(file), std::string::npos);
        const auto check = ramsey({"witness", "--boolean", "1", "--n", "2", "--check", file});
        EXPECT_EQ(check.code, 0) << check.out;
    }
}

TEST_F(CliTest, ExactInconclusiveExitsThree) {
    const auto r = ramsey({"exact", "--antichain", "3", "--n", "2", "--nmax", "5", "--max-nodes", "5",
                           "--out-dir", path("w")});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(fs::exists(path("w/witness_n2_N0.col")));
}

TEST_F(CliTest, GoldenJson) {
    const fs::path golden = POSET_RAMSEY_GOLDEN_DIR;
    {
        const auto r = ramsey({"exact", "--boolean", "1", "--n", "2", "--nmax", "4", "--out-dir", path("w"), "--json"});
        ASSERT_EQ(r.code, 0);
        auto doc = nlohmann::json::parse(r.out);
        doc["out_dir"] = "WITNESS_DIR";
        EXPECT_EQ(doc, nlohmann::json::parse(slurp(golden / "exact_q1_n2.json")));
    }
    {
        const auto r = ramsey({"bound", "--spindle", "1,2,1", "--n", "1024", "--json"});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(nlohmann::json::parse(r.out),
                  nlohmann::json::parse(slurp(golden / "bound_spindle_1_2_1_n1024.json")));
    }
    {
        const auto r = ramsey({"bounds", "--multipartite", "2,2", "--n", "4096", "--json"});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(nlohmann::json::parse(r.out),
                  nlohmann::json::parse(slurp(golden / "bound_multipartite_2_2_n4096.json")));
    }
}

TEST_F(CliTest, BoundSpindleLarge) {
    const auto r = ramsey({"bound", "--spindle", "1,2,1", "--n", "1048576", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const auto k = doc["k_star"].get<std::uint64_t>();
    EXPECT_EQ(doc["bound"].get<std::uint64_t>(), 1048576u + k);
    EXPECT_TRUE(claim_holds(1048576, k, 1, 1, 2));
    EXPECT_FALSE(claim_holds(1048576, k - 1, 1, 1, 2));
    const auto text = ramsey({"bound", "--spindle", "1,2,1", "--n", "1048576"});
    EXPECT_NE(text.out.find("realized"), std::string::npos);
    EXPECT_NE(text.out.find(std::to_string(1048576 + k)), std::string::npos);
}

TEST_F(CliTest, BoundWarnings) {
    const auto r = ramsey({"bound", "--multipartite", "1,100,1", "--n", "16"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(ramsey({"bound", "--multipartite", "1,2,1", "--n", "4096"}).err, "");
}

TEST_F(CliTest, ColoringExtractVerify) {
    EXPECT_EQ(ramsey({"coloring", "--n", "2", "--k", "2", "--random"}).code, 2);  // seed required
    ASSERT_EQ(ramsey({"coloring", "--n", "2", "--k", "2", "--random", "--seed", "3", "--out", path("c.col")}).code, 0);
    const auto again = ramsey({"coloring", "--n", "2", "--k", "2", "--random", "--seed", "3"});
    EXPECT_EQ(again.out, slurp(path("c.col")));

    ASSERT_EQ(ramsey({"extract", "chain", "--coloring", path("c.col"), "--n", "2", "--out", path("chain.json")}).code,
              0);
    EXPECT_EQ(ramsey({"verify-cert", "--coloring", path("c.col"), "--cert", path("chain.json")}).code, 0);

    // A flipped Y bit in the first chain vertex is rejected with exit 1.
    auto doc = nlohmann::json::parse(slurp(path("chain.json")));
    doc["vertices"][0] = doc["vertices"][0].get<unsigned>() ^ 0b0100u;
    std::ofstream(path("bad.json")) << doc.dump();
    const auto bad = ramsey({"verify-cert", "--coloring", path("c.col"), "--cert", path("bad.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("rejected"), std::string::npos);

    const auto sp = ramsey({"extract", "spindle", "--coloring", path("c.col"), "--n", "2", "--spindle", "1,2,1",
                            "--threads", "2", "--out", path("sp.json")});
    ASSERT_TRUE(sp.code == 0 || sp.code == 3) << sp.err;
    if (sp.code == 0) {
        EXPECT_EQ(ramsey({"verify-cert", "--coloring", path("c.col"), "--cert", path("sp.json")}).code, 0);
    }
}

TEST_F(CliTest, ExtractClear) {
    ASSERT_EQ(ramsey({"coloring", "--n", "3", "--k", "0", "--layered", "0,1,2,3", "--out", path("b.col")}).code, 0);
    ASSERT_EQ(ramsey({"construct", "--chain", "2", "--out", path("c2.json")}).code, 0);
    const auto r = ramsey({"extract", "clear", "--coloring", path("b.col"), "--n", "3", "--p1", path("c2.json"),
                           "--p2", path("c2.json"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["blue"], 8);
    EXPECT_EQ(doc["green"], 1);  // only the bottom tops no blue 2-chain
    EXPECT_EQ(doc["neither_clear"], 6);
}

TEST_F(CliTest, ExportDot) {
    const auto r = ramsey({"export-dot", "--multipartite", "1,2,1"});
    ASSERT_EQ(r.code, 0);
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = r.out.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
    EXPECT_EQ(edges, 4u);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(ramsey({}).code, 2);
    EXPECT_EQ(ramsey({"frobnicate"}).code, 2);
    EXPECT_EQ(ramsey({"exact", "--chain", "2", "--nmax", "3"}).code, 2);
    EXPECT_EQ(ramsey({"exact", "--chain", "2", "--antichain", "2", "--n", "1", "--nmax", "3"}).code, 2);
    EXPECT_EQ(ramsey({"construct", "--multipartite", "3,x"}).code, 2);
    EXPECT_EQ(ramsey({"bound", "--spindle", "1,2", "--n", "8"}).code, 2);
    EXPECT_EQ(ramsey({"export-dot", "--poset", path("missing.json")}).code, 2);
    std::ofstream(path("bad.col")) << "poset-ramsey-coloring v1 N=2\nzz\n";
    const auto r = ramsey({"verify-cert", "--coloring", path("bad.col"), "--cert", path("none.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(ramsey({"--help"}).code, 0);
}
