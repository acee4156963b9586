// Runs from the source root so that data/ paths in the commands resolve.
// Set TTM_UPDATE_GOLDEN=1 to rewrite the expected JSON files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hh"

#include <ttm/graph_io.hh>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using nlohmann::json;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = ttm::run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto check_golden(const std::string & name, const std::vector<std::string> & args, int expected_code) -> void
    {
        INFO(name);
        auto r = run(args);
        CHECK(r.code == expected_code);
        auto doc = json::parse(r.out);
        CHECK(doc.at("seconds").is_number());
        doc.erase("seconds");
        auto path = "tests/golden/" + name + ".json";
        if (std::getenv("TTM_UPDATE_GOLDEN")) {
            ttm::write_text_file(path, doc.dump(2) + "\n");
            return;
        }
        REQUIRE(std::filesystem::exists(path));
        auto expected = json::parse(ttm::read_text_file(path));
        CHECK(doc == expected);
    }
}

TEST_CASE("golden JSON output")
{
    check_golden("check_tt", {"--json", "check-tt", "--g", "data/graphs/k_4.txt", "--h", "data/graphs/k_3.txt", "--map",
        "data/maps/k4_k3_factorization.map", "--group", "Z_2"}, 0);
    check_golden("check_cut_tt", {"--json", "check-cut-tt", "--g", "k_4", "--h", "k_3", "--map",
        "data/maps/k4_k3_factorization.map"}, 0);
    check_golden("divisor_set", {"--json", "divisor-set", "--g", "data/graphs/dc_9.txt", "--h", "data/graphs/dk_2.txt",
        "--map", "data/maps/dc9_dk2_constant.map"}, 0);
    check_golden("gm", {"--json", "gm", "--g", "data/graphs/petersen.g6", "--group", "Z_2"}, 0);
    check_golden("find_tt", {"--json", "find-tt", "--g", "k_4", "--h", "k_3"}, 0);
    check_golden("find_tt_none", {"--json", "find-tt", "--g", "dc_9", "--h", "dc_7", "--group", "Z_6", "--method", "direct"}, 0);
    check_golden("find_tt_budget", {"--json", "--budget-nodes", "10", "find-tt", "--g", "k_6", "--h", "k_5"}, 2);
    check_golden("compare", {"--json", "compare", "--g", "petersen", "--h", "c_5"}, 0);
    check_golden("find_hom", {"--json", "find-hom", "--g", "c_5", "--h", "k_3"}, 0);
    check_golden("chi", {"--json", "chi", "--g", "grotzsch"}, 0);
    check_golden("chi_tt", {"--json", "chi-tt", "--g", "petersen"}, 0);
    check_golden("nice", {"--json", "nice", "--g", "k_4"}, 0);
    check_golden("rigid", {"--json", "rigid", "--g", "k_4"}, 0);
    check_golden("delta", {"--json", "delta", "--h", "k_3"}, 0);
    check_golden("cone", {"--json", "cone", "--a", "9", "--b", "7", "--n", "6"}, 0);
    check_golden("tt_set_circuits", {"--json", "tt-set-circuits", "--a", "9", "--b", "7", "--nmax", "12"}, 0);
    check_golden("tt_set_generators", {"--json", "tt-set-circuits", "--generators", "2,3", "--nmax", "12"}, 0);
    check_golden("construct_circuits", {"--json", "construct", "circuits", "--lengths", "3,5"}, 0);
    check_golden("experiment", {"--json", "--seed", "3", "experiment", "--n", "4", "--p", "1", "--trials", "2"}, 0);
    check_golden("functor_f", {"--json", "functor-f", "--g", "k_2", "--base", "data/rigid_base.txt"}, 0);
}

TEST_CASE("plain output")
{
    auto r = run({"gm", "--g", "petersen", "--group", "Z_2"});
    CHECK(r.code == 0);
    CHECK(r.out == "result: 5\nproof: exhaustive\n");
}

TEST_CASE("a found witness round-trips and re-verifies")
{
    auto dir = std::filesystem::temp_directory_path() / "ttm_cli_test";
    std::filesystem::create_directories(dir);
    for (auto [g, h, group] : {std::tuple{"k_4", "k_3", "Z_2"}, {"dc_9", "dc_7", "Z_3"}, {"petersen", "c_5", "Z_2"}}) {
        auto map = (dir / (std::string(g) + ".map")).string();
        auto found = run({"find-tt", "--g", g, "--h", h, "--group", group, "--out", map});
        REQUIRE(found.code == 0);
        auto check = run({"--json", "check-tt", "--g", g, "--h", h, "--map", map, "--group", group});
        CHECK(check.code == 0);
        CHECK(json::parse(check.out).at("result") == true);
    }
    auto graph = (dir / "sub.txt").string();
    REQUIRE(run({"construct", "subdivide", "--h", "dc_7", "--p", "3", "--out", graph}).code == 0);
    auto chi = run({"--json", "chi", "--g", graph});
    CHECK(chi.code == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit with 1")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"gm", "--g", "no_such_graph"}).code == 1);
    CHECK(run({"gm", "--g", "petersen", "--group", "Q_7"}).code == 1);
    CHECK(run({"find-tt", "--g", "k_4"}).code == 1);
    CHECK(run({"find-tt", "--g", "k_4", "--h", "k_3", "--group", "Z_3"}).code == 1);  // undirected over Z_3
    CHECK(run({"find-tt", "--g", "k_4", "--h", "k_3", "--method", "guess"}).code == 1);
    CHECK(run({"tt-set-circuits", "--a", "9"}).code == 1);
    CHECK(run({"tt-set-circuits", "--a", "9", "--b", "7", "--generators", "2"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
