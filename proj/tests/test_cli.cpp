#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "thetadiv/cli.hpp"

using namespace thetadiv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "thetadiv");
    std::ostringstream out, err;
    const int code = cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weight parsing") {
    CHECK(cli::parse_weights("3,-1") == std::vector<std::int64_t>{3, -1});
    CHECK(cli::parse_weights("0") == std::vector<std::int64_t>{0});
    CHECK_THROWS_AS(cli::parse_weights(""), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_weights("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_weights("1,x"), std::invalid_argument);
}

TEST_CASE("class theta JSON") {
    const auto r = run({"class", "theta", "--g", "3", "--n", "2", "--d", "3,-1", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coeffs"]["lambda1"] == "-1");
    CHECK(j["coeffs"]["delta_irr"] == "1/8");
    CHECK(j["coeffs"]["K"] == nlohmann::json::array({"6", "0"}));
}

TEST_CASE("class mueller has no delta_irr contribution") {
    const auto r = run({"class", "mueller", "--g", "3", "--n", "2", "--d", "3,-1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coeffs"]["delta_irr"] == "0");
    CHECK(j["coeffs"]["boundary"][0]["c"] == "0");
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"dr", "--g", "3", "--n", "2", "--d", "1,-1", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> v{"verify", "theta", "--g", "3", "--n", "2", "--trials", "5", "--seed", "9"};
    CHECK(run(v).out == run(v).out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"class", "T", "--g", "3", "--n", "2", "--d", "1,1"}).code == cli::kExitUsage);
    CHECK(run({"class", "T", "--g", "3", "--n", "2", "--d", "1"}).code == cli::kExitUsage);
    CHECK(run({"class", "T", "--g", "3", "--n", "2"}).code == cli::kExitUsage);
    CHECK(run({"class", "nope", "--g", "3", "--n", "1", "--d", "0"}).code == cli::kExitUsage);
    CHECK(run({"basis", "--g", "3", "--n", "1", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"ledger", "--g", "3", "--n", "2", "--d", "2,0"}).code == cli::kExitUsage);
    CHECK(run({"dr", "--g", "5", "--n", "3", "--d", "1,1,-2"}).code == cli::kExitOk);
    CHECK(run({"matrix", "--g", "2", "--n", "1"}).code == cli::kExitUsage);
}

TEST_CASE("verify sweeps pass and report") {
    const auto r = run({"verify", "mueller", "--g", "3", "--n", "2", "--trials", "20", "--seed", "7"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("pass, 20/20") != std::string::npos);
    const auto j = run({"verify", "rank", "--g", "4", "--n", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["rank_report"]["det_nonzero"] == true);
    CHECK(run({"verify", "T", "--g", "3", "--n", "1", "--trials", "3"}).code == 0);
}

TEST_CASE("low genus warns but evaluates formulas") {
    const auto r = run({"class", "theta", "--g", "2", "--n", "1", "--d", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("strict plus convention is selectable") {
    const auto a = run({"ledger", "--g", "3", "--n", "3", "--d", "0,3,-1", "--format", "json"});
    const auto b = run({"ledger", "--g", "3", "--n", "3", "--d", "0,3,-1", "--format", "json", "--plus", "strict"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out)["plus"] == "strict");
    CHECK(a.out != b.out);
}

TEST_CASE("csv outputs") {
    const auto r = run({"curves", "--g", "3", "--n", "1", "--format", "csv"});
    CHECK(r.out == "index,curve\n0,Z1\n1,Z_1^{}\n2,Z_1^{1}\n3,E\n4,Zirr\n");
}
