#include "skein/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>

using namespace skein;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("qdim subcommand") {
    const CliRun r = run({"qdim", "-p", "1", "-N", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "qdim = s^3 + s + s^-1 + s^-3\ndim = 4\n");

    const CliRun zero = run({"qdim", "-p", "1,1,1", "-N", "2"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "qdim = 0\ndim = 0\n");

    const CliRun big = run({"qdim", "-p", "4,2,1", "-N", "3"});
    CHECK(big.code == 0);
    CHECK(big.out.find("dim = 15") != std::string::npos);

    CHECK(run({"qdim", "-p", "2,3", "-N", "2"}).code == 1);
    CHECK(run({"qdim", "-p", "2", "-N", "0"}).code == 1);
    CHECK(run({"qdim", "-p", "2"}).code == 1);

    // the empty string is the empty diagram
    const CliRun empty = run({"qdim", "-p", "", "-N", "3"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "qdim = 1\ndim = 1\n");
}

TEST_CASE("qdim json output") {
    const CliRun r = run({"qdim", "-p", "4,2,1", "-N", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["partition"] == nlohmann::json::array({4, 2, 1}));
    CHECK(j["N"] == 3);
    CHECK(j["dim"] == 15);
    CHECK(j["qdim"].is_string());
}

TEST_CASE("alpha subcommand") {
    const CliRun r = run({"alpha", "-p", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "alpha = s^2 + 1\nfactored = s * [2]\n");

    const CliRun one = run({"alpha", "-p", "1"});
    CHECK(one.code == 0);
    CHECK(one.out == "alpha = 1\nfactored = 1\n");

    const CliRun nu = run({"alpha", "-p", "4,2,1"});
    CHECK(nu.code == 0);
    CHECK(nu.out.find("factored = s^3 * [6][4][3][2]\n") != std::string::npos);

    CHECK(run({"alpha", "-p", "1,2"}).code == 1);
}

TEST_CASE("homfly subcommand") {
    const CliRun unknot = run({"homfly", "-n", "1", "-w", ""});
    CHECK(unknot.code == 0);
    CHECK(unknot.out == "X = (-v + v^-1) / (s - s^-1)\n");

    const CliRun trefoil = run({"homfly", "-n", "2", "-w", "1 1 1", "--normalized"});
    CHECK(trefoil.code == 0);
    CHECK(trefoil.out.find("P = v^2*s^2 - v^4 + v^2*s^-2\n") != std::string::npos);

    const CliRun unlink = run({"homfly", "-n", "2", "-w", "1 -1"});
    CHECK(unlink.code == 0);
    // the square of the loop value
    CHECK(unlink.out.find("v^2") != std::string::npos);

    CHECK(run({"homfly", "-n", "2", "-w", "2"}).code == 1);
    CHECK(run({"homfly", "-n", "2", "-w", "1 0"}).code == 1);
}

TEST_CASE("table subcommand") {
    const CliRun r = run({"table", "--max-cells", "1", "-N", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "partition,alpha,qdim,dim\n\"1\",1,s + s^-1,2\n");

    const CliRun two = run({"table", "--max-cells", "2", "-N", "2"});
    CHECK(two.code == 0);
    CHECK(two.out.find("\"2\",s^2 + 1,s^2 + 1 + s^-2,3\n") != std::string::npos);
    CHECK(two.out.find("\"1,1\",1 + s^-2,1,1\n") != std::string::npos);

    const CliRun js = run({"table", "--max-cells", "2", "-N", "2", "--format", "json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["partition"] == nlohmann::json::array({1}));
    CHECK(j[0]["dim"] == 2);

    CHECK(run({"table", "--max-cells", "9", "-N", "2"}).code == 1);
}

TEST_CASE("verify subcommand") {
    const CliRun r = run({"verify", "--max-cells", "3", "--checks", "idempotency"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] idempotency") != std::string::npos);
    CHECK(r.out.find("verify: 1/1 checks passed\n") != std::string::npos);

    const CliRun marel = run({"verify", "--max-cells", "4", "--checks", "marel"});
    CHECK(marel.code == 0);
    CHECK(marel.out.find("[PASS] marel") != std::string::npos);

    const CliRun orth = run({"verify", "--max-cells", "2", "--checks", "orthogonality"});
    CHECK(orth.code == 0);
    CHECK(orth.out.find("[PASS] orthogonality: 1 pairs\n") != std::string::npos);

    CHECK(run({"verify", "--checks", "nosuch"}).code == 1);
    CHECK(run({"verify", "--max-cells", "6"}).code == 1);
    CHECK(run({"verify", "--max-cells", "6", "--unsafe-max", "6", "--checks", "marel"}).code == 0);
    // widening only: a small --unsafe-max never narrows the defaults
    CHECK(run({"verify", "--max-cells", "4", "--unsafe-max", "2", "--checks", "marel"}).code == 0);
}

TEST_CASE("guard override through the environment") {
    setenv("SKEIN_MAX_STRANDS", "6", 1);
    CHECK(run({"verify", "--max-cells", "6", "--checks", "marel"}).code == 0);
    unsetenv("SKEIN_MAX_STRANDS");
    CHECK(run({"verify", "--max-cells", "6", "--checks", "marel"}).code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"nosuchcommand"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is stable across runs") {
    const std::vector<std::string> args{"table", "--max-cells", "4", "-N", "3"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> h{"homfly", "-n", "3", "-w", "1 -2 1 -2", "--normalized"};
    CHECK(run(h).out == run(h).out);
}
