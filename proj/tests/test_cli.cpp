#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ctconfig/cli.hpp"
#include "ctconfig/cohomology.hpp"

using namespace ctconfig;

namespace {

struct Captured {
    int code;
    std::string out;
};

Captured run_captured(const std::vector<std::string>& args)
{
    std::stringstream buffer;
    std::streambuf* old = std::cout.rdbuf(buffer.rdbuf());
    int code = cli::run(args);
    std::cout.rdbuf(old);
    return {code, buffer.str()};
}

std::string ring_path()
{
    return std::string(CTCONFIG_RING_DIR) + "/cp2.json";
}

}  // namespace

TEST_CASE("validate command")
{
    CHECK(run_captured({"validate", ring_path()}).code == 0);
    CHECK(run_captured({"validate", "/nonexistent/ring.json"}).code == 1);

    // an invalid ring file exits 1
    std::string bad = "/tmp/ctconfig_bad_ring.json";
    {
        std::ofstream out(bad);
        out << R"({"name":"bad","dimension":4,
                   "basis":[{"label":"1","degree":0},{"label":"x","degree":2},
                            {"label":"x2","degree":4}],
                   "unit":"1","fundamental":"x2","products":[]})";
    }
    // x*x omitted means zero: the pairing degenerates
    CHECK(run_captured({"validate", bad}).code == 1);
}

TEST_CASE("betti command and exit codes")
{
    CHECK(run_captured({"betti", "--ring", "builtin:cp2", "--n", "3"}).code == 0);
    CHECK(run_captured({"betti", "--ring", ring_path(), "--n", "2"}).code == 0);

    // characteristic must exceed n
    CHECK(run_captured({"betti", "--ring", "builtin:cp2", "--n", "3", "--field", "fp:3"})
              .code == 2);
    // non-prime characteristic is a usage error
    CHECK(run_captured({"betti", "--ring", "builtin:cp2", "--n", "2", "--field", "fp:4"})
              .code == 2);
    // unknown builtin
    CHECK(run_captured({"betti", "--ring", "builtin:klein", "--n", "2"}).code == 2);
    // the first-page route is combinatorially guarded
    CHECK(run_captured({"e1", "--ring", "builtin:cp2", "--n", "9"}).code == 2);
    // the wedge model has no such guard
    CHECK(run_captured({"betti", "--ring", "builtin:cp2", "--n", "9"}).code == 0);
    // bad flags
    CHECK(run_captured({"betti", "--ring"}).code == 2);
    CHECK(run_captured({"nonsense"}).code == 2);
    CHECK(run_captured({"betti", "--ring", "builtin:cp2", "--n", "-1"}).code == 2);
}

TEST_CASE("json output round-trips")
{
    auto res = run_captured({"betti", "--ring", "builtin:cp2", "--n", "3", "--json"});
    REQUIRE(res.code == 0);
    auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["ring"] == "cp2");
    CHECK(doc["n"] == 3);
    CHECK(doc["field"] == "q");

    // parse(emit(result)) = result
    auto re = nlohmann::ordered_json::parse(doc.dump(2));
    CHECK(re == doc);

    // the payload matches the library computation
    PDAlgebra h = builtin_ring("cp:2", Field::rationals());
    auto b = betti(build_wedge_complex(h, 3).complex);
    std::map<int, long> parsed;
    for (auto it = doc["betti"].begin(); it != doc["betti"].end(); ++it)
        parsed[std::stoi(it.key())] = it.value().get<long>();
    CHECK(parsed == b);
}

TEST_CASE("same numbers over the rationals and a large prime field")
{
    for (const char* ring : {"cp:2", "surface:1"}) {
        PDAlgebra hq = builtin_ring(ring, Field::rationals());
        PDAlgebra hp = builtin_ring(ring, Field::prime(101));
        for (int n = 1; n <= 3; ++n) {
            auto bq = betti(build_wedge_complex(hq, n).complex);
            auto bp = betti(build_wedge_complex(hp, n).complex);
            CHECK_MESSAGE(bq == bp, ring << " n=" << n);
        }
    }
}

TEST_CASE("e1 and free commands")
{
    CHECK(run_captured({"e1", "--ring", "builtin:sphere:2", "--n", "2", "--invariants"})
              .code == 0);
    CHECK(run_captured({"e1", "--ring", "builtin:sphere:2", "--n", "2", "--check-phi"})
              .code == 0);
    auto free_res = run_captured({"free", "--ambient-dim", "2", "--n", "3"});
    CHECK(free_res.code == 0);
    CHECK(free_res.out.find("1 + 3 t^1 + 2 t^2") != std::string::npos);
}

TEST_CASE("ring-table command")
{
    auto res = run_captured({"ring-table", "--ring", "builtin:cp2", "--n", "2", "--json"});
    REQUIRE(res.code == 0);
    auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["classes"].size() == 3);

    auto odd = run_captured({"ring-table", "--ring", "builtin:sphere:3", "--n", "2"});
    CHECK(odd.code == 0);
}

TEST_CASE("verify command usage")
{
    CHECK(run_captured({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run_captured({"verify", "--suite", "odd", "--n-max", "2"}).code == 0);
}
