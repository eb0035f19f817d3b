#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "crepant/chen_ruan.hpp"
#include "crepant/json_io.hpp"
#include "crepant/resolution.hpp"
#include "doctest.h"

using namespace crepant;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_config(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("crepant_test_" + name + ".json");
    std::ofstream(path) << body;
    return path.string();
}

const char* kA2 = R"({"n": 2, "base": {"model": "projective_space", "dim": 1},
                      "classes": {"l": "1", "m": "2", "k": "1"}})";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("cartan and age") {
        const auto r = run({"cartan", "--n", "3"});
        REQUIRE(r.code == cli::kOk);
        const auto j = Json::parse(r.out);
        CHECK(j["inverse"][0][0] == "-3/4");
        CHECK(j["cartan"][1][1] == -2);
        const auto a = Json::parse(run({"age", "--order", "5", "--exponents", "1,2,3"}).out);
        CHECK(a["age"] == "6/5");
    }

    TEST_CASE("every report carries the conventions block") {
        for (std::vector<std::string> args : {std::vector<std::string>{"orb-table"}, {"res-table"},
                                              {"qc-table", "--q", "zeta3,zeta3"}, {"reconcile-6-2"},
                                              {"check-assoc", "--ring", "res"}, {"mckay", "--group", "E6"}}) {
            const auto r = run(args);
            REQUIRE(r.code == cli::kOk);
            const auto j = Json::parse(r.out);
            CHECK(j.contains("conventions"));
            CHECK(j["conventions"]["twist"] == "-1/(n+1)");
            CHECK(j["conventions"].contains("gw_assumption"));
        }
    }

    TEST_CASE("model caveat for higher-dimensional bases") {
        const auto path = write_config("p2", R"({"n": 2, "base": {"model": "projective_space", "dim": 2},
                                                "classes": {"l": 1, "m": 2, "k": 1}})");
        const auto j = Json::parse(run({"orb-table", "--config", path}).out);
        CHECK(j["conventions"]["model_dependent"] == true);
        CHECK(j["conventions"].contains("model_caveat"));
    }

    TEST_CASE("tables round-trip through the JSON schema") {
        const auto path = write_config("a2", kA2);
        const auto g = geometry_from_json(Json::parse(kA2));
        const auto orb = Json::parse(run({"orb-table", "--config", path}).out);
        for (const auto& e : orbifold_table(OrbifoldRing(g)).entries) {
            CHECK(orb_class_from_json(orb["products"][e.left + "*" + e.right]) == e.product);
        }
        const auto res = Json::parse(run({"res-table", "--config", path}).out);
        for (const auto& e : resolution_table(ResolutionRing(g)).entries) {
            CHECK(res_class_from_json(res["products"][e.left + "*" + e.right]) == e.product);
        }
        CHECK(geometry_from_json(orb["geometry"]) == g);
    }

    TEST_CASE("output is byte-identical across runs") {
        for (std::vector<std::string> args :
             {std::vector<std::string>{"solve-a2", "--max-order", "6"}, {"qc-table", "--q", "zeta5,zeta5^2"},
              {"reconcile-6-2"}, {"verify-a1"}, {"mckay", "--group", "D5", "--output", "text"}}) {
            const auto a = run(args);
            const auto b = run(args);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("solve-a2 reports the zeta3 pair") {
        const auto j = Json::parse(run({"solve-a2"}).out);
        REQUIRE(j["solutions"].size() == 2);
        CHECK(cyc_from_json(j["solutions"][0]["a"]) == CycNum(2) + CycNum::zeta(3));
        CHECK(cyc_from_json(j["solutions"][0]["b"]) == CycNum::zeta(3) - CycNum(1));
        CHECK(j["searched"] == 46);
    }

    TEST_CASE("verify-a1") {
        const auto one = Json::parse(run({"verify-a1", "--scalar", "i/2"}).out);
        CHECK(one["pass"] == true);
        const auto bad = Json::parse(run({"verify-a1", "--scalar", "1/2"}).out);
        CHECK(bad["pass"] == false);
        CHECK_FALSE(bad["violations"].empty());
    }

    TEST_CASE("gw") {
        const auto j = Json::parse(run({"gw", "--gamma", "b(1,1)", "--insert", "E1,E1,E2"}).out);
        CHECK(j["value"] == "4");
        const auto y = Json::parse(run({"gw", "--gamma", "b(1,1)", "--insert", "Y,E1,E2"}).out);
        CHECK(y["value"] == "0");
    }

    TEST_CASE("poles exit with code 3 and a diagnostic") {
        const auto r = run({"qc-table", "--q=-1,-1"});
        CHECK(r.code == cli::kPole);
        const auto j = Json::parse(r.out);
        CHECK(j["error"] == "pole");
        CHECK(j["span"] == Json::array({1, 2}));
        CHECK(r.err.find("pole") != std::string::npos);
    }

    TEST_CASE("validation and usage errors") {
        CHECK(run({"qc-table", "--q", "0.5,1"}).code == cli::kValidation);
        CHECK(run({"cartan", "--n", "0"}).code == cli::kValidation);
        CHECK(run({"orb-table", "--flag", "t=7"}).code == cli::kValidation);
        CHECK(run({"mckay", "--group", "F4"}).code == cli::kValidation);
        const auto bad = write_config("bad", R"({"n": 2, "base": {"model": "point"}, "classes": {"l": 1, "m": 1, "k": 1}})");
        CHECK(run({"orb-table", "--config", bad}).code == cli::kValidation);
        CHECK(run({"orb-table", "--config", "/nonexistent/file.json"}).code == cli::kValidation);
        CHECK(run({"no-such-command"}).code == cli::kUsage);
        CHECK(run({}).code == cli::kUsage);
    }

    TEST_CASE("text output") {
        const auto r = run({"res-table", "--output", "text"});
        REQUIRE(r.code == cli::kOk);
        CHECK(r.out.find("E1*E2") != std::string::npos);
        CHECK(r.out.find("sigma - 1/3*h*E1 - 2/3*h*E2") != std::string::npos);
    }

    TEST_CASE("conductor cap from the environment") {
        ::setenv("CREPANT_MAX_CONDUCTOR", "10", 1);
        CHECK(run({"qc-table", "--q", "zeta12,zeta12"}).code == cli::kValidation);
        ::unsetenv("CREPANT_MAX_CONDUCTOR");
        CHECK(run({"qc-table", "--q", "zeta12,zeta12"}).code == cli::kOk);
    }
}
