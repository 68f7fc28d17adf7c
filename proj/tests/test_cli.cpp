#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "kq/cli.hpp"

using nlohmann::json;

namespace {
json run(const std::vector<std::string>& args, int expected_code = 0) {
    std::ostringstream out;
    int code = kq::cli_run(args, out);
    REQUIRE(code == expected_code);
    return json::parse(out.str());
}
}  // namespace

TEST_CASE("hom") {
    json j = run({"hom", R"({"family":"P","t":0})", R"({"family":"P","t":1})"});
    CHECK(j["dim"] == 2);

    json cross = run({"hom", "--oracle", R"({"family":"R","tube":"0","len":1})",
                      R"({"family":"R","tube":"0","len":1,"shift":1})"});
    CHECK(cross["dim"] == 1);
    CHECK(cross["oracle"] == 1);
}

TEST_CASE("triangle and hn") {
    json t = run({"triangle", R"({"family":"R","tube":"inf","len":1})"});
    CHECK(t["mid"].size() == 1);
    CHECK(t["left"].size() == 1);
    CHECK(t["right"].size() == 1);

    json tower = run({"hn", R"({"family":"R","tube":"0","len":1})", "--n", "1", "--p", "3"});
    CHECK(tower["quotients"].size() == 2);
    CHECK(tower["quotients"][0]["phase"] == "(0,1)");
    CHECK(tower["quotients"][1]["phase"] == "(1,0)");
}

TEST_CASE("coslice") {
    json v = run({"coslice", "validate", "--n", "1", "--p", "3", "--tube-labels", "1",
                  "--max-reg-length", "2", "--max-pp-index", "4", "--max-pi-index", "4"});
    CHECK(v["valid"] == true);
    CHECK(v["trivial"] == false);

    json cmp = run({"coslice", "compare", "--n", "1", "--p", "3", "--coarse", "two-object",
                    "--tube-labels", "1", "--max-reg-length", "2", "--max-pp-index", "4",
                    "--max-pi-index", "4"});
    CHECK(cmp["finer"] == true);

    json d = run({"coslice", "distance", "--q", R"({"n":0,"phi1":0.25,"phi0":0.75})", "--r",
                  R"({"n":0,"phi1":0.25,"phi0":0.85})"});
    CHECK(d["distance"].get<double>() == doctest::Approx(0.1));
}

TEST_CASE("cotstr") {
    json heart = run({"cotstr", "coheart", "--family", "bounded", "--n", "1", "--p", "3",
                      "--m", "0"});
    REQUIRE(heart.size() == 2);
    CHECK(heart[0]["family"] == "P");
    CHECK(heart[0]["t"] == 0);
    CHECK(heart[0]["shift"] == 0);
    CHECK(heart[1]["t"] == 1);
    CHECK(heart[1]["shift"] == 3);

    json m = run({"cotstr", "member", "--family", "bounded", "--n", "1", "--p", "3", "--k", "0",
                  "--i", "0", R"({"family":"P","t":0})"});
    CHECK(m["aisle"] == true);
    CHECK(m["coaisle"] == false);

    json s = run({"cotstr", "silting", R"({"family":"P","t":0})", R"({"family":"P","t":1})",
                  "--tube-labels", "1", "--max-reg-length", "2", "--max-pp-index", "4",
                  "--max-pi-index", "4"});
    CHECK(s["partial_silting"] == true);
    CHECK(s["silting"] == true);
}

TEST_CASE("costab") {
    std::string q = R"({"n":0,"phi1":0.25,"phi0":0.75,"m1":1,"m0":1})";
    json v = run({"costab", "validate", "--q", q});
    CHECK(v["pass"] == true);

    json w = run({"costab", "walk", "--q1", q, "--q2",
                  R"({"n":0,"phi1":0.1,"phi0":1.5,"m1":2,"m0":3})", "--steps", "4"});
    CHECK(w.size() == 5);
}

TEST_CASE("error codes") {
    std::ostringstream out;
    // malformed JSON input
    CHECK(kq::cli_run({"hom", "{not json", R"({"family":"P","t":1})"}, out) == 2);
    // usage error: unknown subcommand
    CHECK(kq::cli_run({"frobnicate"}, out) == 2);
    // missing field
    CHECK(kq::cli_run({"hom", R"({"t":1})", R"({"family":"P","t":1})"}, out) == 2);
    // validation failure (cross-component distance is fine, but invalid quintuple is input error)
    CHECK(kq::cli_run({"costab", "validate", "--q",
                       R"({"n":0,"phi1":0.75,"phi0":0.25,"m1":1,"m0":1})"},
                      out) == 2);
}

TEST_CASE("deterministic output") {
    std::vector<std::string> args{"coslice", "build", "--n", "1", "--p", "2", "--tube-labels",
                                  "1", "--max-reg-length", "2"};
    std::ostringstream a, b;
    CHECK(kq::cli_run(args, a) == 0);
    CHECK(kq::cli_run(args, b) == 0);
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
}

TEST_CASE("export") {
    std::ostringstream out;
    CHECK(kq::cli_run({"export", "ar-quiver", "--dot", "--max-shift", "1"}, out) == 0);
    CHECK(out.str().find("digraph") != std::string::npos);
    CHECK(out.str().find("label=2") != std::string::npos);
}
