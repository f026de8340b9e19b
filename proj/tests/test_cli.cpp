#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polysum/cli.hpp"
#include "polysum/error.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polysum;
using namespace polysum::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    auto p = fs::temp_directory_path() / ("polysum_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

std::string put(const std::string& name, const std::string& body) {
    auto p = scratch() / name;
    std::ofstream(p) << body;
    return p.string();
}

const char* kTri1 = "dim 2\n0 0\n1 0\n0 1\n";
const char* kTri2 = "dim 2\n0 0\n2 1\n1 3\n";
const char* kTri3 = "dim 2\n# third\n0 0\n-1 3\n-3 -1\n";

}  // namespace

TEST_CASE("vertex file parsing") {
    std::istringstream ok("# header\ndim 3\n1 2/3 -4\n\n0 0 0  # origin\n");
    auto pts = parse_vertex_file(ok);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0][1] == ExactScalar(2, 3));

    std::ostringstream out;
    write_vertex_file(out, pts);
    std::istringstream back(out.str());
    CHECK(parse_vertex_file(back) == pts);

    std::istringstream bad("dim 2\n1 2\n3\n");
    try {
        parse_vertex_file(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    std::istringstream zero("dim 2\n1/0 2\n");
    CHECK_THROWS_AS(parse_vertex_file(zero), ParseError);
    std::istringstream nohead("1 2\n");
    CHECK_THROWS_AS(parse_vertex_file(nohead), ParseError);
}

TEST_CASE("hull") {
    auto o = cmd_hull(put("sq.txt", "dim 2\n0 0\n1 0\n1 1\n0 1\n1/2 1/2\n"));
    CHECK(o.exit_code == 0);
    CHECK(o.report["f_vector"] == Json::array({1, 4, 4}));
    CHECK(o.report["vertices"].size() == 4);
    CHECK(cmd_hull(put("bad.txt", "dim 2\n0 x\n")).exit_code == 2);
    CHECK(cmd_hull((scratch() / "missing.txt").string()).exit_code == 2);
}

TEST_CASE("minkowski") {
    std::vector<std::string> f{put("t1.txt", kTri1), put("t2.txt", kTri2), put("t3.txt", kTri3)};
    auto o = cmd_minkowski(f, Via::both);
    CHECK(o.exit_code == 0);
    CHECK(o.report["agree"] == true);
    CHECK(o.report["f_vector"] == Json::array({1, 9, 9}));
    CHECK(cmd_minkowski({f[0]}, Via::direct).exit_code == 3);

    ::setenv("POLYSUM_TEST_DISAGREE", "1", 1);
    CHECK(cmd_minkowski(f, Via::both).exit_code == 4);
    ::unsetenv("POLYSUM_TEST_DISAGREE");
}

TEST_CASE("bounds") {
    auto o = cmd_bounds(3, {4, 4, 4}, {});
    CHECK(o.exit_code == 0);
    CHECK(o.report["bounds"].size() == 3);
    CHECK(cmd_bounds(3, {3, 4, 4}, {}).exit_code == 3);

    std::vector<std::string> f{put("t1.txt", kTri1), put("t2.txt", kTri2), put("t3.txt", kTri3)};
    auto a = cmd_bounds(2, {3, 3, 3}, f);
    CHECK(a.exit_code == 0);
    CHECK(a.report["all_tight"] == true);
    CHECK(cmd_bounds(2, {3, 3, 4}, f).exit_code == 3);
}

TEST_CASE("construct and verify round trip") {
    auto dir = (scratch() / "d4").string();
    auto o = cmd_construct(4, {5, 5, 5}, std::nullopt, dir, 1);
    REQUIRE(o.exit_code == 0);
    CHECK(o.report["certified"] == true);
    CHECK(o.report["f_vector"] == Json::array({1, 125, 405, 450, 170}));
    CHECK(o.report["emitted"].size() == 3);

    auto v = cmd_verify({dir + "/P1.txt", dir + "/P2.txt", dir + "/P3.txt"});
    CHECK(v.exit_code == 0);
    CHECK(v.report["all_pass"] == true);

    CHECK(cmd_construct(3, {4, 4, 4}, std::nullopt, std::nullopt, 1).exit_code == 3);
    CHECK(cmd_construct(4, {5, 5}, std::nullopt, std::nullopt, 1).exit_code == 3);
    auto p = cmd_construct(2, {3, 4, 5}, std::nullopt, std::nullopt, 3);
    CHECK(p.exit_code == 0);
    CHECK(p.report["f_vector"] == Json::array({1, 12, 12}));
}

TEST_CASE("search exhaustion is exit 5") {
    ::setenv("POLYSUM_JMAX", "1", 1);
    auto o = cmd_construct(5, {6, 6, 6}, std::nullopt, std::nullopt, 1);
    ::unsetenv("POLYSUM_JMAX");
    CHECK(o.exit_code == 5);
    CHECK(o.report["error"].get<std::string>().find("R=5 l=3") != std::string::npos);
}

TEST_CASE("verify on a non-generic triple skips the simplicial checks") {
    auto sq = put("sq1.txt", "dim 2\n0 0\n1 0\n1 1\n0 1\n");
    auto sq2 = put("sq2.txt", "dim 2\n0 0\n2 0\n2 3\n0 3\n");
    auto o = cmd_verify({sq, sq2, put("t1.txt", kTri1)});
    CHECK(o.exit_code == 0);
    CHECK(o.report["checks"]["genericity"] == false);
    CHECK(o.report.contains("skipped"));
}

TEST_CASE("detasym") {
    auto o = cmd_detasym("det2",
                         R"({"n":2,"m":3,"I":3,"J":4,"mu":[0,0,1,2,3],"alpha":2,"beta":1,"M":12,
                             "x":[1,2],"y":["1","3/2",2]})",
                         0, 0);
    CHECK(o.exit_code == 0);
    CHECK(o.report["instances"][0]["xi_predicted"] == 7);
    auto r = cmd_detasym("det3", std::nullopt, 5, 11);
    CHECK(r.exit_code == 0);
    CHECK(r.report["passed"] == 5);
    CHECK(cmd_detasym("det2", "{not json", 0, 0).exit_code == 2);
    CHECK(cmd_detasym("det4", std::nullopt, 1, 0).exit_code == 3);
    CHECK(cmd_detasym("det2",
                      R"({"n":2,"m":3,"I":3,"J":4,"mu":[0,0,1,2,3],"alpha":1,"beta":1,"M":12,
                          "x":[1,2],"y":[1,2,3]})",
                      0, 0)
              .exit_code == 3);
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(ParseError("x", 1)) == 2);
    CHECK(exit_code_for(DomainError("x")) == 3);
    CHECK(exit_code_for(InternalInconsistency("x")) == 4);
    CHECK(exit_code_for(SearchExhausted("x")) == 5);
}
