#include "doctest.h"
#include "jacnewton/cli.hpp"
#include "jacnewton/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace jacnewton;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
  Json result() const { return json()["result"]; }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("jacnewton_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kE8 = "x^2+y^3+z^5";
const std::string kTwosimp = "x*y + x*z + 2*y*z + z^2";
const std::string kCounter = "x^2 + y^2 + x*z + x*w + y*z + y*w + z^3 + w^3";
const std::string kFukui0 = "x1^2*x2^2*x3^2*x4^2 + x1*x3^8 + x2*x4^8 + x1^8*x4 + x2^8*x3";

bool has_float(const std::string& s) { return std::regex_search(s, std::regex(R"(\d\.\d|\d[eE][+-]?\d)")); }

}  // namespace

TEST_CASE("cli loj and aj") {
  const auto r = run({"loj", "--expr", kE8});
  REQUIRE(r.code == 0);
  CHECK(r.json()["schema"] == 1);
  CHECK(r.result()["loj"] == "4");
  CHECK(r.result()["morse_exception"] == false);
  CHECK(r.result()["witness_facet"]["normal"] == "(15,10,6)");

  const auto a = run({"aj", "--expr", kE8});
  REQUIRE(a.code == 0);
  CHECK(a.result()["aj"].dump() == R"([{"alpha":"2","coeff":"1"},{"alpha":"3","coeff":"-1"},{"alpha":"5","coeff":"2"}])");
  CHECK(a.result()["virtual_vertices"].dump() == R"([["0","2"],["2","1"],["-1","2"],["9","0"]])");

  const auto f = run({"aj", "--expr", kFukui0, "--level", "3"});
  REQUIRE(f.code == 0);
  CHECK(f.result()["aj"].dump() == R"([{"alpha":"455/47","coeff":"8"}])");
  CHECK(run({"aj", "--expr", kE8, "--level", "3"}).code == cli::input_error);
}

TEST_CASE("cli jac runs the property checks") {
  const auto r = run({"jac", "--expr", kE8});
  REQUIRE(r.code == 0);
  CHECK(r.result()["properties_ok"] == true);
  CHECK(r.result()["j"].dump() == R"([{"alpha":"5","coeff":"2"}])");
  CHECK(run({"jac", "--expr", kE8, "--level", "0"}).result()["str"] == "{2}");
}

TEST_CASE("cli input handling") {
  const auto bad = run({"aj", "--expr", "x^-1 + y"});
  CHECK(bad.code == cli::input_error);
  CHECK(bad.err.find("position 3") != std::string::npos);
  CHECK(run({"loj", "--expr", kE8, "--require-coefficients"}).code == cli::input_error);
  CHECK(run({"loj"}).code == cli::input_error);
  CHECK(run({"frobnicate", "--expr", kE8}).code == cli::input_error);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"loj", "--expr", kE8, "--format", "xml"}).code == cli::input_error);

  const auto path = temp_file("e8.json", R"({"schema":1,"variables":["x","y","z"],"support":[[2,0,0],[0,3,0],[0,0,5]],"nondegenerate":false})");
  const auto j = run({"loj", "--input", path});
  REQUIRE(j.code == 0);
  CHECK(j.result()["loj"] == "4");
  CHECK(j.json()["input"]["nondegenerate"] == false);
  CHECK(j.json().contains("warning"));
  CHECK(input_from_json(j.json()["input"]) == input_from_json(Json::parse(std::ifstream(path))));
  CHECK(run({"loj", "--input", path, "--expr", kE8}).code == cli::input_error);

  const auto vars = run({"diagram", "--expr", "y^3 + x^2", "--vars", "x,y"});
  CHECK(vars.json()["input"]["support"].dump() == "[[0,3],[2,0]]");

  const auto text = run({"loj", "--expr", kE8, "--format", "text"});
  CHECK(text.out.find("result.loj: 4\n") != std::string::npos);
}

TEST_CASE("cli Newton numbers and s_alpha") {
  const auto nn = run({"nn", "--expr", kE8});
  REQUIRE(nn.code == 0);
  CHECK(nn.result()["signed"] == "8");
  CHECK(nn.result()["threshold"] == "5");
  CHECK(run({"nn", "--expr", kE8, "--signed"}).result()["signed"] == "8");
  const auto u = run({"nn", "--expr", kE8, "--unsigned", "--alpha", "4"});
  CHECK(u.result()["alpha"] == "4");
  CHECK(run({"nn", "--expr", kE8, "--signed", "--alpha", "4"}).code == cli::input_error);
  CHECK(run({"nn", "--expr", "x*y + y*z", "--signed"}).code == cli::input_error);

  const auto s = run({"salpha", "--expr", kE8, "--alpha", "5"});
  REQUIRE(s.code == 0);
  CHECK(s.result()["faces"].size() == 7);
  CHECK(run({"salpha", "--expr", kE8, "--alpha", "x"}).code == cli::input_error);
  CHECK(run({"salpha", "--expr", kE8}).code == cli::input_error);
}

TEST_CASE("cli counterexample and conjectures") {
  const auto b = run({"bko", "--expr", kCounter});
  REQUIRE(b.code == 0);
  CHECK(b.result()["predicted"] == "2");
  CHECK(b.result()["loj"] == "1");
  CHECK(b.result()["morse_exception"] == true);
  CHECK(b.result()["match"] == false);

  const auto right = temp_file("right.json", R"({"cells":[[[0,1,1],[0,0,2],[1,1,0]],[[0,0,2],[1,0,1],[1,1,0]]]})");
  const auto c = run({"conjecture", "--expr", kTwosimp, "--triangulation", right});
  REQUIRE(c.code == 0);
  CHECK(c.result()["f_ne"].size() == 4);
  CHECK(c.result()["conj_a_simplices"] == "1");
  CHECK(c.result()["conj_a_facets"] == "1");
  CHECK(c.result()["conj_a_match"] == true);

  const auto t = run({"tri", "--expr", kTwosimp, "--file", right});
  REQUIRE(t.code == 0);
  CHECK(t.result()["cells"].size() == 11);
  const auto overlap = temp_file("overlap.json", R"({"cells":[[[0,1,1],[0,0,2],[1,0,1]],[[0,1,1],[0,0,2],[1,1,0]]]})");
  const auto bad = run({"tri", "--expr", kTwosimp, "--file", overlap});
  CHECK(bad.code == cli::input_error);
  CHECK(bad.err.find("invalid triangulation") != std::string::npos);

  const auto cn = run({"cn", "--expr", kTwosimp});
  REQUIRE(cn.code == 0);
  CHECK(cn.result()["aj_via_cap"].dump() == R"([{"alpha":"2","coeff":"1"}])");
  const auto one = run({"cn", "--expr", kTwosimp, "--triangulation", right, "--cell", "0"});
  REQUIRE(one.code == 0);
  CHECK(one.result()["str"] == "1/2{2}");
  CHECK(run({"cn", "--expr", kTwosimp, "--cell", "99"}).code == cli::input_error);
  CHECK(run({"cn", "--expr", kTwosimp, "--empty"}).code == 0);
}

TEST_CASE("cli render") {
  const auto path = (std::filesystem::temp_directory_path() / "jacnewton_test_e8.svg").string();
  const auto r = run({"render", "--expr", kE8, "--out", path});
  REQUIRE(r.code == 0);
  std::stringstream first;
  first << std::ifstream(path).rdbuf();
  REQUIRE(run({"render", "--expr", kE8, "--out", path}).code == 0);
  std::stringstream second;
  second << std::ifstream(path).rdbuf();
  CHECK(first.str() == second.str());
  CHECK(first.str().find("<polyline") != std::string::npos);
  CHECK(run({"render", "--expr", kE8, "--out", "/nonexistent/dir/x.svg"}).code == cli::internal_error);
}

TEST_CASE("cli output has no floating point") {
  const std::vector<std::vector<std::string>> commands = {
      {"diagram", "--expr", kCounter}, {"aj", "--expr", kFukui0, "--level", "2"}, {"jac", "--expr", kTwosimp},
      {"loj", "--expr", kFukui0},      {"nn", "--expr", kCounter},                {"salpha", "--expr", kE8, "--alpha", "7/2"},
      {"tri", "--expr", kCounter},     {"cn", "--expr", kE8},                     {"conjecture", "--expr", kE8},
      {"bko", "--expr", kE8}};
  for (const auto& args : commands) {
    const auto r = run(args);
    CAPTURE(args.front());
    REQUIRE(r.code == 0);
    CHECK_FALSE(has_float(r.result().dump()));
    CHECK_FALSE(has_float(r.json()["input"].dump()));
  }
}
