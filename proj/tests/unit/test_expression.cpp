#include "doctest.h"
#include "examples.hpp"
#include "jacnewton/expression.hpp"
#include "jacnewton/json_io.hpp"
#include "jacnewton/svg.hpp"

#include <random>
#include <regex>

using namespace jacnewton;

namespace {

std::vector<IntVec> sorted(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end(), IntVecLess());
  return v;
}

std::size_t error_position(const std::string& text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse supports") {
  const auto e8 = parse_expression("x^2 + y^3 + z^5");
  CHECK(e8.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(e8.support == sorted(testdata::e8()));

  const auto ts = parse_expression("x*y + x*z + 2*y*z + z^2");
  CHECK(ts.support == sorted(testdata::twosimp()));
  CHECK(ts.coefficients == std::vector<Rat>{1, 2, 1, 1});

  const auto implicit = parse_expression("3/4 x y^2 - x y y + x^1");
  CHECK(implicit.support == std::vector<IntVec>{{1, 0}, {1, 2}});
  CHECK(implicit.coefficients == std::vector<Rat>{1, Rat(-1, 4)});

  CHECK(parse_expression("x*y - x*y + y").support == std::vector<IntVec>{{0, 1}});
  CHECK(parse_expression("y^2 + x", std::vector<std::string>{"x", "y"}).support == std::vector<IntVec>{{0, 2}, {1, 0}});
  CHECK(parse_expression("a1^2 + b_2").variables == std::vector<std::string>{"a1", "b_2"});
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("x^-1 + y") == 3);
  CHECK(error_position("x^1/2") == 4);
  CHECK(error_position("x + + y") == 5);
  CHECK(error_position("x + 3") == 5);
  CHECK(error_position("") == 1);
  CHECK(error_position("x ^ y") == 5);
  CHECK(error_position("x # y") == 3);
  CHECK(error_position("2/0 x") == 3);
  CHECK(error_position("x*") == 3);
  CHECK_THROWS_AS(parse_expression("x + y", std::vector<std::string>{"x"}), ParseError);
  CHECK_THROWS_AS(parse_expression("x - x"), ParseError);
}

TEST_CASE("canonical printing round-trips") {
  for (const std::string s : {"x^2 + y^3 + z^5", "x*y + x*z + 2*y*z + z^2", "-x^3 + 1/2*x*y - y^7", "x*y*z"}) {
    const auto spec = parse_expression(s);
    const std::string printed = format_expression(spec);
    CHECK(parse_expression(printed, spec.variables) == spec);
  }
  CHECK(format_expression(parse_expression("z^5 + y^3 + x^2")) == "z^5 + y^3 + x^2");
  CHECK(format_expression(parse_expression("x^2 + y^3 + z^5")) == "x^2 + y^3 + z^5");

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    InputSpec spec;
    spec.variables = {"u", "v", "w"};
    std::map<IntVec, Rat, IntVecLess> terms;
    const int count = 1 + static_cast<int>(rng() % 5);
    while (static_cast<int>(terms.size()) < count) {
      IntVec p{Int(rng() % 4), Int(rng() % 4), Int(rng() % 4)};
      if (p == IntVec{0, 0, 0}) continue;
      Rat c(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      c.canonicalize();
      if (c == 0) c = 1;
      terms[p] = c;
    }
    for (const auto& [p, c] : terms) {
      spec.support.push_back(p);
      spec.coefficients.push_back(c);
    }
    CAPTURE(format_expression(spec));
    CHECK(parse_expression(format_expression(spec), spec.variables) == spec);
  }
}

TEST_CASE("JSON input round-trips") {
  const auto spec = parse_expression("x*y + x*z + 2*y*z + z^2");
  CHECK(input_from_json(input_to_json(spec)) == spec);

  const auto j = Json::parse(R"({"schema":1,"variables":["a","b"],"support":[[2,0],[0,3],[2,0]],"nondegenerate":false})");
  const auto s = input_from_json(j);
  CHECK(s.support == std::vector<IntVec>{{0, 3}, {2, 0}});
  CHECK(s.coefficients.empty());
  CHECK_FALSE(s.nondegenerate);
  CHECK(input_from_json(input_to_json(s)) == s);

  CHECK(input_from_json(Json::parse(R"({"support":[[1,0,0]]})")).variables == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"schema":2,"support":[[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"variables":["x"],"support":[[1,0]]})")), std::invalid_argument);
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"support":[[1,-1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"support":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(input_from_json(Json::parse(R"({"support":[[1]],"nondegenerate":"yes"})")), std::invalid_argument);
}

TEST_CASE("Newton group elements in JSON") {
  const KNInt a = KNInt::generator(Slope(5, 1), 2) - KNInt::generator(Slope(3, 1)) + KNInt::generator(Slope(455, 47));
  const Json j = kn_to_json(a);
  CHECK(j.dump() == R"([{"alpha":"3","coeff":"-1"},{"alpha":"5","coeff":"2"},{"alpha":"455/47","coeff":"1"}])");
  CHECK(kn_from_json(j) == a.cast<Rat>());
  const KNRat r = KNRat::generator(Slope::infinity(), Rat(1, 2)) + KNRat::generator(Slope::zero(), 3);
  CHECK(kn_from_json(kn_to_json(r)) == r);
  CHECK(kn_to_json(KNInt()).dump() == "[]");
}

TEST_CASE("triangulation files") {
  const auto t = triangulation_from_json(Json::parse(R"({"cells":[[[0,1,1],[0,0,2],[1,0,1]],[[0,1,1],[1,0,1],[1,1,0]]]})"));
  CHECK(t.cells().size() == 11);
  CHECK(triangulation_from_json(triangulation_to_json(t)).cells() == t.cells());
  CHECK_THROWS(triangulation_from_json(Json::parse(R"({"cells":[[]]})")));
  CHECK_THROWS(triangulation_from_json(Json::parse(R"([1,2])")));
}

TEST_CASE("SVG rendering") {
  const KNInt e8 = KNInt::generator(Slope(5, 1), 2) - KNInt::generator(Slope(3, 1)) + KNInt::generator(Slope(2, 1));
  const std::string svg = render_svg(e8);
  CHECK(svg == render_svg(e8));
  // (0,2),(2,1),(-1,2),(9,0) with xmin = -1, ymax = 2, unit 40, margin 80
  CHECK(svg.find("points=\"120,80 200,120 80,80 480,160\"") != std::string::npos);
  CHECK_FALSE(std::regex_search(svg, std::regex(R"(\d\.\d)")));

  const std::string two = render_svg(KNInt::generator(Slope(2, 1)));
  const auto pts = two.substr(two.find("points=\""));
  CHECK(std::count(pts.begin(), pts.begin() + static_cast<long>(pts.find("/>")), ',') == 2);

  const std::string zero = render_svg(KNInt());
  CHECK(zero.find("points=\"80,120\"") != std::string::npos);
  CHECK_THROWS_AS(render_svg(KNInt::generator(Slope::infinity())), std::domain_error);
}
