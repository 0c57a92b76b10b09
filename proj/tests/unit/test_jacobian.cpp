#include "doctest.h"
#include "examples.hpp"
#include "jacnewton/jacobian.hpp"

using namespace jacnewton;

namespace {

NewtonDiagram diagram(const std::vector<IntVec>& pts) { return NewtonDiagram(SupportSet(pts)); }

KNInt g(long m, long n, long c = 1) { return KNInt::generator(Slope(m, n), c); }

WeightVector w(std::initializer_list<long> xs) {
  std::vector<ExtNat> e;
  for (long x : xs) e.push_back(x < 0 ? ExtNat::infinity() : ExtNat(x));
  return WeightVector(e);
}

}  // namespace

TEST_CASE("W on E8") {
  const auto d = diagram(testdata::e8());
  CHECK(w_mixed(d, w({15, 10, 6}), 2) == 1);
  CHECK(w_mixed(d, w({-1, -1, 1}), 2) == 1);
  CHECK(w_mixed(d, w({1, 1, 1}), 2) == 0);
  CHECK(w_mixed(d, w({1, 1, 1}), 0) == 1);
  CHECK_THROWS(w_mixed(d, w({1, 1, 1}), 3));
}

TEST_CASE("E8 alternating Jacobian polygon") {
  const auto d = diagram(testdata::e8());
  const KNInt expected = g(5, 1, 2) - g(3, 1) + g(2, 1);
  CHECK(aj_via_volume(d) == expected);
  CHECK(aj_via_mixed_volume(d, 2) == expected);
  CHECK(aj_via_volume(d).str() == aj_via_mixed_volume(d, 2).str());
  CHECK(aj(d, 1) == g(3, 1) - g(2, 1));
  CHECK(aj(d, 0) == g(2, 1));
  CHECK(jacobian_polygon(d, 2) == g(5, 1, 2));
  CHECK(jacobian_polygon(d, 0) == g(2, 1));
  const auto j3 = jacobian_polygon(d, 2);
  CHECK(j3.length().value == 10);
  CHECK(j3.height().value == 2);
  const auto loj = lojasiewicz(d);
  CHECK(loj.value == 4);
  CHECK(!loj.morse_exception);
  REQUIRE(loj.witness_facet);
  CHECK(loj.witness_facet->normal->str() == "(15,10,6)");
  const auto report = property_report(d);
  for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("multiplicity at the bottom level") {
  CHECK(aj(diagram({{3, 0}, {1, 4}, {0, 7}}), 0) == g(3, 1));
  CHECK(aj(diagram(testdata::fukui(0)), 0) == g(8, 1));
}

TEST_CASE("Morse points") {
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec p(dim, Int(0));
      p[i] = 2;
      pts.push_back(p);
    }
    const auto d = diagram(pts);
    for (std::size_t level = 0; level < dim; ++level) CHECK(jacobian_polygon(d, level) == g(2, 1));
    const auto loj = lojasiewicz(d);
    CHECK(loj.value == 1);
    CHECK(loj.morse_exception == (dim % 2 == 0));
  }
}

TEST_CASE("twosimp and counterexample") {
  const auto t = diagram(testdata::twosimp());
  CHECK(aj_via_volume(t) == g(2, 1));
  CHECK(aj_via_mixed_volume(t, 2) == g(2, 1));
  CHECK(lojasiewicz(t).value == 1);

  const auto c = diagram(testdata::counter());
  CHECK(aj_via_volume(c).is_zero());
  CHECK(aj_via_mixed_volume(c, 3).is_zero());
  const auto loj = lojasiewicz(c);
  CHECK(loj.value == 1);
  CHECK(loj.morse_exception);
  CHECK(generic_hessian_rank(c.support()) == 4);
  CHECK(property_report(c).ok());
}

TEST_CASE("Fukui examples") {
  const auto f0 = diagram(testdata::fukui(0));
  CHECK(aj(f0, 3) == g(455, 47, 8));
  CHECK(aj_via_mixed_volume(f0, 3) == g(455, 47, 8));
  CHECK(aj(f0, 2) == g(8, 1) + g(9, 1, 40) + g(28, 3, 2));
  CHECK(aj(f0, 1) == g(8, 1, 2) + g(9, 1, 4));
  CHECK(lojasiewicz(f0).value == Rat(408, 47));

  const auto f1 = diagram(testdata::fukui(1));
  CHECK(aj(f1, 3) == g(28, 3, 57) + g(455, 47, 4));
  CHECK(aj_via_mixed_volume(f1, 3) == aj(f1, 3));
  CHECK(aj(f1, 2) == g(8, 1, 4) + g(9, 1, 29) + g(28, 3, 4));
  CHECK(aj(f1, 1) == g(8, 1, 4) + g(9, 1, 2));
  CHECK(lojasiewicz(f1).value == Rat(408, 47));
}
