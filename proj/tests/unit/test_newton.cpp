#include "doctest.h"
#include "examples.hpp"
#include "jacnewton/lattice_geom.hpp"
#include "jacnewton/newton.hpp"

#include <map>
#include <random>

using namespace jacnewton;

namespace {

WeightVector w(std::initializer_list<long> xs) {
  std::vector<ExtNat> e;
  for (long x : xs) e.push_back(x < 0 ? ExtNat::infinity() : ExtNat(x));
  return WeightVector(e);
}
constexpr long inf = -1;

NewtonDiagram diagram(const std::vector<IntVec>& pts) { return NewtonDiagram(SupportSet(pts)); }

// Brute force: every primitive weight with entries in 1..bound or inf whose
// face has dimension |finite entries| - 1 and spans those coordinates.
std::map<std::string, Face> brute_coordinate_facets(const std::vector<IntVec>& pts, std::size_t dim, long bound) {
  std::map<std::string, Face> out;
  std::vector<long> cur(dim, 0);
  for (;;) {
    std::vector<ExtNat> e;
    bool any = false;
    Int g = 0;
    for (long x : cur) {
      if (x == 0) e.push_back(ExtNat::infinity());
      else {
        e.push_back(ExtNat(x));
        any = true;
        g = gcd(g, Int(x));
      }
    }
    if (any && g == 1) {
      const WeightVector v(e);
      const Face f = face_of(pts, v);
      if (!f.empty() && f.dim == static_cast<int>(v.finite_coords().size()) - 1 && f.coords == v.finite_coords())
        out.emplace(v.str(), f);
    }
    std::size_t i = 0;
    while (i < dim && cur[i] == bound) cur[i++] = 0;
    if (i == dim) break;
    ++cur[i];
  }
  return out;
}

std::vector<IntVec> random_convenient(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> axis(2, 7);
  std::uniform_int_distribution<int> coord(0, 4);
  std::uniform_int_distribution<int> extra(0, 4);
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec p(dim, Int(0));
    p[i] = axis(rng);
    pts.push_back(p);
  }
  const int k = extra(rng);
  for (int t = 0; t < k; ++t) {
    IntVec p(dim);
    Int deg = 0;
    for (auto& x : p) {
      x = coord(rng);
      deg += x;
    }
    if (deg >= 2) pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("wedge and linear wedge") {
  const auto pts = testdata::e8();
  CHECK(wedge(pts, w({15, 10, 6})) == ExtNat(30));
  CHECK(wedge(pts, w({5, inf, 2})) == ExtNat(10));
  CHECK(wedge(pts, w({1, 1, 1})) == ExtNat(2));
  CHECK(wedge(pts, w({inf, inf, 1})) == ExtNat(5));
  CHECK(wedge({{1, 1, 0}}, w({inf, 1, 1})).is_infinite());
  CHECK(wedge_linear(w({15, 10, 6})) == ExtNat(6));
  CHECK(wedge_linear(w({5, inf, 2})) == ExtNat(2));
  CHECK(wedge_linear(w({inf, inf, inf, 1})) == ExtNat(1));
  CHECK_THROWS(WeightVector({ExtNat(2), ExtNat(4)}));
  CHECK(WeightVector::primitive({ExtNat(2), ExtNat(4), ExtNat::infinity()}).str() == "(1,2,inf)");
}

TEST_CASE("support validation") {
  CHECK_THROWS(SupportSet({}));
  CHECK_THROWS(SupportSet({{0, 0}}));
  CHECK_THROWS(SupportSet({{1, -1}}));
  CHECK_THROWS(SupportSet({{1, 0}, {1}}));
  CHECK(SupportSet({{1, 1}, {1, 1}, {2, 0}}).points().size() == 2);
}

TEST_CASE("faces of weights") {
  const auto pts = testdata::e8();
  const Face tri = face_of(pts, w({15, 10, 6}));
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.dim == 2);
  CHECK(tri.is_coordinate_facet());
  const Face vz = face_of(pts, w({inf, inf, 1}));
  CHECK(vz.vertices == std::vector<IntVec>{{0, 0, 5}});
  CHECK(face_of({{1, 1, 0}}, w({inf, 1, 1})).empty());
}

TEST_CASE("E8 coordinate facets") {
  const auto d = diagram(testdata::e8());
  const auto& cf = d.coordinate_facets();
  REQUIRE(cf.size() == 7);
  std::map<std::string, std::pair<long, long>> expected{
      {"(15,10,6)", {30, 6}}, {"(3,2,inf)", {6, 2}},  {"(5,inf,2)", {10, 2}}, {"(inf,5,3)", {15, 3}},
      {"(1,inf,inf)", {2, 1}}, {"(inf,1,inf)", {3, 1}}, {"(inf,inf,1)", {5, 1}}};
  for (const auto& f : cf) {
    const auto it = expected.find(f.normal->str());
    REQUIRE(it != expected.end());
    CHECK(f.m == ExtNat(it->second.first));
    CHECK(f.n == ExtNat(it->second.second));
    CHECK(f.dim == static_cast<int>(f.coords.size()) - 1);
    CHECK(f.normal->sedentarity().size() + f.coords.size() == 3);
  }
  const auto brute = brute_coordinate_facets(testdata::e8(), 3, 15);
  CHECK(brute.size() == 7);
  CHECK(d.maximal_axial_diagram() == 5);
  CHECK(d.maximal_axial(w({15, 10, 6})) == 5);
  CHECK(d.maximal_axial(w({1, 1, 1})) == 2);
}

TEST_CASE("counterexample and twosimp facets") {
  const auto c = diagram(testdata::counter());
  std::vector<std::string> tops;
  for (auto i : c.top_facets()) tops.push_back(c.coordinate_facets()[i].normal->str());
  CHECK(tops == std::vector<std::string>{"(1,1,1,1)", "(2,2,1,1)"});
  CHECK(c.coordinate_facets()[c.top_facets()[0]].maximal_axial() == 2);
  CHECK(c.coordinate_facets()[c.top_facets()[1]].maximal_axial() == 3);
  CHECK(c.maximal_axial_diagram() == 3);
  CHECK(c.is_convenient());

  const auto t = diagram(testdata::twosimp());
  REQUIRE(t.coordinate_facets().size() == 4);
  for (const auto& f : t.coordinate_facets()) CHECK(f.maximal_axial() == 2);
  CHECK(t.maximal_axial_diagram() == 2);
  CHECK(!t.is_convenient());
  CHECK(!diagram({{1, 1}}).is_convenient());
  CHECK(diagram(testdata::e8()).is_convenient());
}

TEST_CASE("face lattice agrees with per-subset enumeration") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const auto pts = random_convenient(rng, dim);
    const auto d = diagram(pts);
    std::vector<std::vector<IntVec>> from_lattice;
    for (const auto& f : d.faces())
      if (f.dim == static_cast<int>(f.coords.size()) - 1) {
        CHECK(f.is_coordinate_facet());
        from_lattice.push_back(f.vertices);
      }
    std::vector<std::vector<IntVec>> from_subsets;
    for (const auto& f : d.coordinate_facets()) {
      from_subsets.push_back(f.vertices);
      for (const auto& p : d.support().points()) {
        bool inside = true;
        for (std::size_t i = 0; i < dim; ++i)
          if ((*f.normal)[i].is_infinite() && p[i] != 0) inside = false;
        if (!inside) continue;
        const ExtNat val = f.normal->evaluate(p);
        CHECK(f.m <= val);
        CHECK((val == f.m) == f.has_point(p));
      }
    }
    std::sort(from_lattice.begin(), from_lattice.end());
    std::sort(from_subsets.begin(), from_subsets.end());
    CHECK(from_lattice == from_subsets);
    if (dim == 3) CHECK(brute_coordinate_facets(pts, dim, 12).size() <= d.coordinate_facets().size());
  }
}

TEST_CASE("s_alpha on E8") {
  const auto d = diagram(testdata::e8());
  auto vertex_sets = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<IntVec>> out;
    for (auto i : idx) out.push_back(d.faces()[i].vertices);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(vertex_sets(d.s_alpha(4)) ==
        std::vector<std::vector<IntVec>>{{{0, 3, 0}}, {{0, 3, 0}, {2, 0, 0}}, {{2, 0, 0}}});
  CHECK(d.s_alpha(5).size() == d.faces().size());
  CHECK(d.s_alpha(Rat(3, 2)).empty());
  // Monotone in alpha.
  for (int a = 0; a < 12; ++a) {
    const auto lo = d.s_alpha(Rat(a, 2));
    const auto hi = d.s_alpha(Rat(a + 1, 2));
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
  }
}

TEST_CASE("thresholds against brute-force weights") {
  // t(K) <= M(v) for every integral positive weight whose face contains K,
  // with equality attained in a small box for these supports.
  for (const auto& pts : {testdata::e8(), testdata::twosimp(), std::vector<IntVec>{{4, 0}, {1, 2}, {0, 5}}}) {
    const auto d = diagram(pts);
    const std::size_t dim = d.dim();
    std::vector<Rat> best(d.faces().size());
    std::vector<bool> seen(d.faces().size(), false);
    std::vector<long> cur(dim, 1);
    for (;;) {
      std::vector<ExtNat> e;
      for (long x : cur) e.push_back(ExtNat(x));
      const auto v = WeightVector::primitive(e);
      const Face f = d.face_of(v);
      const Rat m = d.maximal_axial(v);
      for (std::size_t k = 0; k < d.faces().size(); ++k)
        if (f.contains(d.faces()[k]) && (!seen[k] || m < best[k])) {
          best[k] = m;
          seen[k] = true;
        }
      std::size_t i = 0;
      while (i < dim && cur[i] == 16) cur[i++] = 1;
      if (i == dim) break;
      ++cur[i];
    }
    for (std::size_t k = 0; k < d.faces().size(); ++k) {
      REQUIRE(seen[k]);
      CHECK(d.threshold(k) == best[k]);
    }
  }
}

TEST_CASE("Newton numbers") {
  const auto d = diagram(testdata::e8());
  CHECK(newton_number_unsigned(gamma_minus_region(d)) == 72);
  const auto r4 = gamma_minus_region(d, d.s_alpha(4));
  CHECK(r4.pyramids.size() == 3);
  CHECK(newton_number_unsigned(r4) == 12);
  CHECK(newton_number_unsigned(gamma_minus_region(d, std::vector<Face>{})) == 0);
  CHECK(gamma_minus_region(d).pyramids.size() == 7);
  CHECK(milnor_number_kouchnirenko(d) == 8);
  CHECK(milnor_number_kouchnirenko(diagram({{2, 0}, {0, 2}})) == 1);
  CHECK(milnor_number_kouchnirenko(diagram({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 1);
  CHECK_THROWS(milnor_number_kouchnirenko(diagram(testdata::twosimp())));
  CHECK(newton_number_threshold(d) == 5);
  CHECK(newton_number_signed(gamma_minus_region(d), 3) == 8);
  CHECK(newton_number_threshold(d, NewtonNumberSign::signed_sum) == 5);
}

TEST_CASE("unsigned and signed thresholds can differ") {
  // Gradient of x^6 + x^3 y + x y^3 + y^6 is homogeneous of degree 3 near 0.
  const auto d = diagram({{6, 0}, {3, 1}, {1, 3}, {0, 6}});
  const auto r4 = gamma_minus_region(d, d.s_alpha(4));
  CHECK(newton_number_unsigned(r4) == 9);
  CHECK(newton_number_unsigned(gamma_minus_region(d)) == 33);
  CHECK(newton_number_signed(r4, 2) == 9);
  CHECK(newton_number_signed(gamma_minus_region(d), 2) == milnor_number_kouchnirenko(d));
  CHECK(newton_number_threshold(d) == 6);
  CHECK(newton_number_threshold(d, NewtonNumberSign::signed_sum) == 4);
}

TEST_CASE("pyramid volumes against direct hull volumes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = diagram(random_convenient(rng, 2 + trial % 2));
    for (const auto& cf : d.coordinate_facets()) {
      std::vector<IntVec> cone = cf.vertices;
      cone.push_back(IntVec(d.dim(), Int(0)));
      const auto hull = geom::convex_hull(cone);
      CHECK(hull.dim() == static_cast<int>(cf.coords.size()));
      CHECK(hull.volume() * factorial(cf.coords.size()) == Rat(cf.m.value() * cf.scaled_volume));
    }
  }
}

TEST_CASE("minimal face containing points") {
  const auto d = diagram(testdata::twosimp());
  const auto whole = d.minimal_face_containing({{1, 1, 0}, {0, 0, 2}});
  REQUIRE(whole);
  CHECK(d.faces()[*whole].vertices.size() == 4);
  const auto edge = d.minimal_face_containing({{0, 1, 1}, {0, 0, 2}});
  REQUIRE(edge);
  CHECK(d.faces()[*edge].dim == 1);
  CHECK(!d.minimal_face_containing({{1, 1, 1}}));
}
