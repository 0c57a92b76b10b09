#include "doctest.h"
#include "jacnewton/kn_group.hpp"

using namespace jacnewton;

namespace {

KNInt e8_aj() {
  return KNInt::generator(Slope(5, 1), 2) - KNInt::generator(Slope(3, 1)) + KNInt::generator(Slope(2, 1));
}

}  // namespace

TEST_CASE("from_pair collapses common factors") {
  CHECK(KNInt::from_pair(30, 6) == KNInt::generator(Slope(5, 1), 6));
  CHECK(KNInt::from_pair(2, 1) == KNInt::generator(Slope(2, 1)));
  CHECK(KNInt::from_pair(1, ExtNat::infinity()) == KNInt::generator(Slope::zero()));
  CHECK(KNInt::from_pair(ExtNat::infinity(), 3) == KNInt::generator(Slope::infinity(), 3));
  CHECK_THROWS(KNInt::from_pair(ExtNat::infinity(), ExtNat::infinity()));
  CHECK_THROWS(KNInt::from_pair(0, 0));
  for (long c = 1; c <= 6; ++c)
    for (long m = 1; m <= 7; ++m)
      for (long n = 1; n <= 7; ++n) CHECK(KNInt::from_pair(c * m, c * n) == KNInt::from_pair(m, n).scale(c));
}

TEST_CASE("group operations") {
  const auto five = KNInt::generator(Slope(5, 1), 2);
  CHECK((five + (-five)).is_zero());
  CHECK(KNInt::generator(Slope(3, 1)) + KNInt::from_pair(6, 2) == KNInt::generator(Slope(3, 1), 3));
  const KNRat half = KNInt::from_pair(2, 1).cast<Rat>().scale(Rat(1, 2));
  CHECK(half.coeff(Slope(2, 1)) == Rat(1, 2));
}

TEST_CASE("support, degree, leading coefficient") {
  const KNInt a = e8_aj();
  CHECK(a.degree() == Degree(Slope(5, 1)));
  CHECK(a.leading_coeff() == 2);
  CHECK(a.support() == std::set<Slope>{Slope(2, 1), Slope(3, 1), Slope(5, 1)});
  CHECK(KNInt().degree().is_neg_infinity());
  CHECK_THROWS(KNInt().leading_coeff());
  CHECK(a.str() == "2{5} - {3} + {2}");
  CHECK((-a).str() == "-2{5} + {3} - {2}");
}

TEST_CASE("truncation") {
  const KNInt a = e8_aj();
  CHECK(a.truncate_geq(Slope(3, 1)) == KNInt::generator(Slope(5, 1), 2) - KNInt::generator(Slope(3, 1)));
  CHECK(a.truncate_geq(Slope::zero()) == a);
  CHECK(a.truncate_geq(Slope(6, 1)).is_zero());
  CHECK(a.truncate_geq(Slope(3, 1)).truncate_geq(Slope(4, 1)) == a.truncate_geq(Slope(4, 1)));
}

TEST_CASE("height and length") {
  const KNInt a = e8_aj();
  CHECK(a.length().value == 9);
  CHECK(a.height().value == 2);
  CHECK(KNInt::generator(Slope::zero()).height().kind == Extended<Int>::Kind::pos_infinity);
  CHECK(KNInt::generator(Slope::infinity(), -1).length().kind == Extended<Int>::Kind::neg_infinity);
  const KNInt b = KNInt::from_pair(7, 3) + KNInt::from_pair(4, 4);
  CHECK((a + b).length().value == a.length().value + b.length().value);
  CHECK((a - b).height().value == a.height().value - b.height().value);
}

TEST_CASE("virtual vertices") {
  using P = std::pair<Int, Int>;
  CHECK(e8_aj().virtual_vertices() == std::vector<P>{{0, 2}, {2, 1}, {-1, 2}, {9, 0}});
  CHECK(KNInt::generator(Slope(2, 1)).virtual_vertices() == std::vector<P>{{0, 1}, {2, 0}});
  CHECK(KNInt().virtual_vertices() == std::vector<P>{{0, 0}});
  CHECK_THROWS(KNInt::generator(Slope::zero()).virtual_vertices());
}

TEST_CASE("polygon realization") {
  using P = std::pair<Int, Int>;
  const KNInt two_three = KNInt::generator(Slope(2, 1)) + KNInt::generator(Slope(3, 1));
  CHECK(two_three.realize_polygon() == std::vector<P>{{0, 2}, {2, 1}, {5, 0}});
  CHECK(KNInt::from_pair(6, 2).realize_polygon() == std::vector<P>{{0, 2}, {6, 0}});
  CHECK(KNInt().realize_polygon() == std::vector<P>{{0, 0}});
  CHECK_THROWS(e8_aj().realize_polygon());

  // Semigroup faithfulness against an independent Minkowski sum of vertex lists.
  const KNInt a = KNInt::from_pair(3, 2) + KNInt::from_pair(1, 4);
  const KNInt b = KNInt::from_pair(5, 1) + KNInt::from_pair(2, 2);
  std::vector<P> sum;
  for (const auto& p : a.realize_polygon())
    for (const auto& q : b.realize_polygon()) sum.emplace_back(p.first + q.first, p.second + q.second);
  CHECK((a + b).realize_polygon() == detail::newton_polygon_vertices(sum));
  CHECK((a + b).realize_polygon() == (a + b).virtual_vertices());
}
