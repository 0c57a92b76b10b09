#include "jacnewton/kn_group.hpp"

namespace jacnewton {

Slope::Slope(const Int& m, const Int& n) : kind_(Kind::finite) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("finite slope needs m, n > 0");
  const Int g = gcd(m, n);
  num_ = m / g;
  den_ = n / g;
}

Slope::Slope(const Rat& value) : Slope(value.get_num(), value.get_den()) {}

Slope Slope::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "inf") return infinity();
  return Slope(parse_rational(text));
}

Rat Slope::value() const {
  if (kind_ != Kind::finite) throw std::domain_error("value() of slope marker " + str());
  return Rat(num_, den_);
}

std::string Slope::str() const {
  switch (kind_) {
    case Kind::zero: return "0";
    case Kind::infinity: return "inf";
    default: return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
  }
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != Slope::Kind::finite) return std::strong_ordering::equal;
  const int c = cmp(Int(a.num_ * b.den_), Int(b.num_ * a.den_));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace detail {

std::vector<std::pair<Int, Int>> newton_polygon_vertices(std::vector<std::pair<Int, Int>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Walk by increasing x; a point survives only if its y is strictly below
  // every point to its left, then keep the lower convex chain.
  std::vector<std::pair<Int, Int>> staircase;
  for (const auto& p : points) {
    if (!staircase.empty() && staircase.back().first == p.first) continue;  // same x, larger y
    if (!staircase.empty() && p.second >= staircase.back().second) continue;
    staircase.push_back(p);
  }
  std::vector<std::pair<Int, Int>> hull;
  for (const auto& p : staircase) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Remove b unless a -> b -> p turns counter-clockwise.
      const Int cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

bool is_integral(const Int&) { return true; }
bool is_integral(const Rat& x) { return x.get_den() == 1; }
Int to_int(const Int& x) { return x; }
Int to_int(const Rat& x) { return x.get_num(); }

}  // namespace detail
}  // namespace jacnewton
