#include "jacnewton/jacobian.hpp"

#include "jacnewton/lattice_geom.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace jacnewton {
namespace {

Int to_integral(const Rat& x, const char* what) {
  if (x.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer: " + to_string(x));
  return x.get_num();
}

geom::RationalPolytope linear_face(const WeightVector& v) {
  const Int low = v.min_finite();
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].is_finite() && v[i].value() == low) {
      IntVec e(v.size(), Int(0));
      e[i] = 1;
      pts.push_back(std::move(e));
    }
  return geom::convex_hull(pts);
}

std::vector<IntVec> product_with_linear(const std::vector<IntVec>& pts) {
  std::vector<IntVec> out;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i) {
      IntVec q = p;
      q[i] += 1;
      out.push_back(std::move(q));
    }
  std::sort(out.begin(), out.end(), IntVecLess());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Rat w_mixed(const NewtonDiagram& diagram, const WeightVector& v, std::size_t level) {
  const std::size_t n = diagram.n();
  if (level > n) throw std::out_of_range("level must lie in 0..n");
  if (v.size() != diagram.dim()) throw std::invalid_argument("weight length differs from the diagram");
  const std::size_t sed = v.sedentarity().size();
  const unsigned s = static_cast<unsigned>(n - sed);
  const unsigned c = static_cast<unsigned>(n - level);
  const Face kf_face = diagram.face_of(v);
  if (kf_face.empty()) return 0;
  const auto kf = geom::convex_hull(kf_face.points);
  const Rat sfact(factorial(s));
  if (c == 0) return sfact * geom::volume_in_dimension(kf, static_cast<int>(s));
  const auto kg = linear_face(v);
  Rat total = 0;
  for (unsigned k = c; k <= s; ++k)
    total += Rat(binomial(k - 1, c - 1)) * sfact * geom::mixed_volume({{kf, s - k}, {kg, k}}, s);
  return total;
}

KNInt aj_via_volume(const NewtonDiagram& diagram) {
  const std::size_t n = diagram.n();
  KNInt out;
  for (const auto& f : diagram.coordinate_facets()) {
    const std::size_t s = f.coords.size() - 1;
    KNInt term = KNInt::from_pair(f.m, f.n).scale(f.scaled_volume);
    if ((n - s) % 2) out -= term;
    else out += term;
  }
  return out;
}

KNInt aj_via_mixed_volume(const NewtonDiagram& diagram, std::size_t level) {
  const std::size_t n = diagram.n();
  if (level > n) throw std::out_of_range("level must lie in 0..n");
  KNInt out;
  for (const auto& face : coordinate_facets_of(product_with_linear(diagram.support().points()), diagram.dim())) {
    const WeightVector& v = *face.normal;
    const Rat w = w_mixed(diagram, v, level);
    if (w == 0) continue;
    const std::size_t s = n - v.sedentarity().size();
    const ExtNat m = diagram.wedge(v);
    KNInt term = KNInt::from_pair(m, wedge_linear(v)).scale(to_integral(w, "W"));
    if ((n - s) % 2) out -= term;
    else out += term;
  }
  return out;
}

KNInt aj(const NewtonDiagram& diagram, std::size_t level) {
  if (level > diagram.n()) throw std::out_of_range("level must lie in 0..n");
  return level == diagram.n() ? aj_via_volume(diagram) : aj_via_mixed_volume(diagram, level);
}

KNInt jacobian_polygon(const NewtonDiagram& diagram, std::size_t level) {
  KNInt out = aj(diagram, level);
  if (level > 0) out += aj(diagram, level - 1);
  return out;
}

LevelPolygonSet level_polygons(const NewtonDiagram& diagram) {
  LevelPolygonSet set;
  set.n = diagram.n();
  for (std::size_t d = 0; d <= set.n; ++d) set.aj.push_back(aj(diagram, d));
  return set;
}

LojResult lojasiewicz(const NewtonDiagram& diagram) { return lojasiewicz(diagram, aj(diagram, diagram.n())); }

LojResult lojasiewicz(const NewtonDiagram& diagram, const KNInt& top_aj) {
  LojResult r;
  if (top_aj.is_zero()) {
    r.value = 1;
    r.morse_exception = true;
    return r;
  }
  const Slope deg = top_aj.degree().slope();
  r.value = deg.value() - 1;
  // Prefer the largest-dimensional facet attaining the degree.
  for (const auto& f : diagram.coordinate_facets())
    if (f.maximal_axial() == deg.value() && (!r.witness_facet || f.dim > r.witness_facet->dim)) r.witness_facet = f;
  return r;
}

std::size_t generic_hessian_rank(const SupportSet& support) {
  const std::size_t dim = support.dim();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coeff(1, 1L << 40);
  std::vector<RatVec> h(dim, RatVec(dim, Rat(0)));
  for (const auto& p : support.points()) {
    Int deg = 0;
    for (const auto& x : p) deg += x;
    if (deg != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dim; ++i)
      for (Int k = 0; k < p[i]; ++k) idx.push_back(i);
    const Rat a(coeff(rng));
    if (idx[0] == idx[1]) h[idx[0]][idx[0]] += 2 * a;
    else {
      h[idx[0]][idx[1]] += a;
      h[idx[1]][idx[0]] += a;
    }
  }
  return geom::rank(h);
}

bool PropertyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

PropertyReport property_report(const NewtonDiagram& diagram) { return property_report(diagram, level_polygons(diagram)); }

PropertyReport property_report(const NewtonDiagram& diagram, const LevelPolygonSet& levels) {
  PropertyReport report;
  const std::size_t n = levels.n;
  const std::size_t r = generic_hessian_rank(diagram.support());
  const Rat mult(diagram.multiplicity());

  // Sample points of alpha where truncations or the conditions can change.
  auto samples = [](std::initializer_list<const KNInt*> elems) {
    std::set<Rat> brk;
    for (const auto* e : elems)
      for (const auto& [a, c] : e->terms())
        if (a.is_finite()) brk.insert(a.value());
    std::set<Rat> out;
    if (brk.empty()) {
      out.insert(Rat(1));
      return out;
    }
    out.insert(*brk.begin() / 2);
    out.insert(*brk.rbegin() + 1);
    std::optional<Rat> prev;
    for (const auto& b : brk) {
      out.insert(b);
      if (prev) out.insert((*prev + b) / 2);
      prev = b;
    }
    return out;
  };
  auto fail = [](PropertyCheck& c, std::string msg) {
    if (c.passed) c.detail = std::move(msg);
    c.passed = false;
  };

  const KNInt& top = levels.aj[n];
  {
    PropertyCheck c{"upper_half", true, ""};
    for (const auto& alpha : samples({&top})) {
      const auto h = top.truncate_geq(Slope(alpha)).height();
      if (!h.is_finite() || h.value < 0) fail(c, "h(AJ_>=" + to_string(alpha) + ") = " + h.str());
    }
    report.checks.push_back(std::move(c));
  }

  for (std::size_t d = 0; d <= n; ++d) {
    const KNInt& a = levels.aj[d];
    const KNInt j = levels.j(d);
    const std::string tag = "[" + std::to_string(d + 1) + "]";
    {
      PropertyCheck c{"effective" + tag, true, ""};
      for (const auto& [alpha, coeff] : j.terms()) {
        if (coeff < 0) fail(c, "negative coefficient at {" + alpha.str() + "}");
        if (!alpha.is_finite() || alpha.value() < mult) fail(c, "slope {" + alpha.str() + "} below the multiplicity");
      }
      report.checks.push_back(std::move(c));
    }
    // The remaining inequalities need d even or d + 1 above the Hessian rank.
    if (d % 2 == 1 && d + 1 <= r) continue;
    {
      PropertyCheck c{"length_truncation" + tag, true, ""};
      const Degree dj = j.degree();
      for (const auto& alpha : samples({&a, &j})) {
        const auto len = a.truncate_geq(Slope(alpha)).length();
        const bool above = dj.is_neg_infinity() || Degree(Slope(alpha)) > dj;
        if (!len.is_finite() || len.value < 0 || (len.value == 0) != above)
          fail(c, "l(AJ_>=" + to_string(alpha) + ") = " + len.str() + " with deg J = " + dj.str());
      }
      report.checks.push_back(std::move(c));
    }
    {
      PropertyCheck c{"leading_coefficient" + tag, true, ""};
      if (a.is_zero()) fail(c, "AJ is zero");
      else if (a.leading_coeff() <= 0) fail(c, "lc = " + to_string(a.leading_coeff()));
      report.checks.push_back(std::move(c));
    }
    {
      PropertyCheck c{"degree_equality" + tag, true, ""};
      if (!(a.degree() == j.degree())) fail(c, "deg AJ = " + a.degree().str() + ", deg J = " + j.degree().str());
      report.checks.push_back(std::move(c));
    }
    if (d >= 1) {
      PropertyCheck c{"degree_monotone" + tag, true, ""};
      const KNInt below = levels.j(d - 1);
      if (j.degree() < below.degree()) fail(c, "deg J drops from " + below.degree().str() + " to " + j.degree().str());
      report.checks.push_back(std::move(c));
    }
  }

  for (std::size_t d = 1; d <= n; ++d) {
    const KNInt upper = levels.j(d);
    const KNInt lower = levels.j(d - 1);
    const std::string tag = "[" + std::to_string(d + 1) + "]";
    PropertyCheck hlh{"hlh" + tag, true, ""};
    PropertyCheck mono{"mono" + tag, true, ""};
    const Degree du = upper.degree();
    for (const auto& alpha : samples({&upper, &lower})) {
      const KNInt u = upper.truncate_geq(Slope(alpha));
      const KNInt l = lower.truncate_geq(Slope(alpha));
      const Int hu = u.height().value, lu = u.length().value;
      const Int hl = l.height().value, ll = l.length().value;
      if (hu < ll - hl) fail(hlh, "alpha = " + to_string(alpha));
      const Rat lhs(lu);
      const Rat rhs = (alpha - 1) * ll;
      const bool strict = !du.is_neg_infinity() && Degree(Slope(alpha)) < du;
      if (lhs < rhs || (strict && lhs == rhs)) fail(mono, "alpha = " + to_string(alpha));
    }
    report.checks.push_back(std::move(hlh));
    report.checks.push_back(std::move(mono));
  }

  if (diagram.is_convenient()) {
    PropertyCheck c{"telescoping", true, ""};
    const Int mu = milnor_number_kouchnirenko(diagram);
    const Int expected = mu + (n % 2 ? -1 : 1);
    const auto len = top.length();
    if (!len.is_finite() || len.value != expected)
      fail(c, "l(AJ) = " + len.str() + ", mu + (-1)^n = " + to_string(expected));
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace jacnewton
