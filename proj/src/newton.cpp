#include "jacnewton/newton.hpp"

#include "jacnewton/lattice_geom.hpp"
#include "jacnewton/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jacnewton {
namespace {

// Calls fn with each k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    fn(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Cofactor vector orthogonal to the rows of a (k-1) x k matrix.
IntVec cofactor_normal(const std::vector<IntVec>& rows, std::size_t k) {
  IntVec normal(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<IntVec> minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntVec m;
      m.reserve(k - 1);
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) m.push_back(row[j]);
      minor.push_back(std::move(m));
    }
    normal[c] = geom::determinant(minor);
    if (c % 2) normal[c] = -normal[c];
  }
  return normal;
}

bool make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return false;
  for (auto& x : v) x /= g;
  return true;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> nonzero_coords(const std::vector<IntVec>& pts, std::size_t dim) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i)
    if (std::any_of(pts.begin(), pts.end(), [i](const IntVec& p) { return p[i] != 0; })) out.push_back(i);
  return out;
}

std::vector<IntVec> to_int_points(const std::vector<RatVec>& pts) {
  std::vector<IntVec> out;
  for (const auto& p : pts) {
    IntVec q;
    for (const auto& x : p) q.push_back(x.get_num());
    out.push_back(std::move(q));
  }
  return out;
}

// Face data shared by both enumeration routes.
Face make_face(std::vector<IntVec> pts, std::size_t dim) {
  Face f;
  std::sort(pts.begin(), pts.end(), IntVecLess());
  const auto hull = geom::convex_hull(pts);
  f.points = std::move(pts);
  f.vertices = to_int_points(hull.vertices());
  f.coords = nonzero_coords(f.vertices, dim);
  f.dim = hull.dim();
  f.scaled_volume = Rat(hull.volume() * factorial(static_cast<unsigned long>(f.dim))).get_num();
  return f;
}

void attach_normal(Face& f, const WeightVector& v) {
  f.normal = v;
  f.m = wedge(f.points, v);
  f.n = wedge_linear(v);
}

}  // namespace

// ---------------------------------------------------------------- support

SupportSet::SupportSet(std::vector<IntVec> points) {
  if (points.empty()) throw std::invalid_argument("support is empty");
  dim_ = points.front().size();
  if (dim_ == 0) throw std::invalid_argument("support points need at least one coordinate");
  for (const auto& p : points) {
    if (p.size() != dim_) throw std::invalid_argument("support points have different lengths");
    bool zero = true;
    for (const auto& x : p) {
      if (x < 0) throw std::invalid_argument("negative exponent in support");
      if (x != 0) zero = false;
    }
    if (zero) throw std::invalid_argument("support contains the constant term");
  }
  std::sort(points.begin(), points.end(), IntVecLess());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

std::vector<IntVec> SupportSet::restricted_to(const std::vector<std::size_t>& coords) const {
  std::vector<bool> allowed(dim_, false);
  for (auto c : coords) allowed.at(c) = true;
  std::vector<IntVec> out;
  for (const auto& p : points_) {
    bool ok = true;
    for (std::size_t i = 0; i < dim_ && ok; ++i)
      if (!allowed[i] && p[i] != 0) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

Int SupportSet::multiplicity() const {
  std::optional<Int> best;
  for (const auto& p : points_) {
    Int s = 0;
    for (const auto& x : p) s += x;
    if (!best || s < *best) best = s;
  }
  return *best;
}

// ---------------------------------------------------------------- weights

WeightVector::WeightVector(std::vector<ExtNat> entries) : entries_(std::move(entries)) {
  Int g = 0;
  bool any_finite = false;
  for (const auto& e : entries_) {
    if (e.is_infinite()) continue;
    if (e.value() <= 0) throw std::invalid_argument("weight entries must be positive");
    any_finite = true;
    g = gcd(g, e.value());
  }
  if (!any_finite) throw std::invalid_argument("weight vector needs a finite entry");
  if (g != 1) throw std::invalid_argument("weight vector is not primitive");
}

WeightVector WeightVector::primitive(std::vector<ExtNat> entries) {
  Int g = 0;
  for (const auto& e : entries)
    if (e.is_finite()) g = gcd(g, e.value());
  if (g > 1)
    for (auto& e : entries)
      if (e.is_finite()) e = ExtNat(Int(e.value() / g));
  return WeightVector(std::move(entries));
}

WeightVector WeightVector::on_coords(std::size_t dim, const std::vector<std::size_t>& coords, const IntVec& values) {
  std::vector<ExtNat> e(dim, ExtNat::infinity());
  for (std::size_t k = 0; k < coords.size(); ++k) e.at(coords[k]) = ExtNat(values[k]);
  return primitive(std::move(e));
}

std::vector<std::size_t> WeightVector::sedentarity() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_infinite()) out.push_back(i);
  return out;
}

std::vector<std::size_t> WeightVector::finite_coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_finite()) out.push_back(i);
  return out;
}

ExtNat WeightVector::evaluate(const IntVec& u) const {
  if (u.size() != entries_.size()) throw std::invalid_argument("weight and point lengths differ");
  ExtNat s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s = s + entries_[i].times(u[i]);
  return s;
}

Int WeightVector::min_finite() const {
  std::optional<Int> best;
  for (const auto& e : entries_)
    if (e.is_finite() && (!best || e.value() < *best)) best = e.value();
  return *best;
}

std::string WeightVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].str();
  }
  return s + ")";
}

bool operator<(const WeightVector& a, const WeightVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

ExtNat wedge(const std::vector<IntVec>& points, const WeightVector& v) {
  ExtNat best = ExtNat::infinity();
  for (const auto& p : points) best = std::min(best, v.evaluate(p));
  return best;
}

ExtNat wedge_linear(const WeightVector& v) { return ExtNat(v.min_finite()); }

// ---------------------------------------------------------------- faces

Rat Face::maximal_axial() const {
  if (!normal) throw std::logic_error("maximal axial number of a face without a normal");
  Rat r(m.value(), n.value());
  r.canonicalize();
  return r;
}

bool Face::has_point(const IntVec& p) const { return std::binary_search(points.begin(), points.end(), p, IntVecLess()); }

bool Face::contains(const Face& other) const {
  return std::all_of(other.vertices.begin(), other.vertices.end(), [this](const IntVec& v) { return has_point(v); });
}

Face face_of(const std::vector<IntVec>& points, const WeightVector& v) {
  const ExtNat w = wedge(points, v);
  if (w.is_infinite()) return Face{};
  std::vector<IntVec> on;
  for (const auto& p : points)
    if (v.evaluate(p) == w) on.push_back(p);
  Face f = make_face(std::move(on), v.size());
  if (f.dim == static_cast<int>(f.coords.size()) - 1 && v.finite_coords() == f.coords) attach_normal(f, v);
  return f;
}

std::vector<Face> coordinate_facets_of(const std::vector<IntVec>& points, std::size_t dim) {
  std::vector<Face> out;
  for (unsigned long mask = 1; mask < (1UL << dim); ++mask) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < dim; ++i)
      if (mask & (1UL << i)) coords.push_back(i);
    std::vector<IntVec> local;  // restricted points in R^I coordinates
    std::vector<IntVec> ambient;
    for (const auto& p : points) {
      bool inside = true;
      for (std::size_t i = 0; i < dim && inside; ++i)
        if (!(mask & (1UL << i)) && p[i] != 0) inside = false;
      if (!inside) continue;
      IntVec q;
      for (auto c : coords) q.push_back(p[c]);
      local.push_back(std::move(q));
      ambient.push_back(p);
    }
    const std::size_t k = coords.size();
    std::set<IntVec, IntVecLess> seen;
    std::vector<Face> found;
    for_each_combination(local.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<IntVec> rows;
      for (std::size_t t = 1; t < k; ++t) {
        IntVec d(k);
        for (std::size_t j = 0; j < k; ++j) d[j] = local[idx[t]][j] - local[idx[0]][j];
        rows.push_back(std::move(d));
      }
      IntVec w = k == 1 ? IntVec{Int(1)} : cofactor_normal(rows, k);
      if (!make_primitive(w)) return;
      if (w[0] < 0)
        for (auto& x : w) x = -x;
      if (std::any_of(w.begin(), w.end(), [](const Int& x) { return x <= 0; })) return;
      if (seen.count(w)) return;
      seen.insert(w);
      Int b = dot(w, local.front());
      for (const auto& q : local) b = std::min(b, dot(w, q));
      std::vector<IntVec> on;
      std::vector<RatVec> on_local;
      for (std::size_t t = 0; t < local.size(); ++t)
        if (dot(w, local[t]) == b) {
          on.push_back(ambient[t]);
          on_local.push_back(to_rational(local[t]));
        }
      std::vector<RatVec> diffs;
      for (std::size_t t = 1; t < on_local.size(); ++t) {
        RatVec d(k);
        for (std::size_t j = 0; j < k; ++j) d[j] = on_local[t][j] - on_local[0][j];
        diffs.push_back(std::move(d));
      }
      if (geom::rank(diffs) + 1 != k) return;
      Face f = make_face(std::move(on), dim);
      attach_normal(f, WeightVector::on_coords(dim, coords, w));
      found.push_back(std::move(f));
    });
    std::sort(found.begin(), found.end(), [](const Face& a, const Face& b) { return *a.normal < *b.normal; });
    for (auto& f : found) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------- diagram

NewtonDiagram::NewtonDiagram(SupportSet support) : support_(std::move(support)) {
  const std::size_t dim = support_.dim();
  const auto& pts = support_.points();

  // Facets of Gamma_+: hyperplanes through k >= 1 points and dim - k rays.
  std::set<std::pair<IntVec, Int>> halfspaces;
  for (std::size_t k = 1; k <= std::min(dim, pts.size()); ++k)
    for_each_combination(pts.size(), k, [&](const std::vector<std::size_t>& pidx) {
      for_each_combination(dim, dim - k, [&](const std::vector<std::size_t>& rays) {
        std::vector<IntVec> rows;
        for (std::size_t t = 1; t < k; ++t) {
          IntVec d(dim);
          for (std::size_t j = 0; j < dim; ++j) d[j] = pts[pidx[t]][j] - pts[pidx[0]][j];
          rows.push_back(std::move(d));
        }
        for (auto r : rays) {
          IntVec e(dim, Int(0));
          e[r] = 1;
          rows.push_back(std::move(e));
        }
        IntVec w = dim == 1 ? IntVec{Int(1)} : cofactor_normal(rows, dim);
        if (!make_primitive(w)) return;
        const bool has_pos = std::any_of(w.begin(), w.end(), [](const Int& x) { return x > 0; });
        const bool has_neg = std::any_of(w.begin(), w.end(), [](const Int& x) { return x < 0; });
        if (has_pos && has_neg) return;
        if (has_neg)
          for (auto& x : w) x = -x;
        const Int b = dot(w, pts[pidx[0]]);
        for (const auto& q : pts)
          if (dot(w, q) < b) return;
        halfspaces.emplace(std::move(w), b);
      });
    });
  for (const auto& [w, b] : halfspaces) facets_.push_back({w, b});

  // Faces as closed sets of tight facets.
  auto on = [&](std::size_t h, const IntVec& p) { return dot(facets_[h].normal, p) == facets_[h].offset; };
  auto closure = [&](const std::vector<std::size_t>& point_ids, const std::vector<bool>& rays) {
    std::vector<std::size_t> tight;
    for (std::size_t h = 0; h < facets_.size(); ++h) {
      bool ok = true;
      for (auto p : point_ids)
        if (!on(h, pts[p])) {
          ok = false;
          break;
        }
      for (std::size_t i = 0; i < dim && ok; ++i)
        if (rays[i] && facets_[h].normal[i] != 0) ok = false;
      if (ok) tight.push_back(h);
    }
    return tight;
  };
  struct Raw {
    std::vector<std::size_t> points;
    std::vector<bool> rays;
  };
  auto realize = [&](const std::vector<std::size_t>& tight) {
    Raw r;
    r.rays.assign(dim, true);
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (std::all_of(tight.begin(), tight.end(), [&](std::size_t h) { return on(h, pts[p]); })) r.points.push_back(p);
    for (auto h : tight)
      for (std::size_t i = 0; i < dim; ++i)
        if (facets_[h].normal[i] != 0) r.rays[i] = false;
    return r;
  };
  std::map<std::vector<std::size_t>, Raw> lattice;
  std::vector<std::vector<std::size_t>> queue;
  for (std::size_t h = 0; h < facets_.size(); ++h) {
    const Raw r = realize({h});
    auto key = closure(r.points, r.rays);
    if (lattice.emplace(key, r).second) queue.push_back(key);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto key = queue[qi];
    const Raw base = lattice.at(key);
    for (std::size_t h = 0; h < facets_.size(); ++h) {
      if (std::binary_search(key.begin(), key.end(), h)) continue;
      Raw r;
      for (auto p : base.points)
        if (on(h, pts[p])) r.points.push_back(p);
      if (r.points.empty()) continue;
      r.rays = base.rays;
      for (std::size_t i = 0; i < dim; ++i)
        if (facets_[h].normal[i] != 0) r.rays[i] = false;
      auto next = closure(r.points, r.rays);
      const Raw full = realize(next);
      if (lattice.emplace(next, full).second) queue.push_back(next);
    }
  }

  std::vector<std::pair<Face, std::vector<std::size_t>>> compact;
  for (const auto& [key, raw] : lattice) {
    if (std::any_of(raw.rays.begin(), raw.rays.end(), [](bool b) { return b; })) continue;
    std::vector<IntVec> fp;
    for (auto p : raw.points) fp.push_back(pts[p]);
    compact.emplace_back(make_face(std::move(fp), dim), key);
  }
  std::sort(compact.begin(), compact.end(), [](const auto& a, const auto& b) {
    if (a.first.dim != b.first.dim) return a.first.dim < b.first.dim;
    return std::lexicographical_compare(a.first.vertices.begin(), a.first.vertices.end(), b.first.vertices.begin(),
                                        b.first.vertices.end(),
                                        [](const IntVec& x, const IntVec& y) { return lex_compare(x, y) < 0; });
  });

  coordinate_facets_ = coordinate_facets_of(pts, dim);
  for (auto& [face, key] : compact) {
    if (face.dim == static_cast<int>(face.coords.size()) - 1)
      for (const auto& cf : coordinate_facets_)
        if (cf.vertices == face.vertices) {
          face.normal = cf.normal;
          face.m = cf.m;
          face.n = cf.n;
        }
    faces_.push_back(std::move(face));
    tight_.push_back(std::move(key));
  }

  // Thresholds: minimize v(u0) / min_j v_j over the closed normal cone.
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& tight = tight_[f];
    std::optional<Rat> best;
    for (std::size_t i = 0; i < dim; ++i) {
      lp::Problem prob;
      for (auto h : tight) prob.objective.emplace_back(facets_[h].offset);
      for (std::size_t j = 0; j < dim; ++j) {
        lp::Constraint c;
        for (auto h : tight) c.coeffs.emplace_back(facets_[h].normal[j]);
        c.relation = j == i ? lp::Relation::equal : lp::Relation::greater_equal;
        c.rhs = 1;
        prob.constraints.push_back(std::move(c));
      }
      const auto sol = lp::minimize(prob);
      if (sol.status != lp::Status::optimal) continue;
      if (!best || sol.value < *best) best = sol.value;
    }
    if (!best) throw std::logic_error("compact face with an empty positive normal cone");
    thresholds_.push_back(*best);
  }
}

std::vector<std::size_t> NewtonDiagram::maximal_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces_.size() && maximal; ++j)
      if (j != i && faces_[j].dim > faces_[i].dim && faces_[j].contains(faces_[i])) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> NewtonDiagram::top_facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coordinate_facets_.size(); ++i)
    if (coordinate_facets_[i].coords.size() == dim()) out.push_back(i);
  return out;
}

Rat NewtonDiagram::maximal_axial(const WeightVector& v) const {
  const ExtNat w = wedge(v);
  if (w.is_infinite()) throw std::domain_error("maximal axial number of a weight with infinite minimum");
  Rat r(w.value(), wedge_linear(v).value());
  r.canonicalize();
  return r;
}

Rat NewtonDiagram::maximal_axial_diagram() const {
  if (coordinate_facets_.empty()) throw std::domain_error("diagram has no coordinate facet");
  Rat best = coordinate_facets_.front().maximal_axial();
  for (const auto& f : coordinate_facets_) best = std::max(best, f.maximal_axial());
  return best;
}

std::vector<std::size_t> NewtonDiagram::s_alpha(const Rat& alpha) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (thresholds_[i] <= alpha) out.push_back(i);
  return out;
}

std::optional<std::size_t> NewtonDiagram::minimal_face_containing(const std::vector<RatVec>& points) const {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = this->dim();
  std::vector<std::size_t> tight;
  for (std::size_t h = 0; h < facets_.size(); ++h) {
    bool all_on = true;
    for (const auto& p : points) {
      if (p.size() != dim) throw std::invalid_argument("point dimension differs from the diagram");
      Rat val = 0;
      for (std::size_t j = 0; j < dim; ++j) val += facets_[h].normal[j] * p[j];
      if (val < facets_[h].offset) return std::nullopt;  // outside Gamma_+
      if (val != facets_[h].offset) all_on = false;
    }
    if (all_on) tight.push_back(h);
  }
  if (tight.empty()) return std::nullopt;
  // The face cut out by these facets; its own tight set is the lookup key.
  std::vector<std::size_t> face_points;
  std::vector<bool> rays(dim, true);
  for (std::size_t p = 0; p < support_.points().size(); ++p)
    if (std::all_of(tight.begin(), tight.end(),
                    [&](std::size_t h) { return dot(facets_[h].normal, support_.points()[p]) == facets_[h].offset; }))
      face_points.push_back(p);
  for (auto h : tight)
    for (std::size_t i = 0; i < dim; ++i)
      if (facets_[h].normal[i] != 0) rays[i] = false;
  if (std::any_of(rays.begin(), rays.end(), [](bool b) { return b; })) return std::nullopt;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].points.size() != face_points.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < face_points.size() && same; ++k)
      same = faces_[f].points[k] == support_.points()[face_points[k]];
    if (same) return f;
  }
  return std::nullopt;
}

bool NewtonDiagram::is_convenient() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (support_.restricted_to({i}).empty()) return false;
  return true;
}

// ---------------------------------------------------------------- Newton numbers

Region gamma_minus_region(const NewtonDiagram& diagram, const std::vector<Face>& faces) {
  Region r;
  r.contains_origin = !faces.empty();
  for (const auto& cf : diagram.coordinate_facets()) {
    if (std::none_of(faces.begin(), faces.end(), [&](const Face& f) { return f.contains(cf); })) continue;
    r.pyramids.push_back({cf, Int(cf.m.value() * cf.scaled_volume)});
  }
  return r;
}

Region gamma_minus_region(const NewtonDiagram& diagram, const std::vector<std::size_t>& face_indices) {
  std::vector<Face> faces;
  for (auto i : face_indices) faces.push_back(diagram.faces().at(i));
  return gamma_minus_region(diagram, faces);
}

Region gamma_minus_region(const NewtonDiagram& diagram) { return gamma_minus_region(diagram, diagram.faces()); }

Int newton_number_unsigned(const Region& region) {
  Int total = region.contains_origin ? 1 : 0;
  for (const auto& p : region.pyramids) total += p.scaled_volume;
  return total;
}

Int newton_number_signed(const Region& region, std::size_t dim) {
  Int total = region.contains_origin ? Int(dim % 2 ? -1 : 1) : Int(0);
  for (const auto& p : region.pyramids) {
    if ((dim - p.base.coords.size()) % 2) total -= p.scaled_volume;
    else total += p.scaled_volume;
  }
  return total;
}

Int milnor_number_kouchnirenko(const NewtonDiagram& diagram) {
  if (!diagram.is_convenient()) throw std::domain_error("Kouchnirenko's formula needs a convenient diagram");
  const std::size_t dim = diagram.dim();
  Int mu = dim % 2 ? -1 : 1;
  for (const auto& cf : diagram.coordinate_facets()) {
    const Int term = cf.m.value() * cf.scaled_volume;
    if ((dim - cf.coords.size()) % 2) mu -= term;
    else mu += term;
  }
  return mu;
}

Rat newton_number_threshold(const NewtonDiagram& diagram, NewtonNumberSign sign) {
  auto nu = [&](const Region& r) {
    return sign == NewtonNumberSign::signed_sum ? newton_number_signed(r, diagram.dim()) : newton_number_unsigned(r);
  };
  const Int full = nu(gamma_minus_region(diagram));
  std::set<Rat> candidates;
  for (std::size_t i = 0; i < diagram.faces().size(); ++i) candidates.insert(diagram.threshold(i));
  for (const auto& alpha : candidates)
    if (nu(gamma_minus_region(diagram, diagram.s_alpha(alpha))) == full) return alpha;
  throw std::logic_error("Newton number never reaches its full value");
}

}  // namespace jacnewton
