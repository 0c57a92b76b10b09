#include "jacnewton/lattice_geom.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace jacnewton::geom {
namespace {

int sign(const Rat& x) { return sgn(x); }

IntVec primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

// Row-echelon basis maintained incrementally for affine-hull membership.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}

  // Reduces v against the basis; returns true (and stores it) if independent.
  bool insert(RatVec v) {
    reduce(v);
    for (std::size_t j = 0; j < n_; ++j)
      if (v[j] != 0) {
        const Rat p = v[j];
        for (auto& x : v) x /= p;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
          if (rows_[r][j] == 0) continue;
          const Rat f = rows_[r][j];
          for (std::size_t k = 0; k < n_; ++k) rows_[r][k] -= f * v[k];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    return false;
  }

  bool in_span(RatVec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(RatVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) v[k] -= f * rows_[r][k];
    }
  }
  std::size_t n_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

RatVec diff(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

// ---------------------------------------------------------------- linear algebra

Rat determinant(std::vector<RatVec> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Int determinant(const std::vector<IntVec>& rows) {
  // Bareiss fraction-free elimination.
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<IntVec> m = rows;
  Int prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return s * m[n - 1][n - 1];
}

std::size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  Echelon e(rows.front().size());
  for (auto& r : rows) e.insert(std::move(r));
  return e.size();
}

// ---------------------------------------------------------------- frames

AffineLatticeFrame::AffineLatticeFrame(RatVec origin, std::vector<IntVec> basis, std::vector<IntVec> transform)
    : origin_(std::move(origin)), basis_(std::move(basis)), transform_(std::move(transform)) {}

RatVec AffineLatticeFrame::times_transform(const RatVec& point) const {
  const std::size_t n = origin_.size();
  if (point.size() != n) throw std::invalid_argument("frame: dimension mismatch");
  RatVec d = diff(point, origin_);
  RatVec out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += d[i] * transform_[i][j];
  }
  return out;
}

RatVec AffineLatticeFrame::coordinates(const RatVec& point) const {
  RatVec full = times_transform(point);
  full.resize(rank());
  return full;
}

bool AffineLatticeFrame::contains(const RatVec& point) const {
  const RatVec full = times_transform(point);
  for (std::size_t j = rank(); j < full.size(); ++j)
    if (full[j] != 0) return false;
  return true;
}

AffineLatticeFrame saturated_frame(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("saturated_frame: empty point list");
  const std::size_t n = points.front().size();
  std::vector<IntVec> d;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != n) throw std::invalid_argument("saturated_frame: mixed dimensions");
    IntVec row = primitive_integer(diff(points[i], points.front()));
    if (std::any_of(row.begin(), row.end(), [](const Int& x) { return x != 0; })) d.push_back(std::move(row));
  }
  // Unimodular column operations D V = [H | 0], tracking V and V^{-1}.
  std::vector<IntVec> v(n, IntVec(n, Int(0)));
  std::vector<IntVec> vinv(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = vinv[i][i] = 1;
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < d.size() && pivot < n; ++r) {
    for (std::size_t c = pivot + 1; c < n; ++c) {
      const Int x = d[r][pivot];
      const Int y = d[r][c];
      if (y == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const Int xg = x / g;
      const Int yg = y / g;
      auto col_op = [&](std::vector<IntVec>& m) {
        for (auto& row : m) {
          const Int a = row[pivot];
          const Int b = row[c];
          row[pivot] = s * a + t * b;
          row[c] = -yg * a + xg * b;
        }
      };
      col_op(d);
      col_op(v);
      const IntVec ra = vinv[pivot];
      const IntVec rb = vinv[c];
      for (std::size_t k = 0; k < n; ++k) {
        vinv[pivot][k] = xg * ra[k] + yg * rb[k];
        vinv[c][k] = -t * ra[k] + s * rb[k];
      }
    }
    if (d[r][pivot] != 0) ++pivot;
  }
  std::vector<IntVec> basis(vinv.begin(), vinv.begin() + static_cast<std::ptrdiff_t>(pivot));
  return AffineLatticeFrame(points.front(), std::move(basis), std::move(v));
}

AffineLatticeFrame saturated_frame(const std::vector<IntVec>& points) {
  std::vector<RatVec> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return saturated_frame(q);
}

// ---------------------------------------------------------------- triangulation

PlacingTriangulation placing_triangulation(const std::vector<RatVec>& points) {
  PlacingTriangulation out;
  if (points.empty()) return out;
  const std::size_t n = points.front().size();
  Echelon hull_dirs(n);
  std::optional<std::size_t> first;

  auto orient = [&](const std::vector<std::size_t>& ridge, const RatVec& x) {
    const auto& piv = hull_dirs.pivots();
    const RatVec& base = points[ridge.front()];
    std::vector<RatVec> m;
    auto project = [&](const RatVec& p) {
      RatVec row(piv.size());
      for (std::size_t k = 0; k < piv.size(); ++k) row[k] = p[piv[k]] - base[piv[k]];
      return row;
    };
    for (std::size_t i = 1; i < ridge.size(); ++i) m.push_back(project(points[ridge[i]]));
    m.push_back(project(x));
    return sign(determinant(std::move(m)));
  };

  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const RatVec& p = points[idx];
    if (!first) {
      first = idx;
      out.dim = 0;
      out.simplices = {{idx}};
      continue;
    }
    if (hull_dirs.insert(diff(p, points[*first]))) {
      for (auto& s : out.simplices) s.push_back(idx);
      ++out.dim;
      continue;
    }
    if (out.dim == 0) continue;  // duplicate of the first point
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (const auto& s : out.simplices)
      for (std::size_t w = 0; w < s.size(); ++w) {
        std::vector<std::size_t> r;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != w) r.push_back(s[k]);
        std::sort(r.begin(), r.end());
        ++ridge_count[r];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& s : out.simplices)
      for (std::size_t w = 0; w < s.size(); ++w) {
        std::vector<std::size_t> r;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != w) r.push_back(s[k]);
        std::sort(r.begin(), r.end());
        if (ridge_count[r] != 1) continue;
        const int sp = orient(r, p);
        if (sp == 0 || sp != -orient(r, points[s[w]])) continue;
        r.push_back(idx);
        added.push_back(std::move(r));
      }
    for (auto& s : added) out.simplices.push_back(std::move(s));
  }
  for (auto& s : out.simplices) std::sort(s.begin(), s.end());
  return out;
}

// ---------------------------------------------------------------- polytopes

RationalPolytope::RationalPolytope(const std::vector<RatVec>& input) {
  if (input.empty()) return;
  ambient_dim_ = input.front().size();
  std::vector<RatVec> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  frame_ = saturated_frame(pts);
  dim_ = static_cast<int>(frame_.rank());
  std::vector<RatVec> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(frame_.coordinates(p));
  if (dim_ == 0) {
    vertices_ = {pts.front()};
    volume_ = 1;
    return;
  }
  const PlacingTriangulation tri = placing_triangulation(local);
  volume_ = 0;
  for (const auto& s : tri.simplices) {
    std::vector<RatVec> m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(diff(local[s[i]], local[s[0]]));
    volume_ += abs(determinant(std::move(m)));
  }
  volume_ /= Rat(factorial(static_cast<unsigned long>(dim_)));

  // Boundary ridges grouped by supporting hyperplane give the facets.
  std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> ridges;  // ridge -> (count, opposite)
  for (const auto& s : tri.simplices)
    for (std::size_t w = 0; w < s.size(); ++w) {
      std::vector<std::size_t> r;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != w) r.push_back(s[k]);
      auto& e = ridges[r];
      ++e.first;
      e.second = s[w];
    }
  std::map<std::pair<IntVec, Rat>, std::set<std::size_t>> hyperplanes;
  const std::size_t k = static_cast<std::size_t>(dim_);
  for (const auto& [r, e] : ridges) {
    if (e.first != 1) continue;
    // Normal: cofactors of the (k-1) x k difference matrix.
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < r.size(); ++i) rows.push_back(diff(local[r[i]], local[r[0]]));
    RatVec normal(k);
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<RatVec> minor;
      for (const auto& row : rows) {
        RatVec mr;
        for (std::size_t j = 0; j < k; ++j)
          if (j != c) mr.push_back(row[j]);
        minor.push_back(std::move(mr));
      }
      normal[c] = ((c % 2) ? Rat(-1) : Rat(1)) * determinant(std::move(minor));
    }
    IntVec prim = primitive_integer(normal);
    Rat offset = 0;
    Rat opp = 0;
    for (std::size_t j = 0; j < k; ++j) {
      offset += prim[j] * local[r[0]][j];
      opp += prim[j] * local[e.second][j];
    }
    if (opp > offset) {  // orient outward
      for (auto& x : prim) x = -x;
      offset = -offset;
    }
    auto& members = hyperplanes[{prim, offset}];
    members.insert(r.begin(), r.end());
  }
  // A point is a vertex iff the normals of the facets through it span R^k.
  std::vector<std::size_t> vertex_ids;
  for (std::size_t i = 0; i < local.size(); ++i) {
    std::vector<RatVec> normals;
    for (const auto& [h, members] : hyperplanes) {
      Rat val = 0;
      for (std::size_t j = 0; j < k; ++j) val += h.first[j] * local[i][j];
      if (val == h.second) normals.push_back(to_rational(h.first));
    }
    if (rank(normals) == k) vertex_ids.push_back(i);
  }
  std::map<std::size_t, std::size_t> reindex;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    reindex[vertex_ids[i]] = i;
    vertices_.push_back(pts[vertex_ids[i]]);
  }
  for (const auto& [h, members] : hyperplanes) {
    std::vector<std::size_t> f;
    for (std::size_t i : vertex_ids) {
      Rat val = 0;
      for (std::size_t j = 0; j < k; ++j) val += h.first[j] * local[i][j];
      if (val == h.second) f.push_back(reindex[i]);
    }
    facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

std::vector<std::vector<std::size_t>> RationalPolytope::facets() const { return facets_; }

RationalPolytope convex_hull(const std::vector<RatVec>& points) { return RationalPolytope(points); }

RationalPolytope convex_hull(const std::vector<IntVec>& points) {
  std::vector<RatVec> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return RationalPolytope(q);
}

Rat normalized_volume(const RationalPolytope& polytope) {
  if (polytope.empty()) return 0;
  return polytope.volume();
}

Rat volume_in_dimension(const RationalPolytope& polytope, int s) {
  if (polytope.empty() || polytope.dim() < s) return 0;
  if (polytope.dim() > s) throw std::invalid_argument("volume_in_dimension: body does not fit in an s-plane");
  return polytope.volume();
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.empty() || q.empty()) return RationalPolytope();
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RatVec> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVec c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
      sums.push_back(std::move(c));
    }
  return RationalPolytope(sums);
}

RationalPolytope dilate(const RationalPolytope& p, const Int& factor) {
  std::vector<RatVec> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return RationalPolytope(pts);
}

Rat mixed_volume(const std::vector<WeightedBody>& bodies, unsigned s) {
  unsigned total = 0;
  for (const auto& b : bodies) total += b.multiplicity;
  if (total != s) throw std::invalid_argument("mixed_volume: multiplicities must sum to s");
  if (s == 0) return 1;
  std::vector<WeightedBody> active;
  for (const auto& b : bodies) {
    if (b.multiplicity == 0) continue;
    if (b.body.empty()) throw std::invalid_argument("mixed_volume: empty body");
    active.push_back(b);
  }
  // Sum over 0 <= j_i <= k_i (not all zero) of
  //   (-1)^{s - sum j} prod C(k_i, j_i) Vol_s(sum j_i K_i).
  std::vector<unsigned> j(active.size(), 0);
  Rat acc = 0;
  for (;;) {
    std::size_t pos = 0;
    while (pos < j.size() && j[pos] == active[pos].multiplicity) j[pos++] = 0;
    if (pos == j.size()) break;
    ++j[pos];
    unsigned used = 0;
    Int weight = 1;
    std::optional<RationalPolytope> sum;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (j[i] == 0) continue;
      used += j[i];
      weight *= binomial(active[i].multiplicity, j[i]);
      RationalPolytope part = dilate(active[i].body, Int(j[i]));
      sum = sum ? minkowski_sum(*sum, part) : part;
    }
    const Rat vol = volume_in_dimension(*sum, static_cast<int>(s));
    if ((s - used) % 2) acc -= weight * vol;
    else acc += weight * vol;
  }
  return acc / Rat(factorial(s));
}

std::vector<IntVec> lattice_points_in(const IntVec& lo, const IntVec& hi,
                                      const std::function<bool(const IntVec&)>& member) {
  if (lo.size() != hi.size()) throw std::invalid_argument("lattice_points_in: box corners differ in length");
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return out;
  IntVec p = lo;
  for (;;) {
    if (member(p)) out.push_back(p);
    std::size_t i = p.size();
    while (i > 0) {
      --i;
      if (p[i] < hi[i]) {
        ++p[i];
        for (std::size_t k = i + 1; k < p.size(); ++k) p[k] = lo[k];
        break;
      }
      if (i == 0) return out;
    }
    if (p.empty()) return out;
  }
}

}  // namespace jacnewton::geom
