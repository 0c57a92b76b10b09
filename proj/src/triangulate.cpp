#include "jacnewton/triangulate.hpp"

#include "jacnewton/jacobian.hpp"
#include "jacnewton/lattice_geom.hpp"
#include "jacnewton/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jacnewton {
namespace {

bool vertices_less(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const IntVec& x, const IntVec& y) { return lex_compare(x, y) < 0; });
}

std::vector<RatVec> rational(const std::vector<IntVec>& pts) {
  std::vector<RatVec> out;
  for (const auto& p : pts) out.push_back(to_rational(p));
  return out;
}

bool affinely_independent(const std::vector<IntVec>& pts) {
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return geom::rank(diffs) == diffs.size();
}

// conv(a) meets conv(b) exactly in conv(a cap b).
bool intersect_properly(const Simplex& a, const Simplex& b) {
  const std::size_t dim = a.vertices.front().size();
  const std::size_t na = a.vertices.size();
  const std::size_t nb = b.vertices.size();
  lp::Problem prob;
  prob.objective.assign(na + nb, Rat(0));
  for (std::size_t i = 0; i < na; ++i)
    if (!std::binary_search(b.vertices.begin(), b.vertices.end(), a.vertices[i], IntVecLess())) prob.objective[i] = -1;
  if (std::all_of(prob.objective.begin(), prob.objective.end(), [](const Rat& x) { return x == 0; })) return true;
  for (std::size_t k = 0; k < dim; ++k) {
    lp::Constraint c{RatVec(na + nb, Rat(0)), lp::Relation::equal, 0};
    for (std::size_t i = 0; i < na; ++i) c.coeffs[i] = a.vertices[i][k];
    for (std::size_t j = 0; j < nb; ++j) c.coeffs[na + j] = -b.vertices[j][k];
    prob.constraints.push_back(std::move(c));
  }
  lp::Constraint sa{RatVec(na + nb, Rat(0)), lp::Relation::equal, 1};
  lp::Constraint sb{RatVec(na + nb, Rat(0)), lp::Relation::equal, 1};
  for (std::size_t i = 0; i < na; ++i) sa.coeffs[i] = 1;
  for (std::size_t j = 0; j < nb; ++j) sb.coeffs[na + j] = 1;
  prob.constraints.push_back(std::move(sa));
  prob.constraints.push_back(std::move(sb));
  const auto sol = lp::minimize(prob);
  return sol.status == lp::Status::infeasible || sol.value == 0;
}

bool on_facet(const Face& f, const IntVec& p) {
  const auto& v = *f.normal;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (v[i].is_infinite() && p[i] != 0) return false;
  return v.evaluate(p) == f.m;
}

bool facet_contains(const Face& f, const Simplex& s) {
  return std::all_of(s.vertices.begin(), s.vertices.end(), [&](const IntVec& p) { return on_facet(f, p); });
}

}  // namespace

// ---------------------------------------------------------------- simplices

Simplex::Simplex(std::vector<IntVec> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  std::sort(vertices.begin(), vertices.end(), IntVecLess());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("repeated vertex in simplex " + str());
  for (const auto& p : vertices)
    if (p.size() != vertices.front().size()) throw std::invalid_argument("simplex vertices have different lengths");
}

std::vector<std::size_t> Simplex::coords() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.front().size(); ++i)
    if (std::any_of(vertices.begin(), vertices.end(), [i](const IntVec& p) { return p[i] != 0; })) out.push_back(i);
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(), vertices.end(), IntVecLess());
}

std::string Simplex::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t k = 0; k < vertices[i].size(); ++k) {
      if (k) s += ",";
      s += to_string(vertices[i][k]);
    }
    s += ")";
  }
  return s + "]";
}

bool operator<(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return vertices_less(a.vertices, b.vertices);
}

// ---------------------------------------------------------------- triangulations

Triangulation::Triangulation(std::vector<Simplex> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Triangulation Triangulation::closure_of(const std::vector<Simplex>& cells) {
  std::set<Simplex> all;
  for (const auto& c : cells) {
    const std::size_t k = c.vertices.size();
    if (k > 20) throw std::invalid_argument("simplex with too many vertices");
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      std::vector<IntVec> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) sub.push_back(c.vertices[i]);
      all.insert(Simplex(std::move(sub)));
    }
  }
  return Triangulation(std::vector<Simplex>(all.begin(), all.end()));
}

std::optional<std::size_t> Triangulation::find(const Simplex& s) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), s);
  if (it == cells_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<std::size_t> Triangulation::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < cells_.size() && maximal; ++j)
      if (cells_[j].dim() > cells_[i].dim() && cells_[i].is_face_of(cells_[j])) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> CheckedTriangulation::coordinate_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coordinate_facet_.size(); ++i)
    if (coordinate_facet_[i]) out.push_back(i);
  return out;
}

CheckedTriangulation validate(const Triangulation& tri, const NewtonDiagram& diagram) {
  const auto& cells = tri.cells();
  if (cells.empty()) throw TriangulationError("triangulation has no cells");
  for (const auto& c : cells) {
    if (c.vertices.front().size() != diagram.dim())
      throw TriangulationError("cell " + c.str() + " has the wrong number of coordinates");
    if (!affinely_independent(c.vertices)) throw TriangulationError("cell " + c.str() + " is degenerate");
  }
  for (const auto& c : cells)
    for (std::size_t k = 0; c.vertices.size() > 1 && k < c.vertices.size(); ++k) {
      std::vector<IntVec> sub = c.vertices;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!tri.find(Simplex(std::move(sub))))
        throw TriangulationError("not closed under faces: a facet of " + c.str() + " is missing");
    }

  const auto maximal = tri.maximal_cells();
  std::map<std::size_t, Rat> covered;  // compact face -> volume of top-dimensional cells in it
  for (auto i : maximal) {
    const auto face = diagram.minimal_face_containing(rational(cells[i].vertices));
    if (!face) throw TriangulationError("cell " + cells[i].str() + " does not lie in a compact face of the diagram");
    const auto& k = diagram.faces()[*face];
    if (k.dim == cells[i].dim()) covered[*face] += geom::convex_hull(cells[i].vertices).volume();
  }
  for (std::size_t a = 0; a < maximal.size(); ++a)
    for (std::size_t b = a + 1; b < maximal.size(); ++b)
      if (!intersect_properly(cells[maximal[a]], cells[maximal[b]]))
        throw TriangulationError("cells " + cells[maximal[a]].str() + " and " + cells[maximal[b]].str() +
                                 " do not meet in a common face");
  for (auto f : diagram.maximal_faces()) {
    const auto& k = diagram.faces()[f];
    const Rat want = geom::convex_hull(k.vertices).volume();
    const auto it = covered.find(f);
    const Rat got = it == covered.end() ? Rat(0) : it->second;
    if (got != want) {
      std::string verts;
      for (const auto& v : k.vertices) verts += Simplex({v}).str();
      throw TriangulationError("face with vertices " + verts + " is covered with volume " + to_string(got) + " of " +
                               to_string(want));
    }
  }

  CheckedTriangulation out;
  out.diagram_ = &diagram;
  out.tri_ = tri;
  out.coordinate_facet_.assign(cells.size(), std::nullopt);
  const auto& cfs = diagram.coordinate_facets();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto coords = cells[i].coords();
    if (cells[i].dim() != static_cast<int>(coords.size()) - 1) continue;
    for (std::size_t f = 0; f < cfs.size(); ++f)
      if (cfs[f].coords == coords && facet_contains(cfs[f], cells[i])) {
        out.coordinate_facet_[i] = f;
        break;
      }
  }
  return out;
}

Triangulation default_triangulation(const NewtonDiagram& diagram) {
  std::vector<Simplex> top;
  for (auto f : diagram.maximal_faces()) {
    const auto& verts = diagram.faces()[f].vertices;  // lexicographic
    const auto frame = geom::saturated_frame(verts);
    std::vector<RatVec> local;
    for (const auto& v : verts) local.push_back(frame.coordinates(to_rational(v)));
    for (const auto& s : geom::placing_triangulation(local).simplices) {
      std::vector<IntVec> pts;
      for (auto idx : s) pts.push_back(verts[idx]);
      top.emplace_back(std::move(pts));
    }
  }
  auto tri = Triangulation::closure_of(top);
  validate(tri, diagram);
  return tri;
}

// ---------------------------------------------------------------- Cap and CN

Int cap(const std::optional<Simplex>& s) {
  if (!s) return 1;
  const auto& verts = s->vertices;
  const std::size_t k = verts.size();
  std::vector<IntVec> with_origin{IntVec(verts.front().size(), Int(0))};
  with_origin.insert(with_origin.end(), verts.begin(), verts.end());
  const auto frame = geom::saturated_frame(with_origin);
  if (frame.rank() != k) throw std::invalid_argument("Cap needs linearly independent vertices");
  // B: vertex coordinates in a basis of the saturated lattice. The lattice
  // points of the span have lambda in the group generated by the rows of
  // B^{-1}; count its elements mod Z^k with every entry in (0, 1).
  std::vector<RatVec> b;
  for (const auto& v : verts) b.push_back(frame.coordinates(to_rational(v)));
  std::vector<RatVec> inv(k, RatVec(k, Rat(0)));
  {
    std::vector<RatVec> m = b;
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[c]);
      std::swap(inv[p], inv[c]);
      const Rat piv = m[c][c];
      for (std::size_t j = 0; j < k; ++j) {
        m[c][j] /= piv;
        inv[c][j] /= piv;
      }
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const Rat f = m[r][c];
        for (std::size_t j = 0; j < k; ++j) {
          m[r][j] -= f * m[c][j];
          inv[r][j] -= f * inv[c][j];
        }
      }
    }
  }
  auto frac = [](RatVec v) {
    for (auto& x : v) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      x -= fl;
    }
    return v;
  };
  std::set<RatVec> group{RatVec(k, Rat(0))};
  std::vector<RatVec> queue{RatVec(k, Rat(0))};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : inv) {
      RatVec next(k);
      for (std::size_t j = 0; j < k; ++j) next[j] = queue[q][j] + g[j];
      next = frac(std::move(next));
      if (group.insert(next).second) queue.push_back(std::move(next));
    }
  Int count = 0;
  for (const auto& lam : group)
    if (std::all_of(lam.begin(), lam.end(), [](const Rat& x) { return x > 0; })) ++count;
  return count;
}

KNRat cn(const CheckedTriangulation& tri, std::optional<std::size_t> t0) {
  const auto& cells = tri.cells();
  if (t0 && *t0 >= cells.size()) throw std::out_of_range("cell index out of range");
  const std::size_t n = tri.diagram().n();
  KNRat out;
  for (auto s : tri.coordinate_cells()) {
    if (t0 && !cells[*t0].is_face_of(cells[s])) continue;
    const Face& f = tri.diagram().coordinate_facets()[*tri.coordinate_facet(s)];
    const std::size_t dim = static_cast<std::size_t>(cells[s].dim());
    Rat c(1, f.m.value());
    c.canonicalize();
    if ((n - dim) % 2) c = -c;
    out += KNInt::from_pair(f.m, f.n).cast<Rat>().scale(c);
  }
  return out;
}

KNRat aj_via_cap(const CheckedTriangulation& tri) {
  KNRat out = cn(tri, std::nullopt).scale(Rat(cap(std::nullopt)));
  for (std::size_t i = 0; i < tri.cells().size(); ++i) {
    const Int c = cap(tri.cells()[i]);
    if (c != 0) out += cn(tri, i).scale(Rat(c));
  }
  return out;
}

std::vector<std::size_t> t_ne(const CheckedTriangulation& tri) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tri.cells().size(); ++i)
    if (cap(tri.cells()[i]) != 0 && !cn(tri, i).is_zero()) out.push_back(i);
  return out;
}

std::vector<std::size_t> f_ne(const CheckedTriangulation& tri) {
  const auto ne = t_ne(tri);
  const auto& cfs = tri.diagram().coordinate_facets();
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < cfs.size(); ++f) {
    const Degree bound(Slope(cfs[f].maximal_axial()));
    for (auto t : ne)
      if (facet_contains(cfs[f], tri.cells()[t]) && cn(tri, t).degree() >= bound) {
        out.push_back(f);
        break;
      }
  }
  return out;
}

bool bko_exceptional(const Face& facet, std::size_t ambient_dim) {
  if (facet.dim != static_cast<int>(ambient_dim) - 1) throw std::invalid_argument("BKO exceptionality is defined for facets of dimension n");
  const auto& verts = facet.vertices;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    std::vector<std::size_t> off;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (verts[v][j] != 0) off.push_back(v);
    if (off.size() != 1) continue;
    const IntVec& u = verts[off.front()];
    if (u[j] != 1) continue;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      if (i == j || u[i] < 1) continue;
      bool only = true;
      for (std::size_t k = 0; k < ambient_dim && only; ++k)
        if (k != i && k != j && u[k] != 0) only = false;
      if (only) return true;
    }
  }
  return false;
}

BkoReport bko_report(const NewtonDiagram& d) {
  BkoReport r;
  const auto loj = lojasiewicz(d);
  r.loj = loj.value;
  r.morse_exception = loj.morse_exception;
  for (auto f : d.top_facets()) {
    const Face& face = d.coordinate_facets()[f];
    const bool exc = bko_exceptional(face, d.dim());
    r.facet_exceptional.push_back(exc);
    if (exc) continue;
    const Rat value = face.maximal_axial() - 1;
    if (!r.predicted || value > *r.predicted) r.predicted = value;
  }
  if (r.predicted) r.match = *r.predicted == r.loj;
  return r;
}

ConjectureReport conjecture_report(const CheckedTriangulation& tri) {
  const NewtonDiagram& d = tri.diagram();
  ConjectureReport r;
  r.bko = bko_report(d);
  for (auto t : t_ne(tri)) {
    const Rat value = cn(tri, t).degree().slope().value() - 1;
    if (!r.conj_a_simplices || value > *r.conj_a_simplices) r.conj_a_simplices = value;
  }
  for (auto f : f_ne(tri)) {
    const Rat value = d.coordinate_facets()[f].maximal_axial() - 1;
    if (!r.conj_a_facets || value > *r.conj_a_facets) r.conj_a_facets = value;
  }
  r.conj_a_match = r.conj_a_simplices && r.conj_a_facets && *r.conj_a_simplices == r.bko.loj &&
                   *r.conj_a_facets == r.bko.loj;
  return r;
}

}  // namespace jacnewton
