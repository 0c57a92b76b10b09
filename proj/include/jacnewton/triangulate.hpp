// Triangulations of Newton diagrams, Cap counts and relative combinatorial
// Newton polyhedra, with checkers for the BKO conjecture and Conjecture A.
#pragma once

#include "jacnewton/kn_group.hpp"
#include "jacnewton/newton.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacnewton {

struct Simplex {
  std::vector<IntVec> vertices;  // lexicographic, distinct

  explicit Simplex(std::vector<IntVec> vertices);
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  /// Coordinates nonzero on the relative interior.
  std::vector<std::size_t> coords() const;
  bool is_face_of(const Simplex& other) const;
  std::string str() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend bool operator<(const Simplex& a, const Simplex& b);
};

class Triangulation {
 public:
  Triangulation() = default;
  /// Cells as given; validate() checks face closure.
  explicit Triangulation(std::vector<Simplex> cells);
  /// All nonempty faces of the given cells.
  static Triangulation closure_of(const std::vector<Simplex>& cells);

  /// Ordered by (dim, vertices).
  const std::vector<Simplex>& cells() const { return cells_; }
  std::optional<std::size_t> find(const Simplex& s) const;
  std::vector<std::size_t> maximal_cells() const;

 private:
  std::vector<Simplex> cells_;
};

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A triangulation checked against its diagram, with coordinate simplices
/// and their weights attached.
class CheckedTriangulation {
 public:
  const NewtonDiagram& diagram() const { return *diagram_; }
  const Triangulation& triangulation() const { return tri_; }
  const std::vector<Simplex>& cells() const { return tri_.cells(); }
  /// For each cell in T_c, the index of the coordinate facet of equal dimension containing it.
  const std::optional<std::size_t>& coordinate_facet(std::size_t cell) const { return coordinate_facet_[cell]; }
  std::vector<std::size_t> coordinate_cells() const;

 private:
  friend CheckedTriangulation validate(const Triangulation&, const NewtonDiagram&);
  const NewtonDiagram* diagram_ = nullptr;
  Triangulation tri_;
  std::vector<std::optional<std::size_t>> coordinate_facet_;
};

/// Throws TriangulationError naming the first violated condition.
CheckedTriangulation validate(const Triangulation& tri, const NewtonDiagram& diagram);

/// Placing triangulation of every maximal compact face, vertices inserted in
/// lexicographic order.
Triangulation default_triangulation(const NewtonDiagram& diagram);

/// Lattice points sum lambda_i v_i with every lambda_i in (0, 1); 1 for the empty simplex.
Int cap(const std::optional<Simplex>& s);

/// CN_N(T / T0) with T0 a cell index or the empty simplex.
KNRat cn(const CheckedTriangulation& tri, std::optional<std::size_t> t0);
/// Sum over T in the triangulation and the empty simplex of Cap(T) CN_N(T / T).
KNRat aj_via_cap(const CheckedTriangulation& tri);

/// Cells T with Cap(T) CN_N(T / T) != 0.
std::vector<std::size_t> t_ne(const CheckedTriangulation& tri);
/// Indices of coordinate facets F containing some T in t_ne with deg CN_N(T / T) >= M(F).
std::vector<std::size_t> f_ne(const CheckedTriangulation& tri);

/// Exceptional facets in the sense of Brzostowski, Krasinski and Oleksik.
/// Throws unless the face has dimension n.
bool bko_exceptional(const Face& facet, std::size_t ambient_dim);

/// The BKO prediction max of M(F) - 1 over nonexceptional facets of
/// dimension n, against the Lojasiewicz exponent.
struct BkoReport {
  Rat loj;
  bool morse_exception = false;
  std::vector<bool> facet_exceptional;  // parallel to NewtonDiagram::top_facets()
  std::optional<Rat> predicted;
  std::optional<bool> match;
};
BkoReport bko_report(const NewtonDiagram& diagram);

struct ConjectureReport {
  BkoReport bko;
  // Conjecture A: max deg CN_N(T/T) - 1 over t_ne and max M(F) - 1 over f_ne.
  std::optional<Rat> conj_a_simplices;
  std::optional<Rat> conj_a_facets;
  bool conj_a_match = false;
};
ConjectureReport conjecture_report(const CheckedTriangulation& tri);

}  // namespace jacnewton
