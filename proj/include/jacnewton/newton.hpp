// Newton polyhedra of supports: faces, coordinate facets, weights, s_alpha
// subdiagrams and Newton numbers.
#pragma once

#include "jacnewton/arith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jacnewton {

/// Support of a power series vanishing at the origin.
class SupportSet {
 public:
  /// Sorts and deduplicates. Throws on an empty set, mixed lengths, negative
  /// exponents or the zero exponent.
  explicit SupportSet(std::vector<IntVec> points);

  /// Number of variables n + 1.
  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& points() const { return points_; }
  /// Points vanishing outside the coordinate set.
  std::vector<IntVec> restricted_to(const std::vector<std::size_t>& coords) const;
  Int multiplicity() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> points_;
};

/// Entries in Z_{>0} u {inf}; primitive, with at least one finite entry.
class WeightVector {
 public:
  explicit WeightVector(std::vector<ExtNat> entries);
  /// Divides the finite entries by their gcd first.
  static WeightVector primitive(std::vector<ExtNat> entries);
  /// Finite on coords (strictly positive there), infinite elsewhere.
  static WeightVector on_coords(std::size_t dim, const std::vector<std::size_t>& coords, const IntVec& values);

  std::size_t size() const { return entries_.size(); }
  const std::vector<ExtNat>& entries() const { return entries_; }
  const ExtNat& operator[](std::size_t i) const { return entries_[i]; }
  std::vector<std::size_t> sedentarity() const;
  std::vector<std::size_t> finite_coords() const;
  /// Sum of v_i u_i with inf * 0 = 0.
  ExtNat evaluate(const IntVec& u) const;
  Int min_finite() const;
  /// "(15,10,6)", "(5,inf,2)".
  std::string str() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend bool operator<(const WeightVector& a, const WeightVector& b);

 private:
  std::vector<ExtNat> entries_;
};

ExtNat wedge(const std::vector<IntVec>& points, const WeightVector& v);
/// min over the standard basis: the smallest finite entry.
ExtNat wedge_linear(const WeightVector& v);

/// A compact face of a Newton polyhedron.
struct Face {
  std::vector<IntVec> vertices;  // lexicographic
  std::vector<IntVec> points;    // support points on the face, lexicographic
  std::vector<std::size_t> coords;  // I_K: coordinates nonzero on the relative interior
  int dim = -1;
  // Set for coordinate facets only.
  std::optional<WeightVector> normal;
  ExtNat m = 0;
  ExtNat n = 0;
  Int scaled_volume = 0;  // dim! * Vol_dim

  bool empty() const { return dim < 0; }
  bool is_coordinate_facet() const { return normal.has_value(); }
  Rat maximal_axial() const;
  bool has_point(const IntVec& p) const;
  /// Every vertex of other is a point of this face.
  bool contains(const Face& other) const;
};

/// Coordinate facets of Gamma_+(points), found per coordinate subset from
/// normals of affinely independent point tuples. Ordered by (I, normal).
std::vector<Face> coordinate_facets_of(const std::vector<IntVec>& points, std::size_t dim);

/// Compact face of conv(points) + R_{>=0}^N minimized by v; empty when the
/// minimum is infinite.
Face face_of(const std::vector<IntVec>& points, const WeightVector& v);

struct Halfspace {
  IntVec normal;  // nonnegative, primitive
  Int offset;     // normal . x >= offset on the polyhedron
};

class NewtonDiagram {
 public:
  explicit NewtonDiagram(SupportSet support);

  const SupportSet& support() const { return support_; }
  std::size_t n() const { return support_.dim() - 1; }
  std::size_t dim() const { return support_.dim(); }

  const std::vector<Halfspace>& facets() const { return facets_; }
  /// All compact faces of Gamma_+, ordered by (dim, vertices).
  const std::vector<Face>& faces() const { return faces_; }
  /// Indices into facets() of the facets containing faces()[i].
  const std::vector<std::size_t>& tight_facets(std::size_t face) const { return tight_[face]; }
  /// Indices of compact faces not contained in a larger compact face.
  std::vector<std::size_t> maximal_faces() const;

  const std::vector<Face>& coordinate_facets() const { return coordinate_facets_; }
  /// Coordinate facets with I = {0..n}.
  std::vector<std::size_t> top_facets() const;

  Face face_of(const WeightVector& v) const { return jacnewton::face_of(support_.points(), v); }
  ExtNat wedge(const WeightVector& v) const { return jacnewton::wedge(support_.points(), v); }
  /// M(v) = wedge(v) / wedge_linear(v); throws when wedge(v) is infinite.
  Rat maximal_axial(const WeightVector& v) const;
  /// Max of M over the coordinate facets; throws if there are none.
  Rat maximal_axial_diagram() const;

  /// Smallest M(v) over positive weights whose face contains faces()[i].
  const Rat& threshold(std::size_t face) const { return thresholds_[face]; }
  /// Indices of the faces making up s_alpha.
  std::vector<std::size_t> s_alpha(const Rat& alpha) const;

  /// The compact face whose relative interior meets conv(points), if the
  /// points lie in a common compact face. Points must be in Gamma_+.
  std::optional<std::size_t> minimal_face_containing(const std::vector<RatVec>& points) const;

  bool is_convenient() const;
  Int multiplicity() const { return support_.multiplicity(); }

 private:
  SupportSet support_;
  std::vector<Halfspace> facets_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> tight_;
  std::vector<Face> coordinate_facets_;
  std::vector<Rat> thresholds_;
};

/// S_- for a union of compact faces, as pyramids from the origin over the
/// coordinate facets lying in the union.
struct Pyramid {
  Face base;
  Int scaled_volume;  // (s+1)! Vol_{s+1} = m * s! Vol_s(base)
};
struct Region {
  bool contains_origin = false;
  std::vector<Pyramid> pyramids;
};

Region gamma_minus_region(const NewtonDiagram& diagram, const std::vector<Face>& faces);
Region gamma_minus_region(const NewtonDiagram& diagram, const std::vector<std::size_t>& face_indices);
Region gamma_minus_region(const NewtonDiagram& diagram);

/// Sum over J of |J|! Vol_{|J|}(S cap R^J).
Int newton_number_unsigned(const Region& region);
/// The same sum with sign (-1)^{dim - |J|}, as in Kouchnirenko's formula.
Int newton_number_signed(const Region& region, std::size_t dim);
/// Kouchnirenko's alternating sum; throws unless the diagram is convenient.
Int milnor_number_kouchnirenko(const NewtonDiagram& diagram);

enum class NewtonNumberSign { unsigned_sum, signed_sum };
/// min{alpha : nu(s_alpha(Gamma)_-) = nu(Gamma_-)}.
Rat newton_number_threshold(const NewtonDiagram& diagram, NewtonNumberSign sign = NewtonNumberSign::unsigned_sum);

}  // namespace jacnewton
