// Exact lattice-polytope geometry.
//
// Volumes are lattice-normalized: on an s-dimensional rational affine
// subspace L, the parallelepiped spanned by a basis of the saturated lattice
// of L's direction space has volume 1. Thus a unimodular s-simplex has
// volume 1/s! and a point has volume 1.
#pragma once

#include "jacnewton/arith.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace jacnewton::geom {

/// Origin plus a basis of the saturated direction lattice of an affine hull.
class AffineLatticeFrame {
 public:
  AffineLatticeFrame() = default;
  AffineLatticeFrame(RatVec origin, std::vector<IntVec> basis, std::vector<IntVec> transform);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return origin_.size(); }
  const RatVec& origin() const { return origin_; }
  const std::vector<IntVec>& basis() const { return basis_; }

  /// Coordinates of a point of the affine hull in the basis; integral for
  /// lattice points when the origin is a lattice point.
  RatVec coordinates(const RatVec& point) const;
  bool contains(const RatVec& point) const;

 private:
  RatVec origin_;
  std::vector<IntVec> basis_;
  // Unimodular N x N matrix V; (x - origin) V = (coordinates, 0).
  std::vector<IntVec> transform_;
  RatVec times_transform(const RatVec& point) const;
};

AffineLatticeFrame saturated_frame(const std::vector<RatVec>& points);
AffineLatticeFrame saturated_frame(const std::vector<IntVec>& points);

/// Placing (beneath-beyond) triangulation of points of R^k in the given
/// insertion order. Points that are not beyond any boundary ridge when
/// inserted are skipped. Simplices are lists of point indices.
struct PlacingTriangulation {
  int dim = -1;
  std::vector<std::vector<std::size_t>> simplices;
};
PlacingTriangulation placing_triangulation(const std::vector<RatVec>& points);

/// Signed determinant of a square rational matrix.
Rat determinant(std::vector<RatVec> rows);
Int determinant(const std::vector<IntVec>& rows);

/// Rank of a set of rational vectors.
std::size_t rank(std::vector<RatVec> rows);

class RationalPolytope {
 public:
  RationalPolytope() = default;
  /// Convex hull of the points (duplicates and redundant points are dropped).
  explicit RationalPolytope(const std::vector<RatVec>& points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Dimension of the affine hull; -1 for the empty polytope.
  int dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }
  /// Lexicographically sorted, irredundant.
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const AffineLatticeFrame& frame() const { return frame_; }
  /// Facets inside the affine hull, each as indices into vertices().
  std::vector<std::vector<std::size_t>> facets() const;
  /// Lattice-normalized dim()-volume.
  const Rat& volume() const { return volume_; }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  AffineLatticeFrame frame_;
  Rat volume_;
  std::vector<std::vector<std::size_t>> facets_;
};

RationalPolytope convex_hull(const std::vector<RatVec>& points);
RationalPolytope convex_hull(const std::vector<IntVec>& points);

/// Vol_s(P) with s = dim P; Vol_0(point) = 1.
Rat normalized_volume(const RationalPolytope& polytope);
/// Vol_s(P) for a prescribed s: 0 when dim P < s. Throws when dim P > s.
Rat volume_in_dimension(const RationalPolytope& polytope, int s);

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);
RationalPolytope dilate(const RationalPolytope& p, const Int& factor);

struct WeightedBody {
  RationalPolytope body;
  unsigned multiplicity = 1;
};

/// Generalized mixed s-volume with V_s(K^s) = Vol_s(K), expanded by
/// inclusion-exclusion over Minkowski sums of sub-multisets. Returns 0 when
/// the sum of all bodies has dimension < s.
Rat mixed_volume(const std::vector<WeightedBody>& bodies, unsigned s);

/// Integer points of the box [lo, hi] accepted by the predicate, in
/// lexicographic order.
std::vector<IntVec> lattice_points_in(const IntVec& lo, const IntVec& hi,
                                      const std::function<bool(const IntVec&)>& member);

}  // namespace jacnewton::geom
