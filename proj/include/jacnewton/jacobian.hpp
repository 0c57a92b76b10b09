// (Alternating) Jacobian Newton polygons of a Newton nondegenerate
// singularity and its Lojasiewicz exponent.
#pragma once

#include "jacnewton/kn_group.hpp"
#include "jacnewton/newton.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jacnewton {

/// W^{(level+1)}(v): s! Vol_s(K_f(v)) for level = n, otherwise the sum of
/// C(k-1, c-1) s! V_s(K_f^{s-k}, K_g^k) over k = c..s with c = n - level.
Rat w_mixed(const NewtonDiagram& diagram, const WeightVector& v, std::size_t level);

/// AJ^{(n+1)} as a sum over the coordinate facets of Gamma(f).
KNInt aj_via_volume(const NewtonDiagram& diagram);
/// AJ^{(level+1)} as a sum over the coordinate-facet normals of Gamma(f g),
/// g a generic linear form.
KNInt aj_via_mixed_volume(const NewtonDiagram& diagram, std::size_t level);
/// AJ^{(level+1)}; level = n uses the facet-volume sum.
KNInt aj(const NewtonDiagram& diagram, std::size_t level);
/// J^{(level+1)} = AJ^{(level+1)} + AJ^{(level)}, AJ^{(0)} = 0.
KNInt jacobian_polygon(const NewtonDiagram& diagram, std::size_t level);

struct LevelPolygonSet {
  std::size_t n = 0;
  std::vector<KNInt> aj;  // aj[d] = AJ^{(d+1)}, d = 0..n
  KNInt j(std::size_t d) const { return d == 0 ? aj[0] : aj[d] + aj[d - 1]; }
};
LevelPolygonSet level_polygons(const NewtonDiagram& diagram);

struct LojResult {
  Rat value;
  bool morse_exception = false;
  std::optional<Face> witness_facet;
};
LojResult lojasiewicz(const NewtonDiagram& diagram);
LojResult lojasiewicz(const NewtonDiagram& diagram, const KNInt& top_aj);

/// Rank of the Hessian at 0 for generic coefficients on the support.
std::size_t generic_hessian_rank(const SupportSet& support);

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation, empty when passed
};
struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool ok() const;
};
PropertyReport property_report(const NewtonDiagram& diagram);
PropertyReport property_report(const NewtonDiagram& diagram, const LevelPolygonSet& levels);

}  // namespace jacnewton
