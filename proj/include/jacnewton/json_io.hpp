// JSON forms of inputs, Newton group elements, faces and triangulations.
// Rationals are always strings "p" or "p/q".
#pragma once

#include "jacnewton/expression.hpp"
#include "jacnewton/kn_group.hpp"
#include "jacnewton/newton.hpp"
#include "jacnewton/triangulate.hpp"

#include <json.hpp>

namespace jacnewton {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// {"schema":1, "variables":[...], "support":[[...],...], "coefficients":[...]?, "nondegenerate":bool}.
/// Throws std::invalid_argument on malformed input.
InputSpec input_from_json(const Json& j);
Json input_to_json(const InputSpec& spec);

/// [{"alpha":"455/47","coeff":"8"}, ...] in increasing alpha.
template <class C>
Json kn_to_json(const KNElement<C>& e);
KNRat kn_from_json(const Json& j);

Json vector_to_json(const IntVec& v);
IntVec vector_from_json(const Json& j);
Json face_to_json(const Face& f);

/// {"cells":[[[v],[v],...],...]}; the listed cells are closed under faces.
Triangulation triangulation_from_json(const Json& j);
Json triangulation_to_json(const Triangulation& t);

}  // namespace jacnewton
