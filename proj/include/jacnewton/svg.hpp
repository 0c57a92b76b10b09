// SVG pictures of virtual Newton polygons.
#pragma once

#include "jacnewton/kn_group.hpp"

#include <string>

namespace jacnewton {

/// Polyline through the virtual vertices with axes and grid ticks. Integer
/// coordinates only, so the bytes depend on the element alone. Throws
/// std::domain_error for infinite height or length.
std::string render_svg(const KNInt& element);

}  // namespace jacnewton
