#include "jacnewton/svg.hpp"

#include <algorithm>
#include <sstream>

namespace jacnewton {

std::string render_svg(const KNInt& element) {
  const auto verts = element.virtual_vertices();
  Int xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (const auto& [x, y] : verts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const Int span = std::max(xmax - xmin, ymax - ymin);
  Int unit = 480 / span;
  unit = std::clamp(unit, Int(2), Int(40));
  // Label spacing 1, 2, 5, 10, 20, 50, ...
  Int step = 1;
  for (int k = 0; span / step > 20; ++k) step = (k % 3 == 1) ? Int(step / 2 * 5) : Int(step * 2);
  const Int margin = 2 * unit;
  const Int width = (xmax - xmin) * unit + 2 * margin;
  const Int height = (ymax - ymin) * unit + 2 * margin;
  auto num = [](const Int& v) { return v.get_str(); };
  auto px = [&](const Int& x) { return num((x - xmin) * unit + margin); };
  auto py = [&](const Int& y) { return num((ymax - y) * unit + margin); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  s << "<title>" << element.str() << "</title>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<g stroke=\"#888\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << num(margin / 2) << "\" y1=\"" << py(0) << "\" x2=\"" << num(width - margin / 2)
    << "\" y2=\"" << py(0) << "\"/>\n";
  s << "<line x1=\"" << px(0) << "\" y1=\"" << num(margin / 2) << "\" x2=\"" << px(0) << "\" y2=\""
    << num(height - margin / 2) << "\"/>\n";
  s << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  Int first = xmin - ((xmin % step) + step) % step;
  for (Int x = first; x <= xmax; x += step) {
    if (x == 0) continue;
    s << "<text x=\"" << px(x) << "\" y=\"" << num(ymax * unit + margin + 12) << "\" text-anchor=\"middle\">" << x
      << "</text>\n";
  }
  first = ymin - ((ymin % step) + step) % step;
  for (Int y = first; y <= ymax; y += step) {
    if (y == 0) continue;
    s << "<text x=\"" << num(-xmin * unit + margin - 4) << "\" y=\"" << py(y) << "\" text-anchor=\"end\">" << y
      << "</text>\n";
  }
  s << "</g>\n";
  s << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < verts.size(); ++i) s << (i ? " " : "") << px(verts[i].first) << "," << py(verts[i].second);
  s << "\"/>\n<g fill=\"#1f5fbf\">\n";
  for (const auto& [x, y] : verts)
    s << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\"><title>(" << x << "," << y
      << ")</title></circle>\n";
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace jacnewton
