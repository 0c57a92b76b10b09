#include "jacnewton/json_io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jacnewton {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

Int integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const Rat r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) bad(where + ": expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  bad(where + ": expected an integer");
}

Rat rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(integer_from_json(j, where));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad(where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

InputSpec input_from_json(const Json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion)
    bad("unsupported schema " + j["schema"].dump() + ", expected " + std::to_string(kSchemaVersion));
  if (!j.contains("support") || !j["support"].is_array() || j["support"].empty())
    bad("\"support\" must be a nonempty array of exponent tuples");

  InputSpec spec;
  std::vector<IntVec> raw;
  for (std::size_t k = 0; k < j["support"].size(); ++k) {
    const auto& p = j["support"][k];
    if (!p.is_array()) bad("support[" + std::to_string(k) + "] is not an array");
    IntVec v;
    for (const auto& e : p) {
      v.push_back(integer_from_json(e, "support[" + std::to_string(k) + "]"));
      if (v.back() < 0) bad("support[" + std::to_string(k) + "] has a negative exponent");
    }
    raw.push_back(std::move(v));
  }
  const std::size_t dim = raw.front().size();
  if (j.contains("variables")) {
    if (!j["variables"].is_array()) bad("\"variables\" must be an array of names");
    for (const auto& v : j["variables"]) {
      if (!v.is_string()) bad("variable names must be strings");
      spec.variables.push_back(v.get<std::string>());
    }
    auto sorted = spec.variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("repeated variable name");
  } else {
    for (std::size_t i = 0; i < dim; ++i) spec.variables.push_back("x" + std::to_string(i));
  }
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (raw[k].size() != spec.variables.size())
      bad("support[" + std::to_string(k) + "] has " + std::to_string(raw[k].size()) + " entries for " +
          std::to_string(spec.variables.size()) + " variables");

  std::vector<Rat> coeffs(raw.size(), Rat(1));
  const bool have_coeffs = j.contains("coefficients");
  if (have_coeffs) {
    const auto& c = j["coefficients"];
    if (!c.is_array() || c.size() != raw.size()) bad("\"coefficients\" must parallel \"support\"");
    for (std::size_t k = 0; k < c.size(); ++k) coeffs[k] = rational_from_json(c[k], "coefficients[" + std::to_string(k) + "]");
  }
  std::map<IntVec, Rat, IntVecLess> merged;
  for (std::size_t k = 0; k < raw.size(); ++k) merged[raw[k]] += coeffs[k];
  for (const auto& [p, c] : merged) {
    if (have_coeffs && c == 0) continue;
    spec.support.push_back(p);
    if (have_coeffs) spec.coefficients.push_back(c);
  }
  if (spec.support.empty()) bad("all coefficients cancel");
  if (j.contains("nondegenerate")) {
    if (!j["nondegenerate"].is_boolean()) bad("\"nondegenerate\" must be true or false");
    spec.nondegenerate = j["nondegenerate"].get<bool>();
  }
  return spec;
}

Json input_to_json(const InputSpec& spec) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["variables"] = spec.variables;
  j["support"] = Json::array();
  for (const auto& p : spec.support) j["support"].push_back(vector_to_json(p));
  if (!spec.coefficients.empty()) {
    j["coefficients"] = Json::array();
    for (const auto& c : spec.coefficients) j["coefficients"].push_back(to_string(c));
  }
  j["nondegenerate"] = spec.nondegenerate;
  return j;
}

template <class C>
Json kn_to_json(const KNElement<C>& e) {
  Json out = Json::array();
  for (const auto& [alpha, coeff] : e.terms()) out.push_back({{"alpha", alpha.str()}, {"coeff", to_string(coeff)}});
  return out;
}
template Json kn_to_json(const KNElement<Int>&);
template Json kn_to_json(const KNElement<Rat>&);

KNRat kn_from_json(const Json& j) {
  if (!j.is_array()) bad("a Newton group element is an array of {alpha, coeff}");
  KNRat out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("alpha") || !t.contains("coeff") || !t["alpha"].is_string())
      bad("malformed term " + t.dump());
    out.add_term(Slope::parse(t["alpha"].get<std::string>()), rational_from_json(t["coeff"], "coeff"));
  }
  return out;
}

Json vector_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) out.push_back(x.get_si());
    else out.push_back(to_string(x));
  }
  return out;
}

IntVec vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer vector, got " + j.dump());
  IntVec v;
  for (const auto& x : j) v.push_back(integer_from_json(x, "vector"));
  return v;
}

Json face_to_json(const Face& f) {
  Json j;
  j["dim"] = f.dim;
  j["vertices"] = Json::array();
  for (const auto& v : f.vertices) j["vertices"].push_back(vector_to_json(v));
  j["coords"] = f.coords;
  if (f.normal) {
    j["normal"] = f.normal->str();
    j["m"] = f.m.str();
    j["n"] = f.n.str();
    j["M"] = to_string(f.maximal_axial());
    j["scaled_volume"] = to_string(f.scaled_volume);
  }
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) bad("a triangulation is {\"cells\": [...]}");
  std::vector<Simplex> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_array() || c.empty()) bad("each cell is a nonempty list of vertices");
    std::vector<IntVec> verts;
    for (const auto& v : c) verts.push_back(vector_from_json(v));
    cells.emplace_back(std::move(verts));
  }
  return Triangulation::closure_of(cells);
}

Json triangulation_to_json(const Triangulation& t) {
  Json cells = Json::array();
  for (auto i : t.maximal_cells()) {
    Json c = Json::array();
    for (const auto& v : t.cells()[i].vertices) c.push_back(vector_to_json(v));
    cells.push_back(std::move(c));
  }
  return {{"cells", cells}};
}

}  // namespace jacnewton
