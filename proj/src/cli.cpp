#include "jacnewton/cli.hpp"

#include "jacnewton/jacobian.hpp"
#include "jacnewton/json_io.hpp"
#include "jacnewton/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace jacnewton::cli {
namespace {

// Bad user input; reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rat parse_alpha(const std::string& text) {
  try {
    const Rat a = parse_rational(text);
    if (a <= 0) throw InputError("--alpha must be positive");
    return a;
  } catch (const std::invalid_argument&) {
    throw InputError("--alpha expects \"p\" or \"p/q\", got \"" + text + "\"");
  }
}

struct Options {
  std::string expr;
  std::string input;
  std::string vars;
  std::string format = "json";
  bool require_coefficients = false;

  std::optional<std::size_t> level;
  bool is_signed = false;
  bool is_unsigned = false;
  std::string alpha;
  bool generate = false;
  std::string tri_file;
  std::optional<std::size_t> cell;
  bool empty_cell = false;
  std::string out_path;
};

InputSpec load_input(const Options& o) {
  if (o.require_coefficients)
    throw InputError("--require-coefficients is not supported: coefficients are never inspected, so nondegeneracy is not checked");
  if (o.expr.empty() == o.input.empty()) throw InputError("give exactly one of --expr and --input");
  try {
    if (!o.expr.empty()) {
      std::optional<std::vector<std::string>> vars;
      if (!o.vars.empty()) {
        vars.emplace();
        std::stringstream ss(o.vars);
        for (std::string v; std::getline(ss, v, ',');) vars->push_back(v);
      }
      return parse_expression(o.expr, vars);
    }
    if (!o.vars.empty()) throw InputError("--vars applies to --expr only");
    return input_from_json(read_json_file(o.input));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

NewtonDiagram make_diagram(const InputSpec& spec) {
  try {
    return NewtonDiagram(SupportSet(spec.support));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::size_t level_or_top(const Options& o, const NewtonDiagram& d) {
  const std::size_t level = o.level.value_or(d.n());
  if (level > d.n()) throw InputError("--level must lie in 0.." + std::to_string(d.n()));
  return level;
}

Json optional_rat(const std::optional<Rat>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

Json checks_to_json(const PropertyReport& report) {
  Json out = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Triangulation chosen_triangulation(const Options& o, const NewtonDiagram& d) {
  if (o.tri_file.empty()) return default_triangulation(d);
  try {
    return triangulation_from_json(read_json_file(o.tri_file));
  } catch (const std::invalid_argument& e) {
    throw InputError(o.tri_file + ": " + e.what());
  }
}

CheckedTriangulation checked(const Triangulation& t, const NewtonDiagram& d) {
  try {
    return validate(t, d);
  } catch (const TriangulationError& e) {
    throw InputError(std::string("invalid triangulation: ") + e.what());
  }
}

Json cells_to_json(const CheckedTriangulation& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.cells().size(); ++i) {
    const auto& c = t.cells()[i];
    Json verts = Json::array();
    for (const auto& v : c.vertices) verts.push_back(vector_to_json(v));
    Json j{{"id", i}, {"dim", c.dim()}, {"vertices", verts}, {"cap", to_string(cap(c))}};
    if (const auto& f = t.coordinate_facet(i)) j["coordinate_facet"] = *f;
    out.push_back(std::move(j));
  }
  return out;
}

struct Outcome {
  Json result;
  int code = ok;
};

using Command = std::function<Outcome(const Options&, const InputSpec&, const NewtonDiagram&)>;

Outcome cmd_diagram(const Options&, const InputSpec&, const NewtonDiagram& d) {
  Json r;
  r["n"] = d.n();
  r["convenient"] = d.is_convenient();
  r["multiplicity"] = to_string(d.multiplicity());
  r["faces"] = Json::array();
  for (const auto& f : d.faces()) r["faces"].push_back(face_to_json(f));
  r["coordinate_facets"] = Json::array();
  for (const auto& f : d.coordinate_facets()) r["coordinate_facets"].push_back(face_to_json(f));
  r["maximal_axial"] = d.coordinate_facets().empty() ? Json(nullptr) : Json(to_string(d.maximal_axial_diagram()));
  return {r};
}

Outcome cmd_aj(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  const std::size_t level = level_or_top(o, d);
  const KNInt a = aj(d, level);
  Json r{{"level", level}, {"aj", kn_to_json(a)}, {"str", a.str()}};
  r["height"] = a.height().str();
  r["length"] = a.length().str();
  if (a.height().is_finite() && a.length().is_finite()) {
    Json vv = Json::array();
    for (const auto& [x, y] : a.virtual_vertices()) vv.push_back({to_string(x), to_string(y)});
    r["virtual_vertices"] = vv;
  }
  return {r};
}

Outcome cmd_jac(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  const auto levels = level_polygons(d);
  const std::size_t level = level_or_top(o, d);
  const KNInt j = levels.j(level);
  const auto report = property_report(d, levels);
  Json r{{"level", level}, {"j", kn_to_json(j)}, {"str", j.str()}, {"properties_ok", report.ok()},
         {"properties", checks_to_json(report)}};
  return {r, report.ok() ? ok : property_failure};
}

Outcome cmd_loj(const Options&, const InputSpec&, const NewtonDiagram& d) {
  const auto l = lojasiewicz(d);
  Json r{{"loj", to_string(l.value)}, {"morse_exception", l.morse_exception}};
  r["witness_facet"] = l.witness_facet ? face_to_json(*l.witness_facet) : Json(nullptr);
  return {r};
}

Outcome cmd_nn(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  if (o.is_signed && o.is_unsigned) throw InputError("--signed and --unsigned are exclusive");
  Json r;
  if (o.is_signed) {
    if (!o.alpha.empty()) throw InputError("--alpha applies to the unsigned Newton number only");
    if (!d.is_convenient()) throw InputError("the signed Newton number needs a convenient diagram");
    r["signed"] = to_string(milnor_number_kouchnirenko(d));
    return {r};
  }
  if (!o.alpha.empty()) {
    const Rat alpha = parse_alpha(o.alpha);
    r["alpha"] = to_string(alpha);
    r["unsigned"] = to_string(newton_number_unsigned(gamma_minus_region(d, d.s_alpha(alpha))));
  } else {
    r["unsigned"] = to_string(newton_number_unsigned(gamma_minus_region(d)));
    r["threshold"] = to_string(newton_number_threshold(d));
    if (d.is_convenient() && !o.is_unsigned) {
      r["signed"] = to_string(milnor_number_kouchnirenko(d));
      r["signed_threshold"] = to_string(newton_number_threshold(d, NewtonNumberSign::signed_sum));
    }
  }
  return {r};
}

Outcome cmd_salpha(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  if (o.alpha.empty()) throw InputError("salpha needs --alpha");
  const Rat alpha = parse_alpha(o.alpha);
  Json faces = Json::array();
  for (auto i : d.s_alpha(alpha)) {
    Json f = face_to_json(d.faces()[i]);
    f["threshold"] = to_string(d.threshold(i));
    faces.push_back(std::move(f));
  }
  return {Json{{"alpha", to_string(alpha)}, {"faces", faces}}};
}

Outcome cmd_tri(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  if (o.generate && !o.tri_file.empty()) throw InputError("--generate and --file are exclusive");
  const auto t = checked(chosen_triangulation(o, d), d);
  Json r{{"triangulation", triangulation_to_json(t.triangulation())}, {"cells", cells_to_json(t)}};
  return {r};
}

Outcome cmd_cn(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  if (o.cell && o.empty_cell) throw InputError("--cell and --empty are exclusive");
  const auto t = checked(chosen_triangulation(o, d), d);
  if (o.cell && *o.cell >= t.cells().size())
    throw InputError("--cell " + std::to_string(*o.cell) + " out of range (" + std::to_string(t.cells().size()) +
                     " cells)");
  Json r;
  if (o.cell || o.empty_cell) {
    const KNRat c = cn(t, o.cell);
    r["cell"] = o.cell ? Json(*o.cell) : Json(nullptr);
    r["cn"] = kn_to_json(c);
    r["str"] = c.str();
    return {r};
  }
  Json all = Json::array();
  all.push_back({{"cell", nullptr}, {"cap", "1"}, {"cn", kn_to_json(cn(t, std::nullopt))}});
  for (std::size_t i = 0; i < t.cells().size(); ++i)
    all.push_back({{"cell", i}, {"cap", to_string(cap(t.cells()[i]))}, {"cn", kn_to_json(cn(t, i))}});
  r["cn"] = all;
  r["aj_via_cap"] = kn_to_json(aj_via_cap(t));
  return {r};
}

Json bko_to_json(const BkoReport& b, const NewtonDiagram& d) {
  Json facets = Json::array();
  const auto top = d.top_facets();
  for (std::size_t k = 0; k < top.size(); ++k) {
    Json f = face_to_json(d.coordinate_facets()[top[k]]);
    f["exceptional"] = static_cast<bool>(b.facet_exceptional[k]);
    facets.push_back(std::move(f));
  }
  Json j{{"facets", facets}, {"predicted", optional_rat(b.predicted)}, {"loj", to_string(b.loj)},
         {"morse_exception", b.morse_exception}};
  j["match"] = b.match ? Json(*b.match) : Json(nullptr);
  return j;
}

Outcome cmd_bko(const Options&, const InputSpec&, const NewtonDiagram& d) { return {bko_to_json(bko_report(d), d)}; }

Outcome cmd_conjecture(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  const auto t = checked(chosen_triangulation(o, d), d);
  const auto rep = conjecture_report(t);
  Json tne = Json::array();
  for (auto i : t_ne(t)) tne.push_back(i);
  Json fne = Json::array();
  for (auto i : f_ne(t)) fne.push_back(face_to_json(d.coordinate_facets()[i]));
  Json r{{"loj", to_string(rep.bko.loj)},
         {"bko", bko_to_json(rep.bko, d)},
         {"t_ne", tne},
         {"f_ne", fne},
         {"conj_a_simplices", optional_rat(rep.conj_a_simplices)},
         {"conj_a_facets", optional_rat(rep.conj_a_facets)},
         {"conj_a_match", rep.conj_a_match},
         {"cells", cells_to_json(t)}};
  return {r};
}

Outcome cmd_render(const Options& o, const InputSpec&, const NewtonDiagram& d) {
  if (o.out_path.empty()) throw InputError("render needs --out");
  const std::size_t level = level_or_top(o, d);
  const KNInt a = aj(d, level);
  std::string svg;
  try {
    svg = render_svg(a);
  } catch (const std::domain_error& e) {
    throw InputError("cannot render " + a.str() + ": " + e.what());
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << svg) || !f.flush()) throw std::runtime_error("cannot write " + o.out_path);
  return {Json{{"level", level}, {"aj", kn_to_json(a)}, {"path", o.out_path}, {"bytes", svg.size()}}};
}

bool is_kn(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& t) { return t.is_object() && t.contains("alpha") && t.contains("coeff") && t.size() == 2; });
}

void print_text(const Json& j, std::ostream& out, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_text(value, out, name);
    } else if (is_kn(value)) {
      KNRat e = kn_from_json(value);
      out << name << ": " << e.str() << "\n";
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << "\n";
    } else {
      out << name << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobian Newton polygons, Lojasiewicz exponents and Newton numbers of Newton nondegenerate singularities",
               "jacnewton"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--expr", o.expr, "Power series as a polynomial expression, e.g. \"x^2 + y^3 + z^5\"");
  app.add_option("--input", o.input, "JSON input file")->check(CLI::ExistingFile);
  app.add_option("--vars", o.vars, "Comma-separated variable order for --expr");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--require-coefficients", o.require_coefficients, "Unsupported; rejected");

  std::map<CLI::App*, Command> commands;
  auto add = [&](const std::string& name, const std::string& help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace(sub, std::move(cmd));
    return sub;
  };
  auto level_opt = [&](CLI::App* s) { s->add_option("--level", o.level, "Level d, giving the polygon with superscript d+1"); };
  auto tri_opt = [&](CLI::App* s) {
    s->add_option("--triangulation", o.tri_file, "Triangulation JSON file (default: placing triangulation)")
        ->check(CLI::ExistingFile);
  };

  add("diagram", "Compact faces, coordinate facets, normals and maximal axial numbers", cmd_diagram);
  level_opt(add("aj", "Alternating Jacobian Newton polygon", cmd_aj));
  level_opt(add("jac", "Jacobian Newton polygon with the property checks", cmd_jac));
  add("loj", "Lojasiewicz exponent", cmd_loj);
  {
    auto* s = add("nn", "Newton numbers", cmd_nn);
    s->add_flag("--signed", o.is_signed, "Kouchnirenko's alternating sum");
    s->add_flag("--unsigned", o.is_unsigned, "Unsigned sum over coordinate subspaces");
    s->add_option("--alpha", o.alpha, "Restrict to s_alpha");
  }
  add("salpha", "Faces of s_alpha", cmd_salpha)->add_option("--alpha", o.alpha, "Threshold")->required();
  {
    auto* s = add("tri", "Validate or generate a triangulation", cmd_tri);
    s->add_flag("--generate", o.generate, "Placing triangulation (default)");
    s->add_option("--file", o.tri_file, "Triangulation JSON file")->check(CLI::ExistingFile);
  }
  {
    auto* s = add("cn", "Relative combinatorial Newton polyhedra", cmd_cn);
    s->add_option("--cell", o.cell, "Cell id as listed by tri");
    s->add_flag("--empty", o.empty_cell, "The empty simplex");
    tri_opt(s);
  }
  tri_opt(add("conjecture", "BKO and Conjecture A evidence", cmd_conjecture));
  add("bko", "BKO prediction against the Lojasiewicz exponent", cmd_bko);
  {
    auto* s = add("render", "SVG of the virtual Newton polygon of AJ", cmd_render);
    s->add_option("--out", o.out_path, "Output path")->required();
    level_opt(s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    const InputSpec spec = load_input(o);
    const NewtonDiagram d = make_diagram(spec);
    Outcome r = commands.at(sub)(o, spec, d);
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    Json env;
    env["schema"] = kSchemaVersion;
    env["version"] = kVersion;
    env["command"] = sub->get_name();
    env["input"] = input_to_json(spec);
    if (!spec.nondegenerate) env["warning"] = "input marked degenerate; results assume Newton nondegeneracy";
    env["result"] = std::move(r.result);
    env["elapsed_us"] = us.count();
    if (o.format == "json") out << env.dump(2) << "\n";
    else print_text(env, out, "");
    return r.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace jacnewton::cli
