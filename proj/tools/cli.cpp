// affdimer command-line tool.
//
// Exit codes: 0 ok, 1 not admissible or degenerate, 2 dimer for a different
// polygon, 3 search inconclusive, 64 malformed input or usage, 65 invalid
// input (zero-sum, invalid polygon, bad construction arguments), 70 internal.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "affdimer/api.hpp"
#include "affdimer/constructions.hpp"
#include "affdimer/enumerate.hpp"
#include "affdimer/errors.hpp"
#include "server.hpp"

using namespace affdimer;
using io::json;

namespace {

enum Exit : int {
  kOk = 0,
  kNotAdmissible = 1,
  kPseudoDimer = 2,
  kInconclusive = 3,
  kUsage = 64,
  kInvalid = 65,
  kInternal = 70,
};

struct Common {
  std::uint64_t seed = 0;
  std::int64_t trials = 10000;
  std::int64_t mesh = 0;
  std::string format = "text";
  std::string output;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("error writing " + path);
}

// Wall-clock fields make outputs differ between identical runs.
void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    j.erase("timing");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

// A polygon document, an arrangement with an embedded polygon, or an
// enumerate listing (with --index).
LatticePolygon load_polygon(const std::string& path, std::int64_t index) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("polygons")) {
    const json& list = j["polygons"];
    if (!list.is_array()) throw ParseError("\"polygons\" must be an array");
    if (index < 0) throw InvalidInput(path + " lists polygons; pick one with --index");
    if (static_cast<std::size_t>(index) >= list.size()) {
      throw InvalidInput("--index " + std::to_string(index) + " out of range (" + std::to_string(list.size()) +
                         " polygons)");
    }
    return io::polygon_from_json(list[static_cast<std::size_t>(index)]);
  }
  if (j.is_object() && j.contains("lines")) {
    if (j.contains("polygon")) return io::polygon_from_json(j["polygon"]);
    return polygon_from_classes(HomologyMultiset(io::arrangement_from_json(j).classes()));
  }
  return io::polygon_from_json(j);
}

std::string vec_str(const IntVec2& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

std::string vertices_str(const LatticePolygon& p) {
  std::string s;
  for (const auto& v : p.vertices()) s += (s.empty() ? "" : " ") + vec_str(v);
  return s;
}

void emit(const Common& c, const json& doc, const std::string& text) {
  if (c.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// ---- check

int cmd_check(const Common& c, const std::string& path) {
  const json j = read_json_file(path);
  const Arrangement a = io::arrangement_from_json(j);
  if (!a.sums_to_zero()) throw ZeroSumViolation("homology classes do not sum to zero");

  const GeneralPositionReport gp = check_general_position(a);
  if (!gp.ok()) {
    json doc = {{"admissible", false}, {"degenerate", io::to_json(gp)}};
    emit(c, doc, "degenerate: " + gp.message + "\n");
    return kNotAdmissible;
  }

  const AdmissibilityReport r = check_admissible(a);
  json doc = io::report_to_json(r);
  std::optional<LatticePolygon> claimed;
  if (j.contains("polygon")) claimed = io::polygon_from_json(j["polygon"]);
  bool claim_ok = true;
  if (claimed && r.admissible) {
    claim_ok = classes_from_polygon(*claimed) == classes_from_polygon(*r.induced_polygon);
    doc["embedded_polygon_matches"] = claim_ok;
  }

  std::ostringstream os;
  if (!r.admissible) {
    os << "not admissible: k=" << r.k << " (no consistently oriented checkerboard class)\n";
    emit(c, doc, os.str());
    return kNotAdmissible;
  }
  const CountSummary& n = *r.counts;
  os << "admissible: k=" << r.k << ", f_x=" << n.f_x << "\n"
     << "  n=" << n.n << " v=" << n.v << " e=" << n.e << " f=" << n.f << " (cw " << n.f_cw << ", ccw " << n.f_ccw
     << ")\n"
     << "  genus " << n.genus << ", induced polygon " << vertices_str(*r.induced_polygon) << "\n";
  if (!r.matches_prescribed) {
    os << "  pseudo-dimer: induced classes";
    for (const auto& h : sort_by_angle(r.induced_classes)) os << " " << vec_str(h);
    os << "\n  differ from the line classes";
    for (const auto& h : sort_by_angle(a.classes())) os << " " << vec_str(h);
    os << "\n";
  }
  if (!claim_ok) os << "  embedded polygon " << vertices_str(*claimed) << " does not match\n";
  emit(c, doc, os.str());
  return r.matches_prescribed && claim_ok ? kOk : kPseudoDimer;
}

// ---- search

int cmd_search(const Common& c, const std::string& path, std::int64_t index) {
  const LatticePolygon p = load_polygon(path, index);
  SearchOutcome o;
  bool ran = false;
  if (c.mesh > 0) {
    o = mesh_search(p, c.mesh);
    ran = true;
  }
  if (!ran || (o.status != SearchStatus::found && c.trials > 0)) {
    o = random_search(p, c.trials, c.seed);
  }
  json doc = io::search_outcome_to_json(o);
  strip_timing(doc);
  std::ostringstream os;
  if (o.status == SearchStatus::found) {
    if (!c.output.empty()) {
      json cert = io::arrangement_to_json(
          *o.certificate,
          {{"construction", "search"}, {"parameters", {{"trials", c.trials}, {"mesh", c.mesh}}}, {"seed", c.seed}});
      write_text(c.output, cert.dump(2) + "\n");
    }
    os << "found: dimer with " << o.certificate->size() << " lines at trial " << o.found_at << " of " << o.trials
       << "\n";
    if (!c.output.empty()) os << "  certificate written to " << c.output << "\n";
  } else {
    os << "inconclusive: " << to_string(o.status) << " after " << o.trials << " trials (" << o.degenerate_skips
       << " degenerate, " << o.pseudo_dimers << " pseudo-dimers)\n";
  }
  emit(c, doc, os.str());
  return o.status == SearchStatus::found ? kOk : kInconclusive;
}

// ---- volume

int cmd_volume(const Common& c, const std::string& path, std::int64_t index, bool no_reduce) {
  const LatticePolygon p = load_polygon(path, index);
  const VolumeEstimate v = estimate_admissible_volume(p, c.trials, c.seed, !no_reduce);
  json doc = io::to_json(v);
  const auto cf = closed_form_volume(p);
  doc["closed_form"] = cf ? io::to_json(*cf) : json(nullptr);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << "estimate " << v.estimate.to_double() << " +- " << v.std_error << " (" << v.hits << "/" << v.trials
     << ", seed " << v.seed << (v.reduced ? ", reduced" : ", full torus") << ")\n";
  if (cf) os << "exact " << cf->volume.str() << " (" << cf->family << " " << cf->a << "x" << cf->b << ")\n";
  emit(c, doc, os.str());
  return kOk;
}

// ---- construct

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> positional;
  std::string classes;
  std::vector<std::int64_t> lattice, matrix;
  std::int64_t line = -1;
};

json arrangement_param(const std::vector<std::string>& pos, const std::string& kind) {
  if (pos.size() != 1) throw InvalidInput(kind + " takes one arrangement file");
  return read_json_file(pos[0]);
}

json four(const std::vector<std::int64_t>& v, const char* flag) {
  if (v.size() != 4) throw InvalidInput(std::string(flag) + " takes four integers");
  return json(v);
}

int cmd_construct(const Common& c, const ConstructArgs& a) {
  json params;
  if (a.kind == "double") {
    if (a.classes.empty()) throw InvalidInput("double needs --classes \"x,y;x,y;...\"");
    json cl = json::array();
    for (const auto& h : api::parse_vector_list(a.classes)) cl.push_back(io::to_json(h));
    params = {{"classes", cl}, {"seed", c.seed}};
  } else if (a.kind == "add-pair") {
    params = {{"arrangement", arrangement_param(a.positional, a.kind)}, {"line", a.line}};
  } else if (a.kind == "lift") {
    params = {{"arrangement", arrangement_param(a.positional, a.kind)}, {"lattice", four(a.lattice, "--lattice")}};
  } else if (a.kind == "linear") {
    params = {{"arrangement", arrangement_param(a.positional, a.kind)}, {"matrix", four(a.matrix, "--matrix")}};
  } else if (a.kind == "triangle") {
    std::vector<std::int64_t> v;
    for (const auto& s : a.positional) {
      std::size_t pos = 0;
      try {
        v.push_back(std::stoll(s, &pos));
      } catch (const std::logic_error&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) throw ParseError("triangle: \"" + s + "\" is not an integer");
    }
    if (v.size() != 4) throw InvalidInput("triangle takes four integers: ux uy wx wy");
    params = {{"u", {v[0], v[1]}}, {"w", {v[2], v[3]}}};
  } else {
    throw InvalidInput("unknown construction \"" + a.kind + "\"");
  }
  api::Limits limits;
  limits.max_lines = 256;
  limits.max_output_lines = 4096;
  const json doc = api::construct_document(a.kind, params, limits);
  const std::string text = doc.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    write_text(c.output, text);
    if (c.format == "text") std::cout << a.kind << ": " << doc["lines"].size() << " lines written to " << c.output << "\n";
  }
  return kOk;
}

// ---- enumerate

int cmd_enumerate(const Common& c, std::int64_t genus, std::int64_t bound) {
  const auto polys = enumerate_polygons(genus, bound);
  json list = json::array();
  for (const auto& p : polys) {
    json e = io::polygon_to_json(p);
    e["metrics"] = io::to_json(polygon_metrics(p));
    list.push_back(std::move(e));
  }
  json doc = {{"genus", genus}, {"bound", bound}, {"count", polys.size()}, {"polygons", list}};
  if (!c.output.empty()) write_text(c.output, doc.dump(2) + "\n");
  std::ostringstream os;
  os << polys.size() << " polygons of genus " << genus << " (bound " << bound << ")\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    os << "  #" << i << "  " << polys[i].size() << " vertices  " << vertices_str(polys[i]) << "\n";
  }
  if (c.output.empty() || c.format == "json") {
    emit(c, doc, os.str());
  } else {
    std::cout << polys.size() << " polygons of genus " << genus << " written to " << c.output << "\n";
  }
  return kOk;
}

// ---- classify

int cmd_classify(const Common& c, std::int64_t genus, std::int64_t bound, std::int64_t volume_trials,
                 const std::string& cert_dir) {
  const ClassificationReport r = classify_genus(genus, c.trials, c.seed, volume_trials, bound);
  std::optional<std::vector<std::string>> paths;
  if (!cert_dir.empty()) {
    std::filesystem::create_directories(cert_dir);
    paths.emplace();
    for (const auto& rec : r.classes) {
      if (!rec.certificate) {
        paths->push_back("");
        continue;
      }
      const std::string name = "genus" + std::to_string(genus) + "_class" + std::to_string(rec.index) + ".json";
      const json prov = {{"construction", rec.method}, {"parameters", {{"genus", genus}, {"class", rec.index}}},
                         {"seed", c.seed}};
      write_text(cert_dir + "/" + name, io::arrangement_to_json(*rec.certificate, prov).dump(2) + "\n");
      paths->push_back(name);
    }
  }
  json doc = {{"genus", genus},
              {"bound", bound},
              {"count", r.classes.size()},
              {"certified", r.certified()},
              {"by_method", r.by_method()},
              {"classes", io::classification_to_json(r, paths)}};
  if (!c.output.empty()) write_text(c.output, doc.dump(2) + "\n");
  std::ostringstream os;
  os << "genus " << genus << ": " << r.certified() << "/" << r.classes.size() << " classes certified\n";
  for (const auto& [m, n] : r.by_method()) os << "  " << m << ": " << n << "\n";
  for (const auto& rec : r.classes) {
    os << "  #" << rec.index << "  " << (rec.method.empty() ? "UNCERTIFIED" : rec.method);
    if (rec.volume) os << "  volume " << rec.volume->estimate.to_double();
    os << "  " << vertices_str(rec.polygon) << "\n";
  }
  emit(c, doc, os.str());
  return r.certified() == r.classes.size() ? kOk : kInconclusive;
}

// ---- serve

service::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const std::string& host, int port) {
  service::Server server;
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return kInvalid;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on http://" << host << ":" << bound << "\n" << std::flush;
  server.listen_after_bind();
  g_server = nullptr;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine dimers on the torus: check, search, construct and measure"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 not admissible or degenerate, 2 dimer for another polygon, 3 inconclusive,\n"
      "64 malformed input, 65 invalid input. AFFDIMER_WORKERS sets the search thread count\n"
      "(default: hardware concurrency).");

  Common c;
  auto add_common = [&](CLI::App* s, bool search_flags) {
    s->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    if (search_flags) {
      s->add_option("--trials", c.trials, "Random trials")->capture_default_str()->check(CLI::NonNegativeNumber);
      s->add_option("--mesh", c.mesh, "Grid resolution m, 0 skips the grid")
          ->capture_default_str()
          ->check(CLI::NonNegativeNumber);
    }
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    s->add_option("-o,--output", c.output, "Output file");
  };

  std::string input;
  std::int64_t index = -1;

  auto* check = app.add_subcommand("check", "Decide whether an arrangement file is an affine dimer");
  check->add_option("arrangement", input, "Arrangement JSON")->required();
  add_common(check, false);

  auto* search = app.add_subcommand("search", "Search the moduli space for a dimer with the given polygon");
  search->add_option("polygon", input, "Polygon JSON, arrangement, or enumerate listing")->required();
  search->add_option("--index", index, "Entry of an enumerate listing");
  add_common(search, true);

  bool no_reduce = false;
  auto* volume = app.add_subcommand("volume", "Estimate the admissible volume of a polygon");
  volume->add_option("polygon", input, "Polygon JSON, arrangement, or enumerate listing")->required();
  volume->add_option("--index", index, "Entry of an enumerate listing");
  volume->add_flag("--no-reduce", no_reduce, "Sample the full torus instead of the reduced subtorus");
  add_common(volume, true);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a dimer by a construction");
  construct->add_option("kind", ca.kind, "double, add-pair, lift, linear or triangle")
      ->required()
      ->check(CLI::IsMember({"double", "add-pair", "lift", "linear", "triangle"}));
  construct->add_option("args", ca.positional, "Arrangement file, or ux uy wx wy for triangle");
  construct->add_option("--classes", ca.classes, "Classes for double, \"x,y;x,y;...\"");
  construct->add_option("--lattice", ca.lattice, "Sublattice basis ax ay bx by for lift")->expected(4);
  construct->add_option("--matrix", ca.matrix, "Matrix columns ax ay bx by for linear")->expected(4);
  construct->add_option("--line", ca.line, "Line index for add-pair");
  add_common(construct, false);

  std::int64_t genus = 1, bound = 6, volume_trials = 0;
  std::string cert_dir;
  auto* enumerate = app.add_subcommand("enumerate", "List lattice polygons of a genus up to equivalence");
  enumerate->add_option("--genus", genus, "0, 1 or 2")->required();
  enumerate->add_option("--bound", bound, "Box size (needed for genus 0)")->capture_default_str();
  add_common(enumerate, false);

  auto* classify = app.add_subcommand("classify", "Certify every polygon of a genus");
  classify->add_option("--genus", genus, "1 or 2")->required();
  classify->add_option("--bound", bound, "Box size")->capture_default_str();
  classify->add_option("--volume-trials", volume_trials, "Volume samples per class, 0 skips")->capture_default_str();
  classify->add_option("--certificates", cert_dir, "Directory for certificate files");
  add_common(classify, true);

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Start the JSON service");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(c, input);
    if (*search) return cmd_search(c, input, index);
    if (*volume) return cmd_volume(c, input, index, no_reduce);
    if (*construct) return cmd_construct(c, ca);
    if (*enumerate) {
      if (genus < 0 || genus > 2) throw InvalidInput("unsupported genus " + std::to_string(genus) + " (0, 1 or 2)");
      return cmd_enumerate(c, genus, bound);
    }
    if (*classify) return cmd_classify(c, genus, bound, volume_trials, cert_dir);
    if (*serve) return cmd_serve(host, port);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateArrangement& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kNotAdmissible;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
