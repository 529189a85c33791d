#include "affdimer/api.hpp"

#include <chrono>
#include <sstream>

#include "affdimer/constructions.hpp"
#include "affdimer/errors.hpp"

namespace affdimer::api {

using io::json;

namespace {

Response error(int status, const std::string& code, const std::string& message, const json& detail = nullptr) {
  return {status, error_body(code, message, detail)};
}

json body_json(const std::string& body) {
  json j = io::parse(body);
  if (!j.is_object()) throw ParseError("request body must be a JSON object");
  return j;
}

std::int64_t get_int(const json& j, const char* key, std::int64_t fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

const json& get(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

IntMat2 matrix_from_json(const json& j, const char* key) {
  const json& m = get(j, key);
  if (!m.is_array() || m.size() != 4) throw ParseError(std::string("\"") + key + "\" must be four integers");
  std::int64_t e[4];
  for (int i = 0; i < 4; ++i) {
    if (!m[i].is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be four integers");
    e[i] = m[i].get<std::int64_t>();
  }
  return IntMat2{e[0], e[1], e[2], e[3]};
}

Arrangement input_arrangement(const json& params, const Limits& limits) {
  const Arrangement a = io::arrangement_from_json(get(params, "arrangement"));
  if (a.size() > limits.max_lines) {
    throw InvalidInput("input arrangement has more than " + std::to_string(limits.max_lines) + " lines");
  }
  return a;
}

// Maps engine exceptions onto HTTP status codes.
template <typename F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return error(400, "malformed", e.what());
  } catch (const ZeroSumViolation& e) {
    return error(422, "zero_sum", e.what());
  } catch (const DegenerateArrangement& e) {
    return error(422, "degenerate", e.what());
  } catch (const InvalidInput& e) {
    return error(422, "invalid_input", e.what());
  } catch (const InternalError& e) {
    return error(500, "internal", e.what());
  }
}

}  // namespace

json error_body(const std::string& code, const std::string& message, const json& detail) {
  json e = {{"code", code}, {"message", message}};
  if (!detail.is_null()) e["detail"] = detail;
  return {{"error", e}};
}

std::vector<IntVec2> parse_vector_list(const std::string& text) {
  std::vector<IntVec2> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("expected \"x,y\" but got \"" + item + "\"");
    try {
      std::size_t p1 = 0, p2 = 0;
      const std::string xs = item.substr(0, comma), ys = item.substr(comma + 1);
      const long long x = std::stoll(xs, &p1), y = std::stoll(ys, &p2);
      if (xs.find_first_not_of(" \t", p1) != std::string::npos || ys.find_first_not_of(" \t", p2) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      out.push_back({x, y});
    } catch (const std::logic_error&) {
      throw ParseError("expected integers in \"" + item + "\"");
    }
  }
  return out;
}

Response evaluate(const std::string& body, const Limits& limits) {
  return guarded([&]() -> Response {
    const auto t0 = std::chrono::steady_clock::now();
    const json j = body_json(body);
    if (j.contains("lines") && j["lines"].is_array() && j["lines"].size() > limits.max_lines) {
      return error(400, "limit_exceeded",
                   "at most " + std::to_string(limits.max_lines) + " lines per request (got " +
                       std::to_string(j["lines"].size()) + ")");
    }
    const Arrangement a = io::arrangement_from_json(j);
    if (!a.sums_to_zero()) {
      IntVec2 s;
      for (const auto& l : a.lines()) s += l.h;
      return error(422, "zero_sum", "homology classes do not sum to zero", {{"sum", io::to_json(s)}});
    }
    const GeneralPositionReport gp = check_general_position(a);
    if (!gp.ok()) return error(422, "degenerate", gp.message, io::to_json(gp));

    const AdmissibilityReport r = check_admissible(a);
    json out = {{"report", io::report_to_json(r)},
                {"geometry", io::geometry_to_json(render_geometry(*r.subdivision), r)},
                {"polygon", io::polygon_to_json(polygon_from_classes(HomologyMultiset(a.classes())))}};
    if (j.contains("rho") && !j["rho"].is_null()) {
      const IntVec2 rho = io::intvec_from_json(j["rho"]);
      if (!r.admissible) return error(422, "invalid_input", "a matching needs an admissible arrangement");
      out["matching"] = io::to_json(perfect_matching(r, rho));
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out["timing"] = {{"ms", ms}};
    return {200, out};
  });
}

Response search(const std::string& body, const Limits& limits, const std::atomic<bool>* cancel) {
  return guarded([&]() -> Response {
    const json j = body_json(body);
    const LatticePolygon p = io::polygon_from_json(get(j, "polygon"));
    const std::int64_t budget = get_int(j, "budget", limits.default_budget);
    const std::int64_t seed = get_int(j, "seed", 0);
    const std::int64_t mesh = get_int(j, "mesh", 0);
    if (budget < 0 || budget > limits.max_budget) {
      return error(400, "limit_exceeded", "budget must be between 0 and " + std::to_string(limits.max_budget));
    }
    if (mesh < 0) return error(400, "malformed", "mesh must be >= 0");
    if (seed < 0) return error(400, "malformed", "seed must be >= 0");
    SearchOptions opt;
    opt.cancel = cancel;
    if (mesh > 0) {
      const std::size_t free = search_classes(p).size() - 2;
      double points = 1;
      for (std::size_t q = 0; q < free; ++q) points *= static_cast<double>(mesh);
      if (points > static_cast<double>(limits.max_mesh_points)) {
        return error(400, "limit_exceeded", "mesh grid exceeds " + std::to_string(limits.max_mesh_points) + " points");
      }
      SearchOutcome o = mesh_search(p, mesh, true, opt);
      if (o.status == SearchStatus::found || budget == 0) return {200, io::search_outcome_to_json(o)};
    }
    const SearchOutcome o = random_search(p, budget, static_cast<std::uint64_t>(seed), opt);
    return {200, io::search_outcome_to_json(o)};
  });
}

json construct_document(const std::string& kind, const json& params, const Limits& limits) {
  if (!params.is_object()) throw ParseError("construction parameters must be a JSON object");
  json prov = {{"construction", kind}};
  Arrangement out;
  if (kind == "double") {
    std::vector<IntVec2> classes;
    const json& cj = get(params, "classes");
    if (!cj.is_array()) throw ParseError("\"classes\" must be an array");
    for (const auto& c : cj) classes.push_back(io::intvec_from_json(c));
    if (2 * classes.size() > limits.max_output_lines) throw InvalidInput("too many classes");
    const std::int64_t seed = get_int(params, "seed", 0);
    out = double_everything(classes, static_cast<std::uint64_t>(seed));
    json cl = json::array();
    for (const auto& c : classes) cl.push_back(io::to_json(c));
    prov["parameters"] = {{"classes", cl}};
    prov["seed"] = seed;
  } else if (kind == "add-pair") {
    const Arrangement a = input_arrangement(params, limits);
    const std::int64_t line = get_int(params, "line", -1);
    if (line < 0) throw InvalidInput("add-pair needs a non-negative \"line\" index");
    out = add_parallel_pair(a, static_cast<std::size_t>(line));
    prov["parameters"] = {{"line", line}, {"input", io::arrangement_to_json(a, nullptr, false)}};
  } else if (kind == "lift" || kind == "linear") {
    const Arrangement a = input_arrangement(params, limits);
    const char* key = kind == "lift" ? "lattice" : "matrix";
    const IntMat2 m = matrix_from_json(params, key);
    const std::int64_t det = m.det();
    if (det == 0) throw InvalidInput(std::string(key) + " is singular");
    const std::int64_t cover = det < 0 ? -det : det;
    // Every line splits into at most |det| lines.
    if (a.size() * static_cast<std::size_t>(cover) > limits.max_output_lines) {
      throw InvalidInput("result would exceed " + std::to_string(limits.max_output_lines) + " lines");
    }
    out = kind == "lift" ? lift_sublattice(a, SublatticeSpec{m}) : apply_linear_to_dimer(a, m);
    prov["parameters"] = {{key, json::array({m.a, m.b, m.c, m.d})}, {"input", io::arrangement_to_json(a, nullptr, false)}};
  } else if (kind == "triangle") {
    const IntVec2 u = io::intvec_from_json(get(params, "u"));
    const IntVec2 w = io::intvec_from_json(get(params, "w"));
    const std::int64_t det = det2(u, w);
    if (det == 0) throw InvalidInput("triangle: u and w are collinear");
    if (static_cast<std::size_t>(3 * (det < 0 ? -det : det)) > limits.max_output_lines) {
      throw InvalidInput("result would exceed " + std::to_string(limits.max_output_lines) + " lines");
    }
    out = triangle_dimer(u, w);
    prov["parameters"] = {{"u", io::to_json(u)}, {"w", io::to_json(w)}};
  } else {
    throw ParseError("unknown construction \"" + kind + "\" (expected double, add-pair, lift, linear or triangle)");
  }
  verify_dimer(out, kind.c_str());
  return io::arrangement_to_json(out, prov);
}

Response construct(const std::string& kind, const std::string& body, const Limits& limits) {
  return guarded([&]() -> Response {
    const json j = body_json(body);
    return {200, construct_document(kind, j, limits)};
  });
}

Response polygon_metrics(const std::map<std::string, std::string>& query) {
  const auto v = query.find("vertices");
  const auto c = query.find("classes");
  if ((v == query.end()) == (c == query.end())) {
    return error(400, "malformed", "give exactly one of the query parameters vertices or classes");
  }
  try {
    const std::vector<IntVec2> pts = parse_vector_list(v != query.end() ? v->second : c->second);
    const LatticePolygon p = v != query.end() ? LatticePolygon::from_vertices(pts)
                                              : polygon_from_classes(HomologyMultiset(pts));
    json out = io::to_json(affdimer::polygon_metrics(p));
    const SurfaceType st = surface_type(p);
    out["punctures"] = st.punctures;
    out["polygon"] = io::polygon_to_json(p);
    out["classes"] = io::classes_to_json(classes_from_polygon(p).classes())["classes"];
    if (auto cf = closed_form_volume(p)) out["closed_form_volume"] = io::to_json(*cf);
    return {200, out};
  } catch (const ParseError& e) {
    return error(400, "malformed", e.what());
  } catch (const InvalidInput& e) {
    return error(400, "invalid_polygon", e.what());
  }
}

}  // namespace affdimer::api
