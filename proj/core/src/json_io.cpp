#include "affdimer/json_io.hpp"

#include "affdimer/errors.hpp"

namespace affdimer::io {

namespace {

std::int64_t int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

json ring_to_json(const Ring& r) {
  json out = json::array();
  for (const auto& p : r) out.push_back(to_json(p));
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const IntVec2& v) { return json::array({v.x, v.y}); }

IntVec2 intvec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("integer vector must be a two-element array");
  return {int_from_json(j[0], "vector entry"), int_from_json(j[1], "vector entry")};
}

json to_json(const RatVec2& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json polygon_to_json(const LatticePolygon& p) {
  json v = json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return {{"vertices", v}};
}

json classes_to_json(const std::vector<IntVec2>& classes) {
  json v = json::array();
  for (const auto& h : sort_by_angle(classes)) v.push_back(to_json(h));
  return {{"classes", v}};
}

LatticePolygon polygon_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polygon must be a JSON object");
  const bool has_v = j.contains("vertices");
  const bool has_c = j.contains("classes");
  if (has_v == has_c) throw ParseError("polygon needs exactly one of \"vertices\" or \"classes\"");
  const json& arr = has_v ? j["vertices"] : j["classes"];
  if (!arr.is_array()) throw ParseError("polygon entries must be an array");
  std::vector<IntVec2> pts;
  for (const auto& e : arr) pts.push_back(intvec_from_json(e));
  if (has_v) return LatticePolygon::from_vertices(std::move(pts));
  return polygon_from_classes(HomologyMultiset(std::move(pts)));
}

json arrangement_to_json(const Arrangement& a, const json& provenance, bool embed_polygon) {
  json lines = json::array();
  for (const auto& l : a.lines()) lines.push_back({{"h", to_json(l.h)}, {"c", to_json(l.c)}});
  json out = {{"lines", lines}};
  if (embed_polygon && a.sums_to_zero()) {
    try {
      out["polygon"] = polygon_to_json(polygon_from_classes(HomologyMultiset(a.classes())));
    } catch (const InvalidInput&) {
    }
  }
  if (!provenance.is_null()) out["provenance"] = provenance;
  return out;
}

Arrangement arrangement_from_json(const json& j) {
  const json& lines = require(j, "lines");
  if (!lines.is_array()) throw ParseError("\"lines\" must be an array");
  std::vector<TorusLine> out;
  for (const auto& l : lines) {
    TorusLine t{intvec_from_json(require(l, "h")), rational_from_json(require(l, "c"))};
    if (t.c.sign() < 0 || t.c >= Rational(1)) throw ParseError("offset " + t.c.str() + " is not in [0,1)");
    out.push_back(std::move(t));
  }
  return Arrangement(std::move(out));
}

json to_json(const GeneralPositionReport& r) {
  static const char* kinds[] = {"ok", "all_parallel", "coincident_parallels", "triple_point"};
  json out = {{"ok", r.ok()}, {"kind", kinds[static_cast<int>(r.kind)]}, {"lines", r.lines}, {"message", r.message}};
  if (r.point) out["point"] = to_json(*r.point);
  if (r.offset) out["offset"] = to_json(*r.offset);
  return out;
}

json to_json(const CountSummary& c) {
  return {{"n", c.n},         {"v", c.v},         {"e", c.e},       {"f", c.f},
          {"f_cw", c.f_cw},   {"f_ccw", c.f_ccw}, {"f_x", c.f_x},   {"e_cw", c.e_cw},
          {"e_ccw", c.e_ccw}, {"genus", c.genus}, {"surface_boundary", c.surface_boundary}};
}

json to_json(const PolygonMetrics& m) {
  return {{"area2", m.area2}, {"interior", m.interior}, {"boundary", m.boundary}, {"genus", m.genus}};
}

json to_json(const Matching& m) {
  json pairs = json::array();
  for (const auto& p : m.pairs) pairs.push_back({{"cw_face", p.cw_face}, {"ccw_face", p.ccw_face}, {"vertex", p.vertex}});
  return {{"pairs", pairs}};
}

json to_json(const VolumeEstimate& v) {
  return {{"estimate", to_json(v.estimate)},
          {"estimate_decimal", v.estimate.to_double()},
          {"trials", v.trials},
          {"hits", v.hits},
          {"std_error", v.std_error},
          {"seed", v.seed},
          {"reduced", v.reduced},
          {"degenerate_resamples", v.degenerate_resamples}};
}

json to_json(const ClosedForm& c) {
  return {{"family", c.family}, {"a", c.a}, {"b", c.b}, {"volume", to_json(c.volume)}, {"volume_decimal", c.volume.to_double()}};
}

json report_to_json(const AdmissibilityReport& r) {
  const Subdivision& s = *r.subdivision;
  json labels = json::array();
  for (auto l : r.face_labels) labels.push_back(to_string(l));
  json out = {
      {"k", r.k},
      {"admissible", r.admissible},
      {"matches_prescribed", r.matches_prescribed},
      {"coloring_swapped", r.coloring_swapped},
      {"parallelogram", r.parallelogram},
      {"prescribed_classes", classes_to_json(s.arrangement().classes())["classes"]},
      {"face_labels", labels},
      {"v", s.v()},
      {"e", s.e()},
      {"f", s.f()},
  };
  if (r.admissible) {
    out["induced_signs"] = r.induced_signs;
    json ic = json::array();
    for (const auto& h : r.induced_classes) ic.push_back(to_json(h));
    out["induced_classes"] = ic;
    out["induced_polygon"] = polygon_to_json(*r.induced_polygon);
    out["counts"] = to_json(*r.counts);
    const SurfaceType st = surface_type(*r.induced_polygon);
    out["surface"] = {{"genus", st.genus}, {"punctures", st.punctures}};
    out["chosen_component"] = r.chosen_component;
    if (r.k == 2) {
      out["notes"] = json::array({"k = 2: e_cw and e_ccw count incidences with the chosen checkerboard class"});
    }
  } else {
    out["induced_signs"] = nullptr;
    out["induced_classes"] = nullptr;
    out["induced_polygon"] = nullptr;
    out["counts"] = nullptr;
    out["surface"] = nullptr;
    out["chosen_component"] = nullptr;
  }
  return out;
}

json geometry_to_json(const RenderGeometry& g, const AdmissibilityReport& r) {
  const Subdivision& s = *r.subdivision;
  json faces = json::array();
  for (std::size_t i = 0; i < g.faces.size(); ++i) {
    const auto& f = g.faces[i];
    json pieces = json::array();
    for (const auto& p : f.pieces) pieces.push_back(ring_to_json(p));
    faces.push_back({{"id", i},
                     {"label", to_string(r.face_labels[i])},
                     {"component", r.component[i]},
                     {"area", to_json(f.area)},
                     {"anchor", to_json(f.anchor)},
                     {"sides", s.faces()[i].half_edges.size()},
                     {"pieces", pieces}});
  }
  json segments = json::array();
  for (std::size_t i = 0; i < g.segments.size(); ++i) {
    json pieces = json::array();
    for (const auto& p : g.segments[i].pieces) pieces.push_back(json::array({to_json(p[0]), to_json(p[1])}));
    segments.push_back({{"id", i}, {"line", g.segments[i].line}, {"pieces", pieces}});
  }
  json vertices = json::array();
  for (std::size_t i = 0; i < s.v(); ++i) {
    const Vertex& v = s.vertices()[i];
    json corners = json::array();
    for (std::size_t he : v.out) corners.push_back(s.half_edges()[he].face);
    vertices.push_back({{"id", i}, {"point", to_json(v.point)}, {"lines", json::array({v.line[0], v.line[1]})}, {"corners", corners}});
  }
  return {{"faces", faces}, {"segments", segments}, {"vertices", vertices}};
}

json search_outcome_to_json(const SearchOutcome& o) {
  json out = {{"status", to_string(o.status)},
              {"inconclusive", o.status != SearchStatus::found},
              {"certificate", o.certificate ? arrangement_to_json(*o.certificate) : json(nullptr)},
              {"stats",
               {{"trials", o.trials},
                {"degenerate_skips", o.degenerate_skips},
                {"pseudo_dimers", o.pseudo_dimers},
                {"found_at", o.found_at},
                {"wall_ms", o.wall_ms}}}};
  if (o.status == SearchStatus::exhausted_at_resolution || o.resolution > 0) out["resolution"] = o.resolution;
  if (!o.note.empty()) out["note"] = o.note;
  return out;
}

json classification_to_json(const ClassificationReport& r, const std::optional<std::vector<std::string>>& paths) {
  json records = json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ClassRecord& c = r.classes[i];
    json rec = {{"index", c.index},
                {"genus", r.genus},
                {"polygon", polygon_to_json(c.polygon)},
                {"metrics", to_json(c.metrics)},
                {"method", c.method.empty() ? json(nullptr) : json(c.method)},
                {"verified", c.verified},
                {"volume", c.volume ? to_json(*c.volume) : json(nullptr)}};
    if (paths) {
      rec["certificate_path"] = (*paths)[i].empty() ? json(nullptr) : json((*paths)[i]);
    } else {
      rec["certificate"] = c.certificate ? arrangement_to_json(*c.certificate) : json(nullptr);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace affdimer::io
