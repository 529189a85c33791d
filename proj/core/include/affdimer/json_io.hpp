#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affdimer/admissibility.hpp"
#include "affdimer/classify.hpp"
#include "affdimer/geometry.hpp"
#include "affdimer/search.hpp"
#include "json.hpp"

namespace affdimer::io {

using json = nlohmann::json;

/// "p/q", always with a denominator.
json to_json(const Rational& r);
/// Accepts "p/q", "p" or a JSON integer. Throws ParseError.
Rational rational_from_json(const json& j);

json to_json(const IntVec2& v);
IntVec2 intvec_from_json(const json& j);

json to_json(const RatVec2& p);

/// {"vertices": [[x,y], ...]}
json polygon_to_json(const LatticePolygon& p);
/// {"classes": [[a,b], ...]} in angular order.
json classes_to_json(const std::vector<IntVec2>& classes);
/// Exactly one of "vertices" or "classes". Throws ParseError for malformed
/// documents and InvalidInput (or ZeroSumViolation) for invalid polygons.
LatticePolygon polygon_from_json(const json& j);

/// {"lines": [{"h": [a,b], "c": "p/q"}, ...]} plus optional "polygon" and
/// "provenance".
json arrangement_to_json(const Arrangement& a, const json& provenance = nullptr, bool embed_polygon = true);
/// Offsets must lie in [0,1). Extra keys are ignored.
Arrangement arrangement_from_json(const json& j);

json to_json(const GeneralPositionReport& r);
json to_json(const CountSummary& c);
json to_json(const PolygonMetrics& m);
json to_json(const Matching& m);
json to_json(const VolumeEstimate& v);
json to_json(const ClosedForm& c);

/// Verdict, counts, induced classes and per-face labels.
json report_to_json(const AdmissibilityReport& r);
/// Face pieces, segment pieces and vertex corners, all as rational strings.
json geometry_to_json(const RenderGeometry& g, const AdmissibilityReport& r);

json search_outcome_to_json(const SearchOutcome& o);

/// One record per class. `certificate_paths`, when given, replaces the
/// inline certificates with file references.
json classification_to_json(const ClassificationReport& r,
                            const std::optional<std::vector<std::string>>& certificate_paths = std::nullopt);

/// Parses text, mapping JSON syntax errors to ParseError.
json parse(const std::string& text);

}  // namespace affdimer::io
