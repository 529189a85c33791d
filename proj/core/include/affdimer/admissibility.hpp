#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "affdimer/polygon.hpp"
#include "affdimer/subdivision.hpp"

namespace affdimer {

enum class FaceLabel { clockwise, counterclockwise, inconsistent };

const char* to_string(FaceLabel l);

struct CountSummary {
  std::int64_t n = 0;
  std::int64_t v = 0;
  std::int64_t e = 0;
  std::int64_t f = 0;
  std::int64_t f_cw = 0;
  std::int64_t f_ccw = 0;
  std::int64_t f_x = 0;
  std::int64_t e_cw = 0;
  std::int64_t e_ccw = 0;
  std::int64_t genus = 0;
  std::int64_t surface_boundary = 0;

  friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

struct AdmissibilityReport {
  std::shared_ptr<const Subdivision> subdivision;

  int k = 0;  // bipartite checkerboard components (0, 1 or 2)
  bool admissible = false;
  /// Induced orientation equals the prescribed one, possibly after swapping
  /// the 2-coloring (which reverses every line at once).
  bool matches_prescribed = false;
  bool coloring_swapped = false;
  /// k = 2 and the realized polygon is a parallelogram.
  bool parallelogram = false;

  /// Per line: +1 if the induced orientation agrees with h_i, -1 if not.
  /// Empty when not admissible.
  std::vector<int> induced_signs;
  std::vector<IntVec2> induced_classes;
  std::optional<LatticePolygon> induced_polygon;

  /// Checkerboard component (0 or 1) of each face.
  std::vector<int> component;
  /// Component chosen for the 2-coloring, -1 when k = 0.
  int chosen_component = -1;
  /// Labels under the induced orientation when admissible, otherwise under
  /// the prescribed one.
  std::vector<FaceLabel> face_labels;
  std::optional<CountSummary> counts;
};

/// Rejects classes that do not sum to zero (ZeroSumViolation) and
/// degenerate arrangements (DegenerateArrangement).
AdmissibilityReport check_admissible(const Arrangement& a);
AdmissibilityReport check_admissible(std::shared_ptr<const Subdivision> s);

/// Requires r.admissible. Asserts the counting identities.
CountSummary counts(const AdmissibilityReport& r);

struct MatchedPair {
  std::size_t cw_face;
  std::size_t ccw_face;
  std::size_t vertex;
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  std::vector<MatchedPair> pairs;  // sorted by cw_face
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Straddling-direction matching. Requires an admissible report and rho not
/// parallel to any line.
Matching perfect_matching(const AdmissibilityReport& r, const IntVec2& rho);

struct SurfaceType {
  std::int64_t genus;
  std::int64_t punctures;
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

SurfaceType surface_type(const LatticePolygon& p);

}  // namespace affdimer
