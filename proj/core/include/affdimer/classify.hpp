#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affdimer/search.hpp"

namespace affdimer {

struct Certification {
  /// "triangle", "double", "add-pair", or "search"; add-pair records the
  /// method of the smaller polygon after a slash, e.g. "add-pair/triangle".
  std::string method;
  Arrangement certificate;
  std::int64_t search_trials = 0;
};

/// Constructions first (triangle, double everything, add a parallel pair and
/// recurse), random search last. nullopt when the search runs out of trials.
std::optional<Certification> certify_polygon(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                                             const SearchOptions& opt = {});

/// The certificate is a dimer whose classes are exactly those of P.
bool certificate_valid(const LatticePolygon& p, const Arrangement& certificate);

struct ClassRecord {
  std::size_t index = 0;
  LatticePolygon polygon;
  PolygonMetrics metrics;
  std::string method;  // empty when uncertified
  std::optional<Arrangement> certificate;
  bool verified = false;
  std::optional<VolumeEstimate> volume;
};

struct ClassificationReport {
  std::int64_t genus = 0;
  std::int64_t bound = 0;
  std::vector<ClassRecord> classes;

  std::size_t certified() const;
  /// Count per top-level method.
  std::map<std::string, int> by_method() const;
};

/// Certifies every class of enumerate_polygons(g, bound). volume_trials = 0
/// skips the volume estimates.
ClassificationReport classify_genus(std::int64_t g, std::int64_t trials_per_class, std::uint64_t seed,
                                    std::int64_t volume_trials = 0, std::int64_t bound = 6,
                                    const SearchOptions& opt = {});

}  // namespace affdimer
