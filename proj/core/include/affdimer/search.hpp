#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affdimer/moduli.hpp"
#include "affdimer/polygon.hpp"

namespace affdimer {

struct SearchOptions {
  /// 0 means: AFFDIMER_WORKERS if set, else the hardware thread count.
  unsigned workers = 0;
  /// Checked between trials; a set flag stops the search early.
  const std::atomic<bool>* cancel = nullptr;
};

/// Worker count used when SearchOptions::workers is 0.
unsigned default_workers();

enum class SearchStatus { found, exhausted_at_resolution, trials_exhausted, cancelled };

const char* to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::trials_exhausted;
  std::optional<Arrangement> certificate;
  std::int64_t resolution = 0;  // m for mesh searches
  std::int64_t trials = 0;      // samples examined
  std::int64_t degenerate_skips = 0;
  std::int64_t pseudo_dimers = 0;  // admissible for a different polygon
  std::int64_t found_at = -1;      // trial or grid index of the certificate
  double wall_ms = 0;
  /// Exhausted outcomes never certify nonexistence.
  std::string note;
};

/// Line classes used for searches on P: its primitive side segments in
/// angular order.
std::vector<IntVec2> search_classes(const LatticePolygon& p);

/// Indices of the two coordinates fixed to 0 on the reduced subtorus: the
/// first pair of non-parallel classes.
std::pair<std::size_t, std::size_t> reduced_pair(const std::vector<IntVec2>& classes);

/// Random offsets on the reduced subtorus; returns the certificate of the
/// smallest successful trial index, so the result does not depend on the
/// worker count.
SearchOutcome random_search(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                            const SearchOptions& opt = {});

/// Grid j/m on the reduced subtorus. Degenerate grid points are nudged by
/// 1/(2 m r^(q+1)) in coordinate q for small primes r when `perturb` is set.
SearchOutcome mesh_search(const LatticePolygon& p, std::int64_t m, bool perturb = true,
                          const SearchOptions& opt = {});

struct VolumeEstimate {
  Rational estimate;  // hits / trials
  std::int64_t trials = 0;
  std::int64_t hits = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
  bool reduced = true;
  std::int64_t degenerate_resamples = 0;
};

/// Fraction of generic samples that are dimers for P (pseudo-dimers miss).
VolumeEstimate estimate_admissible_volume(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                                          bool reduce, const SearchOptions& opt = {});

/// 4 / (C(2a,a) C(2b,b)) for the a x b parallelogram.
Rational parallelogram_volume_exact(std::int64_t a, std::int64_t b);
/// a! / a^a for the triangle with vertices (0,0), (a,0), (0,1).
Rational triangle_volume_exact(std::int64_t a);

struct ClosedForm {
  std::string family;  // "parallelogram" or "triangle"
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational volume;
};

/// Closed-form admissible volume when P is equivalent to an a x b rectangle
/// or an a x 1 triangle.
std::optional<ClosedForm> closed_form_volume(const LatticePolygon& p);

}  // namespace affdimer
