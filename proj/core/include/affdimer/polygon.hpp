#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "affdimer/lattice.hpp"

namespace affdimer {

/// Multiset of primitive homology classes that sums to zero and is not
/// contained in a single line through the origin.
class HomologyMultiset {
 public:
  HomologyMultiset() = default;
  /// Validates and keeps the given order. Throws InvalidInput (or
  /// ZeroSumViolation when only the sum is wrong).
  explicit HomologyMultiset(std::vector<IntVec2> classes);

  const std::vector<IntVec2>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const IntVec2& operator[](std::size_t i) const { return classes_[i]; }

  /// Classes in angular order (arg in [0,2pi)), ties keep input order.
  std::vector<IntVec2> sorted() const;

  /// Multiset equality (order ignored).
  friend bool operator==(const HomologyMultiset& a, const HomologyMultiset& b);

 private:
  std::vector<IntVec2> classes_;
};

/// Stable angular sort of arbitrary nonzero vectors.
std::vector<IntVec2> sort_by_angle(std::vector<IntVec2> v);

/// Convex lattice polygon, counterclockwise, no three consecutive vertices
/// collinear, at least three vertices.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  /// Accepts either orientation and drops repeated or collinear intermediate
  /// points; rejects anything non-convex or degenerate.
  static LatticePolygon from_vertices(std::vector<IntVec2> vertices);

  const std::vector<IntVec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::vector<IntVec2> edges() const;
  LatticePolygon translated(const IntVec2& t) const;

  /// Vertex lists equal after rotating the start index.
  bool same_vertices(const LatticePolygon& other) const;
  /// Equal up to a lattice translation.
  bool same_up_to_translation(const LatticePolygon& other) const;

 private:
  std::vector<IntVec2> vertices_;
};

struct PolygonMetrics {
  std::int64_t area2 = 0;     // twice the Euclidean area
  std::int64_t interior = 0;  // interior lattice points
  std::int64_t boundary = 0;  // boundary lattice points
  std::int64_t genus = 0;     // == interior
};

LatticePolygon polygon_from_classes(const HomologyMultiset& s);
HomologyMultiset classes_from_polygon(const LatticePolygon& p);
PolygonMetrics polygon_metrics(const LatticePolygon& p);

/// Image polygon M(P), re-oriented counterclockwise. Rejects det(M) = 0.
LatticePolygon apply_matrix(const IntMat2& m, const LatticePolygon& p);

/// GL2(Z)+translation normal form: a counterclockwise vertex list starting at
/// the origin with its first edge along +x. Two polygons are equivalent iff
/// their normal forms are equal.
std::vector<IntVec2> canonical_form(const LatticePolygon& p);

bool equivalent(const LatticePolygon& p, const LatticePolygon& q);

/// Shoelace sum over a closed vertex ring (positive for counterclockwise).
std::int64_t twice_area(std::span<const IntVec2> ring);

}  // namespace affdimer
