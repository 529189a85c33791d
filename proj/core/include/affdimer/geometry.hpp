#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "affdimer/subdivision.hpp"

namespace affdimer {

using Ring = std::vector<RatVec2>;

struct FaceGeometry {
  /// Face lifted to R^2 by walking its boundary from the first half-edge.
  Ring lifted;
  /// Lifted face cut along the integer grid and translated into [0,1]^2.
  std::vector<Ring> pieces;
  Rational area;
  /// Centroid of the lifted face, reduced into [0,1)^2.
  RatVec2 anchor;
};

struct SegmentGeometry {
  std::size_t line;
  std::vector<std::array<RatVec2, 2>> pieces;  // oriented along +h
};

struct RenderGeometry {
  std::vector<FaceGeometry> faces;
  std::vector<SegmentGeometry> segments;
};

/// Exact clipped geometry of a subdivision. The face pieces tile the unit
/// square; throws InternalError if their areas do not sum to 1.
RenderGeometry render_geometry(const Subdivision& s);

/// Twice the signed area of a ring.
Rational twice_signed_area(const Ring& r);

/// Convex polygon clipped to the axis-aligned box [x0,x1] x [y0,y1].
Ring clip_to_box(const Ring& poly, const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1);

}  // namespace affdimer
