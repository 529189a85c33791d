#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affdimer/lattice.hpp"
#include "affdimer/polygon.hpp"
#include "affdimer/rational.hpp"

namespace affdimer {

/// Exact point in Q^2.
struct RatVec2 {
  Rational x;
  Rational y;

  RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
  RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
  friend bool operator==(const RatVec2&, const RatVec2&) = default;
  friend auto operator<=>(const RatVec2& a, const RatVec2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  /// Both coordinates reduced into [0,1).
  RatVec2 reduced() const { return {x.frac(), y.frac()}; }
};

inline RatVec2 scale(const IntVec2& v, const Rational& t) { return {t * v.x, t * v.y}; }
inline Rational pair(const RatVec2& x, const IntVec2& a) { return x.x * a.x + x.y * a.y; }

/// Closed geodesic {x in T^2 : <x, a> = c mod 1} with a = rotate_cw(h).
struct TorusLine {
  IntVec2 h;
  Rational c;

  IntVec2 covector() const { return rotate_cw(h); }
  /// Point of the line at parameter t: c*s + t*h with <s, a> = 1.
  RatVec2 point_at(const Rational& t) const;
  /// Parameter in [0,1) of a point known to lie on the line.
  Rational parameter_of(const RatVec2& x) const;

  friend bool operator==(const TorusLine&, const TorusLine&) = default;
};

class Arrangement {
 public:
  Arrangement() = default;
  /// Requires at least two lines, primitive classes and offsets in [0,1).
  explicit Arrangement(std::vector<TorusLine> lines);

  const std::vector<TorusLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  const TorusLine& operator[](std::size_t i) const { return lines_[i]; }

  std::vector<IntVec2> classes() const;
  bool sums_to_zero() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<TorusLine> lines_;
};

/// (h.y, -h.x). Requires h primitive.
IntVec2 normal_covector(const IntVec2& h);

struct Intersection {
  RatVec2 point;  // reduced to [0,1)^2
  Rational t1;    // parameter on the first line
  Rational t2;    // parameter on the second line
};

/// The |det(h1,h2)| crossing points of two non-parallel lines, ordered by t1.
/// Throws InvalidInput for parallel input.
std::vector<Intersection> pair_intersections(const TorusLine& l1, const TorusLine& l2);

struct GeneralPositionReport {
  enum class Kind { ok, all_parallel, coincident_parallels, triple_point };
  Kind kind = Kind::ok;
  std::vector<std::size_t> lines;  // offending line indices
  std::optional<RatVec2> point;    // shared point for triple_point
  std::optional<Rational> offset;  // shared offset for coincident_parallels
  std::string message;

  bool ok() const { return kind == Kind::ok; }
};

GeneralPositionReport check_general_position(const Arrangement& a);

}  // namespace affdimer
