#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>

namespace affdimer {

/// Integer vector in Z^2. Also used for integer covectors.
struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr IntVec2 operator+(const IntVec2& o) const { return {x + o.x, y + o.y}; }
  constexpr IntVec2 operator-(const IntVec2& o) const { return {x - o.x, y - o.y}; }
  constexpr IntVec2 operator-() const { return {-x, -y}; }
  constexpr IntVec2 operator*(std::int64_t k) const { return {x * k, y * k}; }
  constexpr IntVec2& operator+=(const IntVec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool is_zero() const { return x == 0 && y == 0; }

  friend constexpr bool operator==(const IntVec2&, const IntVec2&) = default;
  friend constexpr auto operator<=>(const IntVec2&, const IntVec2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntVec2& v);

struct IntVec2Hash {
  std::size_t operator()(const IntVec2& v) const {
    return std::hash<std::int64_t>{}(v.x) * 1000003u ^ std::hash<std::int64_t>{}(v.y);
  }
};

/// 2x2 integer matrix stored column-major: columns are (a,b) and (c,d), i.e.
///   | a c |
///   | b d |
struct IntMat2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  static constexpr IntMat2 identity() { return {1, 0, 0, 1}; }
  static constexpr IntMat2 from_columns(IntVec2 col0, IntVec2 col1) { return {col0.x, col0.y, col1.x, col1.y}; }
  /// Row-major convenience: rows (r00, r01), (r10, r11).
  static constexpr IntMat2 from_rows(std::int64_t r00, std::int64_t r01, std::int64_t r10, std::int64_t r11) {
    return {r00, r10, r01, r11};
  }

  constexpr IntVec2 col0() const { return {a, b}; }
  constexpr IntVec2 col1() const { return {c, d}; }
  constexpr std::int64_t det() const { return a * d - b * c; }
  constexpr IntVec2 operator*(const IntVec2& v) const { return {a * v.x + c * v.y, b * v.x + d * v.y}; }
  constexpr IntMat2 operator*(const IntMat2& o) const { return from_columns(*this * o.col0(), *this * o.col1()); }
  constexpr IntMat2 transpose() const { return {a, c, b, d}; }

  friend constexpr bool operator==(const IntMat2&, const IntMat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntMat2& m);

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline std::int64_t gcd_of(const IntVec2& v) { return gcd_abs(v.x, v.y); }

/// gcd(|x|,|y|) == 1; (0,0) is not primitive.
inline bool is_primitive(const IntVec2& v) { return gcd_of(v) == 1; }

/// u.x*v.y - u.y*v.x
constexpr std::int64_t det2(const IntVec2& u, const IntVec2& v) { return u.x * v.y - u.y * v.x; }

constexpr std::int64_t dot(const IntVec2& u, const IntVec2& v) { return u.x * v.x + u.y * v.y; }

/// Returns ((d,-c),(-b,a)); M * adj(M) = det(M) * I.
constexpr IntMat2 adjugate(const IntMat2& m) { return {m.d, -m.b, -m.c, m.a}; }

/// Clockwise rotation by pi/2: (x,y) -> (y,-x).
constexpr IntVec2 rotate_cw(const IntVec2& v) { return {v.y, -v.x}; }
/// Counterclockwise rotation by pi/2: (x,y) -> (-y,x).
constexpr IntVec2 rotate_ccw(const IntVec2& v) { return {-v.y, v.x}; }

/// Extended Euclid: returns g = gcd(|a|,|b|) >= 0 and s,t with a*s + b*t = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);

/// For primitive v returns an integer u with <u, v> = 1.
IntVec2 dual_unit(const IntVec2& v);

/// Strict angular order on nonzero vectors by arg in [0, 2pi); parallel
/// vectors with the same direction compare equal. Exact (half-plane, then
/// cross product).
bool angle_less(const IntVec2& u, const IntVec2& v);

/// True if u and v point in the same direction (positive multiples).
inline bool same_direction(const IntVec2& u, const IntVec2& v) { return det2(u, v) == 0 && dot(u, v) > 0; }

}  // namespace affdimer
