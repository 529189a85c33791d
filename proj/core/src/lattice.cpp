#include "affdimer/lattice.hpp"

#include "affdimer/errors.hpp"

namespace affdimer {

std::ostream& operator<<(std::ostream& os, const IntVec2& v) { return os << '(' << v.x << ',' << v.y << ')'; }

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
  return os << "[[" << m.a << ',' << m.c << "],[" << m.b << ',' << m.d << "]]";
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, cur_s = 0;
  std::int64_t old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

IntVec2 dual_unit(const IntVec2& v) {
  std::int64_t s = 0, t = 0;
  if (ext_gcd(v.x, v.y, s, t) != 1) throw InvalidInput("dual_unit: vector is not primitive");
  return {s, t};
}

namespace {
// 0 for arg in [0, pi), 1 for [pi, 2pi).
int half_plane(const IntVec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }
}  // namespace

bool angle_less(const IntVec2& u, const IntVec2& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return det2(u, v) > 0;
}

}  // namespace affdimer
