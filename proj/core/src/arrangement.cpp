#include "affdimer/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "affdimer/errors.hpp"

namespace affdimer {

namespace {

std::string point_str(const RatVec2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

}  // namespace

RatVec2 TorusLine::point_at(const Rational& t) const {
  const IntVec2 s = dual_unit(covector());
  return scale(s, c) + scale(h, t);
}

Rational TorusLine::parameter_of(const RatVec2& x) const {
  const IntVec2 s = dual_unit(covector());
  const IntVec2 w{-s.y, s.x};  // <h,w> = 1, <s,w> = 0
  return pair(x, w).frac();
}

Arrangement::Arrangement(std::vector<TorusLine> lines) : lines_(std::move(lines)) {
  if (lines_.size() < 2) throw InvalidInput("arrangement needs at least two lines");
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& l = lines_[i];
    if (!is_primitive(l.h)) {
      std::ostringstream os;
      os << "line " << i << ": class " << l.h << " is not primitive";
      throw InvalidInput(os.str());
    }
    if (l.c.sign() < 0 || l.c >= Rational(1)) {
      throw InvalidInput("line " + std::to_string(i) + ": offset " + l.c.str() + " is not in [0,1)");
    }
  }
}

std::vector<IntVec2> Arrangement::classes() const {
  std::vector<IntVec2> out;
  out.reserve(lines_.size());
  for (const auto& l : lines_) out.push_back(l.h);
  return out;
}

bool Arrangement::sums_to_zero() const {
  IntVec2 s;
  for (const auto& l : lines_) s += l.h;
  return s.is_zero();
}

IntVec2 normal_covector(const IntVec2& h) {
  if (!is_primitive(h)) throw InvalidInput("normal_covector: class is not primitive");
  return rotate_cw(h);
}

std::vector<Intersection> pair_intersections(const TorusLine& l1, const TorusLine& l2) {
  const std::int64_t d = det2(l1.h, l2.h);
  if (d == 0) throw InvalidInput("pair_intersections: lines are parallel");
  const IntVec2 a2 = l2.covector();
  const IntVec2 s1 = dual_unit(l1.covector());
  const std::int64_t sigma = dot(s1, a2);
  const std::int64_t n = d < 0 ? -d : d;
  // t*d = c2 - c1*sigma (mod 1)
  const Rational base = l2.c - l1.c * sigma;
  std::vector<Intersection> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    Intersection x;
    x.t1 = ((base + m) / d).frac();
    const RatVec2 p = scale(s1, l1.c) + scale(l1.h, x.t1);
    x.point = p.reduced();
    x.t2 = l2.parameter_of(p);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const Intersection& a, const Intersection& b) { return a.t1 < b.t1; });
  return out;
}

GeneralPositionReport check_general_position(const Arrangement& a) {
  GeneralPositionReport r;
  const auto& ls = a.lines();
  const std::size_t n = ls.size();

  bool all_parallel = true;
  for (std::size_t j = 1; j < n && all_parallel; ++j) all_parallel = det2(ls[0].h, ls[j].h) == 0;
  if (all_parallel) {
    r.kind = GeneralPositionReport::Kind::all_parallel;
    for (std::size_t i = 0; i < n; ++i) r.lines.push_back(i);
    r.message = "all lines are parallel";
    return r;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (det2(ls[i].h, ls[j].h) != 0) continue;
      const bool same = ls[i].h == ls[j].h;
      const Rational other = same ? ls[j].c : (-ls[j].c).frac();
      if (ls[i].c == other) {
        r.kind = GeneralPositionReport::Kind::coincident_parallels;
        r.lines = {i, j};
        r.offset = ls[i].c;
        r.message = "coincident parallels: lines " + std::to_string(i) + " and " + std::to_string(j) +
                    " coincide (offset " + ls[i].c.str() + ")";
        return r;
      }
    }
  }

  // A triple point shows up as a repeated parameter on one line.
  struct Hit {
    Rational t;
    std::size_t other;
    RatVec2 point;
  };
  std::vector<std::vector<Hit>> hits(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (det2(ls[i].h, ls[j].h) == 0) continue;
      for (auto& x : pair_intersections(ls[i], ls[j])) {
        hits[i].push_back({x.t1, j, x.point});
        hits[j].push_back({x.t2, i, x.point});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& h = hits[i];
    std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
    for (std::size_t q = 1; q < h.size(); ++q) {
      if (h[q].t != h[q - 1].t) continue;
      r.kind = GeneralPositionReport::Kind::triple_point;
      r.lines = {i, h[q - 1].other, h[q].other};
      std::sort(r.lines.begin(), r.lines.end());
      r.point = h[q].point;
      r.message = "triple point: lines " + std::to_string(r.lines[0]) + ", " + std::to_string(r.lines[1]) + " and " +
                  std::to_string(r.lines[2]) + " meet at " + point_str(h[q].point);
      return r;
    }
  }
  return r;
}

}  // namespace affdimer
