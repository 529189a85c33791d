#include "affdimer/constructions.hpp"

#include <algorithm>

#include "affdimer/errors.hpp"
#include "affdimer/random.hpp"

namespace affdimer {

namespace {

// Smallest positive distance, in the normal coordinate u = <x, a_i>, from
// line i to a feature on its left (smaller u): a crossing not on line i or a
// parallel line. 1 when there is none.
Rational left_gap(const Subdivision& s, std::size_t i) {
  const auto& arr = s.arrangement();
  const TorusLine& line = arr[i];
  const IntVec2 a = line.covector();
  Rational best(1);
  auto consider = [&](const Rational& u) {
    const Rational d = (line.c - u).frac();
    if (d.sign() > 0 && d < best) best = d;
  };
  for (const auto& v : s.vertices()) {
    if (v.line[0] == i || v.line[1] == i) continue;
    consider(pair(v.point, a).frac());
  }
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (j == i) continue;
    if (arr[j].h == line.h) consider(arr[j].c);
    if (arr[j].h == -line.h) consider((-arr[j].c).frac());
  }
  return best;
}

TorusLine at_normal_coordinate(const IntVec2& h, const IntVec2& reference_h, const Rational& u) {
  // A line of class h = +-reference_h sitting at <x, a_ref> = u.
  return {h, (h == reference_h ? u : -u).frac()};
}

bool matches_own_classes(const Arrangement& a) {
  try {
    const auto r = check_admissible(a);
    return r.admissible && r.matches_prescribed;
  } catch (const DegenerateArrangement&) {
    return false;
  }
}

std::vector<IntVec2> sorted_classes(std::vector<IntVec2> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

AdmissibilityReport verify_dimer(const Arrangement& a, const char* what) {
  AdmissibilityReport r = check_admissible(a);
  if (!r.admissible || !r.matches_prescribed) {
    throw InternalError(std::string(what) + " produced an arrangement that is not a dimer for its classes");
  }
  return r;
}

Arrangement add_parallel_pair(const Arrangement& a, std::size_t line_index) {
  if (line_index >= a.size()) {
    throw InvalidInput("add_parallel_pair: line index " + std::to_string(line_index) + " out of range");
  }
  const AdmissibilityReport r = check_admissible(a);
  if (!r.admissible || !r.matches_prescribed) {
    throw InvalidInput("add_parallel_pair: input is not an admissible dimer for its classes");
  }
  const TorusLine& line = a[line_index];
  const Rational gap = left_gap(*r.subdivision, line_index);
  const Rational delta = gap / 4;

  // Order along the normal, moving left from H: H, then H1 (class -h), then H2 (class h).
  std::vector<TorusLine> lines = a.lines();
  lines.push_back(at_normal_coordinate(line.h, line.h, line.c - delta * 2));
  lines.push_back(at_normal_coordinate(-line.h, line.h, line.c - delta));
  Arrangement out(std::move(lines));
  if (matches_own_classes(out)) return out;

  // Mirror image on the right-hand side.
  const Arrangement mirrored = [&] {
    std::vector<TorusLine> ls;
    for (const auto& l : a.lines()) ls.push_back({-l.h, (-l.c).frac()});
    return Arrangement(std::move(ls));
  }();
  const Rational rgap = left_gap(*check_admissible(mirrored).subdivision, line_index) / 4;
  lines = a.lines();
  lines.push_back(at_normal_coordinate(line.h, line.h, line.c + rgap * 2));
  lines.push_back(at_normal_coordinate(-line.h, line.h, line.c + rgap));
  out = Arrangement(std::move(lines));
  verify_dimer(out, "add_parallel_pair");
  return out;
}

Arrangement double_everything(const std::vector<IntVec2>& classes, std::uint64_t seed) {
  if (classes.empty()) throw InvalidInput("double_everything: no classes given");
  for (const auto& h : classes) {
    if (!is_primitive(h)) throw InvalidInput("double_everything: class is not primitive");
  }
  const bool all_parallel =
      std::all_of(classes.begin(), classes.end(), [&](const IntVec2& h) { return det2(classes[0], h) == 0; });
  if (all_parallel) throw InvalidInput("double_everything: classes are all parallel");

  std::vector<IntVec2> target;
  for (const auto& h : classes) {
    target.push_back(h);
    target.push_back(-h);
  }
  target = sorted_classes(target);

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    SplitMix64 rng(derive_seed(seed, attempt));
    std::vector<TorusLine> base;
    for (const auto& h : classes) base.push_back({h, rng.offset()});
    const Arrangement base_arr(base);
    if (!check_general_position(base_arr).ok()) continue;
    const Subdivision sub = build_subdivision(base_arr);
    std::vector<Rational> gaps;
    for (std::size_t i = 0; i < base.size(); ++i) gaps.push_back(left_gap(sub, i));

    for (std::int64_t shrink : {4, 16, 64, 256}) {
      std::vector<TorusLine> lines;
      for (std::size_t i = 0; i < base.size(); ++i) {
        lines.push_back(base[i]);
        lines.push_back(at_normal_coordinate(-base[i].h, base[i].h, base[i].c - gaps[i] / shrink));
      }
      Arrangement doubled(lines);
      if (!check_general_position(doubled).ok()) continue;
      const AdmissibilityReport r = check_admissible(doubled);
      if (!r.admissible) continue;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (r.induced_signs[i] < 0) lines[i] = {-lines[i].h, (-lines[i].c).frac()};
      }
      Arrangement out(std::move(lines));
      if (sorted_classes(out.classes()) != target) continue;
      if (!matches_own_classes(out)) continue;
      return out;
    }
  }
  throw InternalError("double_everything: no admissible placement found");
}

Arrangement lift_sublattice(const Arrangement& a, const SublatticeSpec& l) {
  if (l.det() == 0) throw InvalidInput("lift_sublattice: basis is singular");
  const AdmissibilityReport r = check_admissible(a);
  if (!r.admissible || !r.matches_prescribed) {
    throw InvalidInput("lift_sublattice: input is not an admissible dimer for its classes");
  }
  const IntMat2 bt = l.basis.transpose();
  const IntMat2 adj = adjugate(l.basis);
  // An orientation-reversing basis would hand back -adj(B)(P); flip every
  // line to compensate.
  const std::int64_t sgn = l.det() > 0 ? 1 : -1;
  std::vector<TorusLine> lines;
  for (const auto& line : a.lines()) {
    // <B y, a> = <y, B^T a>; rotate_cw(adj(B) h) = B^T rotate_cw(h).
    const IntVec2 beta = bt * line.covector();
    const std::int64_t g = gcd_of(beta);
    const IntVec2 hh = adj * line.h;
    const IntVec2 h_new{sgn * hh.x / g, sgn * hh.y / g};
    if (rotate_cw(h_new) != IntVec2{sgn * beta.x / g, sgn * beta.y / g}) throw InternalError("lift: covector mismatch");
    for (std::int64_t j = 0; j < g; ++j) lines.push_back({h_new, ((line.c + j) * sgn / g).frac()});
  }
  Arrangement out(std::move(lines));
  verify_dimer(out, "lift_sublattice");
  return out;
}

Arrangement apply_linear_to_dimer(const Arrangement& a, const IntMat2& b) {
  if (b.det() == 0) throw InvalidInput("apply_linear_to_dimer: matrix is singular");
  return lift_sublattice(a, SublatticeSpec{adjugate(b)});
}

const Arrangement& base_triangle_dimer() {
  static const Arrangement base = [] {
    Arrangement a({{{1, 0}, Rational(0)}, {{-1, 1}, Rational(0)}, {{0, -1}, Rational(1, 2)}});
    verify_dimer(a, "base triangle");
    return a;
  }();
  return base;
}

Arrangement triangle_dimer(const IntVec2& u, const IntVec2& w) {
  if (det2(u, w) == 0) throw InvalidInput("triangle_dimer: u and w are collinear");
  return apply_linear_to_dimer(base_triangle_dimer(), IntMat2::from_columns(u, w));
}

}  // namespace affdimer
