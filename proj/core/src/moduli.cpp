#include "affdimer/moduli.hpp"

#include "affdimer/errors.hpp"

namespace affdimer {

DegeneracyLocus build_degeneracy_locus(const std::vector<IntVec2>& classes) {
  DegeneracyLocus l;
  l.classes = classes;
  const std::size_t n = classes.size();
  for (const auto& h : classes) {
    if (!is_primitive(h)) throw InvalidInput("build_degeneracy_locus: class is not primitive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (det2(classes[i], classes[j]) != 0) continue;
      l.parallel_constraints.push_back({i, j, classes[i] == classes[j] ? 1 : -1});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (det2(classes[i], classes[j]) == 0) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (det2(classes[i], classes[k]) == 0 || det2(classes[j], classes[k]) == 0) continue;
        const IntVec2 ai = rotate_cw(classes[i]), aj = rotate_cw(classes[j]), ak = rotate_cw(classes[k]);
        // columns e = (ai.x, aj.x, ak.x), f = (ai.y, aj.y, ak.y); nu = e x f
        const std::array<std::int64_t, 3> nu{
            aj.x * ak.y - ak.x * aj.y,
            ak.x * ai.y - ai.x * ak.y,
            ai.x * aj.y - aj.x * ai.y,
        };
        const std::int64_t g = gcd_abs(gcd_abs(nu[0], nu[1]), nu[2]);
        l.triple_constraints.push_back({i, j, k, nu, g});
      }
    }
  }
  return l;
}

bool is_degenerate(const std::vector<Rational>& offsets, const DegeneracyLocus& locus) {
  if (offsets.size() != locus.dimension()) throw InvalidInput("is_degenerate: dimension mismatch");
  for (const auto& p : locus.parallel_constraints) {
    if ((offsets[p.i] - offsets[p.j] * p.sigma).is_integer()) return true;
  }
  for (const auto& t : locus.triple_constraints) {
    const Rational s = offsets[t.i] * t.nu[0] + offsets[t.j] * t.nu[1] + offsets[t.k] * t.nu[2];
    if ((s / t.modulus).is_integer()) return true;
  }
  // All lines parallel is degenerate as well.
  bool all_parallel = true;
  for (std::size_t j = 1; j < locus.dimension() && all_parallel; ++j) {
    all_parallel = det2(locus.classes[0], locus.classes[j]) == 0;
  }
  return all_parallel;
}

Arrangement realize(const DegeneracyLocus& locus, const std::vector<Rational>& offsets) {
  if (offsets.size() != locus.dimension()) throw InvalidInput("realize: dimension mismatch");
  std::vector<TorusLine> lines;
  for (std::size_t i = 0; i < offsets.size(); ++i) lines.push_back({locus.classes[i], offsets[i].frac()});
  return Arrangement(std::move(lines));
}

}  // namespace affdimer
