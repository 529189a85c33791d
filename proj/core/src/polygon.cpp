#include "affdimer/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "affdimer/errors.hpp"

namespace affdimer {

namespace {

bool all_parallel(const std::vector<IntVec2>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (det2(v[0], v[i]) != 0) return false;
  }
  return true;
}

std::string describe(const IntVec2& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

HomologyMultiset::HomologyMultiset(std::vector<IntVec2> classes) : classes_(std::move(classes)) {
  IntVec2 sum;
  for (const auto& h : classes_) {
    if (!is_primitive(h)) throw InvalidInput("homology class " + describe(h) + " is not primitive");
    sum += h;
  }
  if (classes_.size() < 2 || all_parallel(classes_)) {
    throw InvalidInput("homology classes are all parallel (degenerate polygon)");
  }
  if (!sum.is_zero()) throw ZeroSumViolation("homology classes sum to " + describe(sum) + ", not zero");
}

std::vector<IntVec2> sort_by_angle(std::vector<IntVec2> v) {
  std::stable_sort(v.begin(), v.end(), angle_less);
  return v;
}

std::vector<IntVec2> HomologyMultiset::sorted() const { return sort_by_angle(classes_); }

bool operator==(const HomologyMultiset& a, const HomologyMultiset& b) {
  if (a.size() != b.size()) return false;
  // Primitive vectors with equal angle are identical, so angular order is canonical.
  return a.sorted() == b.sorted();
}

std::int64_t twice_area(std::span<const IntVec2> ring) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    s += det2(ring[i], ring[(i + 1) % ring.size()]);
  }
  return s;
}

LatticePolygon LatticePolygon::from_vertices(std::vector<IntVec2> vertices) {
  // Drop consecutive duplicates (cyclically).
  std::vector<IntVec2> v;
  for (const auto& p : vertices) {
    if (v.empty() || v.back() != p) v.push_back(p);
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw InvalidInput("polygon needs at least three distinct vertices");
  const std::int64_t a2 = twice_area(v);
  if (a2 == 0) throw InvalidInput("polygon has zero area");
  if (a2 < 0) std::reverse(v.begin(), v.end());

  // Remove collinear intermediate vertices, then require strict left turns.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const IntVec2& prev = v[(i + v.size() - 1) % v.size()];
      const IntVec2& next = v[(i + 1) % v.size()];
      const IntVec2 e1 = v[i] - prev;
      const IntVec2 e2 = next - v[i];
      if (det2(e1, e2) == 0) {
        if (dot(e1, e2) < 0) throw InvalidInput("polygon boundary doubles back on itself");
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) throw InvalidInput("polygon is degenerate");
  // Strict convexity: every turn is left and the edge directions wind once.
  int wraps = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IntVec2 e1 = v[(i + 1) % v.size()] - v[i];
    const IntVec2 e2 = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
    if (det2(e1, e2) <= 0) throw InvalidInput("polygon is not convex");
    if (angle_less(e2, e1)) ++wraps;
  }
  if (wraps != 1) throw InvalidInput("polygon is not simple");
  LatticePolygon p;
  p.vertices_ = std::move(v);
  return p;
}

std::vector<IntVec2> LatticePolygon::edges() const {
  std::vector<IntVec2> e;
  e.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    e.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
  }
  return e;
}

LatticePolygon LatticePolygon::translated(const IntVec2& t) const {
  LatticePolygon p = *this;
  for (auto& v : p.vertices_) v += t;
  return p;
}

bool LatticePolygon::same_vertices(const LatticePolygon& other) const {
  const std::size_t n = vertices_.size();
  if (other.vertices_.size() != n) return false;
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = vertices_[i] == other.vertices_[(i + s) % n];
    if (ok) return true;
  }
  return false;
}

bool LatticePolygon::same_up_to_translation(const LatticePolygon& other) const {
  if (other.vertices_.size() != vertices_.size()) return false;
  const auto lowest = [](const std::vector<IntVec2>& v) { return *std::min_element(v.begin(), v.end()); };
  const IntVec2 shift = lowest(vertices_) - lowest(other.vertices_);
  return same_vertices(other.translated(shift));
}

LatticePolygon polygon_from_classes(const HomologyMultiset& s) {
  const std::vector<IntVec2> sorted = s.sorted();
  std::vector<IntVec2> verts;
  IntVec2 cur{0, 0};
  verts.push_back(cur);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    cur += sorted[i];
    // Merge runs of equal direction into a single edge.
    if (same_direction(sorted[i], sorted[i + 1])) continue;
    verts.push_back(cur);
  }
  return LatticePolygon::from_vertices(std::move(verts));
}

HomologyMultiset classes_from_polygon(const LatticePolygon& p) {
  std::vector<IntVec2> out;
  for (const auto& e : p.edges()) {
    const std::int64_t g = gcd_of(e);
    const IntVec2 u{e.x / g, e.y / g};
    for (std::int64_t k = 0; k < g; ++k) out.push_back(u);
  }
  return HomologyMultiset(std::move(out));
}

PolygonMetrics polygon_metrics(const LatticePolygon& p) {
  PolygonMetrics m;
  m.area2 = twice_area(p.vertices());
  for (const auto& e : p.edges()) m.boundary += gcd_of(e);
  // Pick: area2 = 2*interior + boundary - 2.
  m.interior = (m.area2 - m.boundary + 2) / 2;
  m.genus = m.interior;
  return m;
}

LatticePolygon apply_matrix(const IntMat2& m, const LatticePolygon& p) {
  if (m.det() == 0) throw InvalidInput("apply_matrix: singular matrix");
  std::vector<IntVec2> v;
  v.reserve(p.size());
  for (const auto& x : p.vertices()) v.push_back(m * x);
  if (m.det() < 0) std::reverse(v.begin(), v.end());
  return LatticePolygon::from_vertices(std::move(v));
}

namespace {

void canonical_candidates(const std::vector<IntVec2>& v, std::vector<IntVec2>& best, bool& have_best) {
  const std::size_t n = v.size();
  std::vector<IntVec2> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec2 e = v[(i + 1) % n] - v[i];
    const std::int64_t g = gcd_of(e);
    const IntVec2 u{e.x / g, e.y / g};
    const IntVec2 r1 = dual_unit(u);
    const IntVec2 r2 = rotate_ccw(u);
    // U has rows r1, r2; U u = (1,0), det U = 1.
    const IntMat2 unimod = IntMat2::from_rows(r1.x, r1.y, r2.x, r2.y);
    const IntVec2 next = unimod * (v[(i + 2) % n] - v[(i + 1) % n]);
    // next.y > 0 by convexity; shear so that 0 <= next.x < next.y.
    std::int64_t k = next.x / next.y;
    if (next.x % next.y != 0 && next.x < 0) --k;
    const IntMat2 shear = IntMat2::from_rows(1, -k, 0, 1);
    const IntMat2 t = shear * unimod;
    for (std::size_t j = 0; j < n; ++j) cand[j] = t * (v[(i + j) % n] - v[i]);
    if (!have_best || cand < best) {
      best = cand;
      have_best = true;
    }
  }
}

}  // namespace

std::vector<IntVec2> canonical_form(const LatticePolygon& p) {
  std::vector<IntVec2> best;
  bool have_best = false;
  canonical_candidates(p.vertices(), best, have_best);
  const LatticePolygon mirrored = apply_matrix(IntMat2::from_rows(1, 0, 0, -1), p);
  canonical_candidates(mirrored.vertices(), best, have_best);
  return best;
}

bool equivalent(const LatticePolygon& p, const LatticePolygon& q) {
  if (p.size() != q.size()) return false;
  const PolygonMetrics mp = polygon_metrics(p);
  const PolygonMetrics mq = polygon_metrics(q);
  if (mp.area2 != mq.area2 || mp.boundary != mq.boundary) return false;
  return canonical_form(p) == canonical_form(q);
}

}  // namespace affdimer
