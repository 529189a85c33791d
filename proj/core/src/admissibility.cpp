#include "affdimer/admissibility.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "affdimer/errors.hpp"

namespace affdimer {

const char* to_string(FaceLabel l) {
  switch (l) {
    case FaceLabel::clockwise: return "clockwise";
    case FaceLabel::counterclockwise: return "counterclockwise";
    case FaceLabel::inconsistent: return "inconsistent";
  }
  return "inconsistent";
}

namespace {

struct Checkerboard {
  std::vector<int> component;  // per face
  std::vector<int> color;      // per face, 0/1 from BFS (meaningful in bipartite components)
  std::array<bool, 2> bipartite{true, true};
};

// Faces are joined when they are opposite corners at some vertex.
Checkerboard diagonal_components(const Subdivision& s) {
  const std::size_t f = s.f();
  std::vector<std::vector<std::size_t>> adj(f);
  Checkerboard cb;
  cb.component.assign(f, -1);
  cb.color.assign(f, -1);
  std::vector<bool> self_loop(f, false);
  for (const auto& v : s.vertices()) {
    for (int r = 0; r < 2; ++r) {
      const std::size_t x = s.half_edges()[v.out[r]].face;
      const std::size_t y = s.half_edges()[v.out[r + 2]].face;
      if (x == y) {
        self_loop[x] = true;
      } else {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }
    }
  }
  int ncomp = 0;
  for (std::size_t start = 0; start < f; ++start) {
    if (cb.component[start] >= 0) continue;
    if (ncomp == 2) throw InternalError("diagonal adjacency graph has more than two components");
    std::deque<std::size_t> queue{start};
    cb.component[start] = ncomp;
    cb.color[start] = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      if (self_loop[x]) cb.bipartite[ncomp] = false;
      for (std::size_t y : adj[x]) {
        if (cb.component[y] < 0) {
          cb.component[y] = ncomp;
          cb.color[y] = 1 - cb.color[x];
          queue.push_back(y);
        } else if (cb.color[y] == cb.color[x]) {
          cb.bipartite[ncomp] = false;
        }
      }
    }
    ++ncomp;
  }
  if (ncomp != 2) throw InternalError("diagonal adjacency graph does not have two components");
  return cb;
}

// Orientation sign of every line induced by coloring component `comp`
// (color 0 = counterclockwise).
std::vector<int> induced_signs(const Subdivision& s, const Checkerboard& cb, int comp) {
  const std::size_t n = s.arrangement().size();
  std::vector<int> eps(n, 0);
  for (std::size_t sid = 0; sid < s.e(); ++sid) {
    const std::size_t left = s.half_edges()[2 * sid].face;
    const std::size_t right = s.half_edges()[2 * sid + 1].face;
    int sign = 0;
    if (cb.component[left] == comp) {
      sign = cb.color[left] == 0 ? +1 : -1;
    } else if (cb.component[right] == comp) {
      sign = cb.color[right] == 0 ? -1 : +1;
    } else {
      throw InternalError("segment does not bound a face of the chosen component");
    }
    int& e = eps[s.segments()[sid].line];
    if (e != 0 && e != sign) throw InternalError("induced orientation is not constant along a line");
    e = sign;
  }
  return eps;
}

std::vector<FaceLabel> labels_for(const Subdivision& s, const std::vector<int>& eps) {
  std::vector<FaceLabel> out;
  out.reserve(s.f());
  for (const auto& face : s.faces()) {
    bool all_pos = true, all_neg = true;
    for (std::size_t he : face.half_edges) {
      const HalfEdge& e = s.half_edges()[he];
      const int d = e.dir * eps[s.segments()[e.segment].line];
      all_pos = all_pos && d > 0;
      all_neg = all_neg && d < 0;
    }
    out.push_back(all_pos ? FaceLabel::counterclockwise : all_neg ? FaceLabel::clockwise : FaceLabel::inconsistent);
  }
  return out;
}

bool is_parallelogram(const LatticePolygon& p) {
  if (p.size() != 4) return false;
  const auto e = p.edges();
  return e[0] == -e[2] && e[1] == -e[3];
}

}  // namespace

AdmissibilityReport check_admissible(const Arrangement& a) {
  if (!a.sums_to_zero()) {
    IntVec2 sum;
    for (const auto& l : a.lines()) sum += l.h;
    std::ostringstream os;
    os << "homology classes sum to " << sum << ", not zero";
    throw ZeroSumViolation(os.str());
  }
  return check_admissible(std::make_shared<const Subdivision>(build_subdivision(a)));
}

AdmissibilityReport check_admissible(std::shared_ptr<const Subdivision> sp) {
  const Subdivision& s = *sp;
  if (!s.arrangement().sums_to_zero()) throw ZeroSumViolation("homology classes do not sum to zero");
  AdmissibilityReport r;
  r.subdivision = sp;
  const std::size_t n = s.arrangement().size();

  Checkerboard cb = diagonal_components(s);
  r.component = cb.component;
  r.k = static_cast<int>(cb.bipartite[0]) + static_cast<int>(cb.bipartite[1]);
  if (r.k == 0) {
    r.face_labels = labels_for(s, std::vector<int>(n, 1));
    return r;
  }

  // Orient each bipartite component so that most lines keep their class;
  // prefer a component that reproduces the prescribed orientation exactly.
  int chosen = -1;
  bool chosen_swapped = false;
  std::vector<int> chosen_eps;
  for (int comp = 0; comp < 2; ++comp) {
    if (!cb.bipartite[comp]) continue;
    std::vector<int> eps = induced_signs(s, cb, comp);
    const auto plus = std::count(eps.begin(), eps.end(), 1);
    const bool swap = 2 * static_cast<std::size_t>(plus) < n;
    if (swap) {
      for (int& e : eps) e = -e;
    }
    const bool match = std::all_of(eps.begin(), eps.end(), [](int e) { return e == 1; });
    if (chosen < 0 || (match && !r.matches_prescribed)) {
      chosen = comp;
      chosen_swapped = swap;
      chosen_eps = std::move(eps);
      r.matches_prescribed = match;
    }
  }
  r.admissible = true;
  r.chosen_component = chosen;
  r.coloring_swapped = chosen_swapped;
  r.induced_signs = chosen_eps;
  for (std::size_t i = 0; i < n; ++i) {
    const IntVec2 h = s.arrangement()[i].h;
    r.induced_classes.push_back(chosen_eps[i] > 0 ? h : -h);
  }
  r.face_labels = labels_for(s, chosen_eps);

  // Colored faces of the chosen component are exactly the consistent faces.
  for (std::size_t fid = 0; fid < s.f(); ++fid) {
    const bool in_chosen = cb.component[fid] == chosen;
    const bool consistent = r.face_labels[fid] != FaceLabel::inconsistent;
    if (in_chosen != consistent) throw InternalError("face labels disagree with the checkerboard coloring");
  }

  r.induced_polygon = polygon_from_classes(HomologyMultiset(r.induced_classes));
  r.parallelogram = r.k == 2 && is_parallelogram(*r.induced_polygon);
  r.counts = counts(r);
  return r;
}

CountSummary counts(const AdmissibilityReport& r) {
  if (!r.admissible || !r.subdivision) throw InvalidInput("counts requires an admissible report");
  const Subdivision& s = *r.subdivision;
  CountSummary c;
  c.n = static_cast<std::int64_t>(s.arrangement().size());
  c.v = static_cast<std::int64_t>(s.v());
  c.e = static_cast<std::int64_t>(s.e());
  c.f = static_cast<std::int64_t>(s.f());
  for (auto l : r.face_labels) {
    if (l == FaceLabel::clockwise) ++c.f_cw;
    else if (l == FaceLabel::counterclockwise) ++c.f_ccw;
    else ++c.f_x;
  }
  for (std::size_t sid = 0; sid < s.e(); ++sid) {
    std::size_t face = s.half_edges()[2 * sid].face;
    if (r.component[face] != r.chosen_component) face = s.half_edges()[2 * sid + 1].face;
    if (r.face_labels[face] == FaceLabel::clockwise) ++c.e_cw;
    else ++c.e_ccw;
  }
  const PolygonMetrics m = polygon_metrics(*r.induced_polygon);
  c.genus = m.genus;
  c.surface_boundary = c.n;

  const bool ok = c.v == c.f && c.e == 2 * c.v && c.f_cw == c.f_ccw && c.e_cw == c.e_ccw &&
                  c.f == c.f_cw + c.f_ccw + c.f_x && 2 * c.f_x <= c.f && c.f <= 3 * c.f_x;
  if (!ok) throw InternalError("counting identities failed");
  return c;
}

Matching perfect_matching(const AdmissibilityReport& r, const IntVec2& rho) {
  if (!r.admissible || !r.subdivision) throw InvalidInput("perfect_matching requires an admissible report");
  if (rho.is_zero()) throw InvalidInput("rho must be nonzero");
  const Subdivision& s = *r.subdivision;
  for (std::size_t i = 0; i < s.arrangement().size(); ++i) {
    if (det2(rho, s.arrangement()[i].h) == 0) {
      throw InvalidInput("rho is parallel to line " + std::to_string(i));
    }
  }

  Matching m;
  std::vector<bool> used(s.f(), false);
  for (std::size_t fid = 0; fid < s.f(); ++fid) {
    if (r.face_labels[fid] != FaceLabel::clockwise) continue;
    const auto& hes = s.faces()[fid].half_edges;
    const std::size_t len = hes.size();
    // Oriented line directions along a clockwise face oppose its walk.
    std::optional<std::size_t> hit;
    for (std::size_t q = 0; q < len; ++q) {
      const IntVec2 d0 = -s.direction(hes[q]);
      const IntVec2 d1 = -s.direction(hes[(q + 1) % len]);
      if (det2(d0, rho) > 0 && det2(rho, d1) > 0) {
        if (hit) throw InternalError("rho straddled twice on one face");
        hit = q;
      }
    }
    if (!hit) throw InternalError("rho not straddled on a clockwise face");
    const std::size_t out_he = hes[(*hit + 1) % len];
    const std::size_t vid = s.half_edges()[out_he].origin;
    const int q = s.slot_of(out_he);
    const std::size_t opp = s.half_edges()[s.vertices()[vid].out[(q + 2) % 4]].face;
    if (r.face_labels[opp] != FaceLabel::counterclockwise) throw InternalError("matched face is not counterclockwise");
    if (used[opp]) throw InternalError("counterclockwise face matched twice");
    used[opp] = true;
    m.pairs.push_back({fid, opp, vid});
  }
  for (std::size_t fid = 0; fid < s.f(); ++fid) {
    if (r.face_labels[fid] == FaceLabel::counterclockwise && !used[fid]) {
      throw InternalError("matching is not perfect");
    }
  }
  return m;
}

SurfaceType surface_type(const LatticePolygon& p) {
  const PolygonMetrics m = polygon_metrics(p);
  return {m.interior, m.boundary};
}

}  // namespace affdimer
