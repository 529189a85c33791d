#include "affdimer/subdivision.hpp"

#include <algorithm>

#include "affdimer/errors.hpp"

namespace affdimer {

namespace {

[[noreturn]] void throw_degenerate(const Arrangement& a) {
  const auto r = check_general_position(a);
  throw DegenerateArrangement(r.ok() ? "arrangement is not in general position" : r.message);
}

bool has_parallel_problem(const Arrangement& a) {
  const auto& ls = a.lines();
  bool all_parallel = true;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (det2(ls[i].h, ls[j].h) != 0) {
        all_parallel = false;
        continue;
      }
      const Rational other = ls[i].h == ls[j].h ? ls[j].c : (-ls[j].c).frac();
      if (ls[i].c == other) return true;
    }
  }
  return all_parallel;
}

}  // namespace

IntVec2 Subdivision::direction(std::size_t he) const {
  const HalfEdge& e = half_edges_[he];
  const IntVec2 h = arrangement_[segments_[e.segment].line].h;
  return e.dir > 0 ? h : -h;
}

int Subdivision::slot_of(std::size_t he) const {
  const Vertex& v = vertices_[half_edges_[he].origin];
  for (int r = 0; r < 4; ++r) {
    if (v.out[r] == he) return r;
  }
  throw InternalError("half-edge not found at its origin");
}

Subdivision build_subdivision(const Arrangement& a) {
  if (has_parallel_problem(a)) throw_degenerate(a);
  Subdivision s;
  s.arrangement_ = a;
  const auto& ls = a.lines();
  const std::size_t n = ls.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (det2(ls[i].h, ls[j].h) == 0) continue;
      for (auto& x : pair_intersections(ls[i], ls[j])) {
        Vertex v;
        v.point = std::move(x.point);
        v.line = {i, j};
        v.t = {std::move(x.t1), std::move(x.t2)};
        s.vertices_.push_back(std::move(v));
      }
    }
  }

  // Order crossings along each line; equal parameters mean a triple point.
  s.line_vertices_.assign(n, {});
  for (std::size_t vid = 0; vid < s.vertices_.size(); ++vid) {
    for (int k = 0; k < 2; ++k) s.line_vertices_[s.vertices_[vid].line[k]].push_back(vid);
  }
  auto param = [&](std::size_t vid, std::size_t line) -> const Rational& {
    const Vertex& v = s.vertices_[vid];
    return v.line[0] == line ? v.t[0] : v.t[1];
  };
  // pos[vid][k]: index of vid in line_vertices_[line[k]]
  std::vector<std::array<std::size_t, 2>> pos(s.vertices_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto& lv = s.line_vertices_[i];
    std::sort(lv.begin(), lv.end(), [&](std::size_t x, std::size_t y) { return param(x, i) < param(y, i); });
    for (std::size_t q = 0; q < lv.size(); ++q) {
      if (q > 0 && param(lv[q], i) == param(lv[q - 1], i)) throw_degenerate(a);
      const Vertex& v = s.vertices_[lv[q]];
      pos[lv[q]][v.line[0] == i ? 0 : 1] = q;
    }
  }

  // Segment index of (line, q) is seg_base[line] + q: from lv[q] to lv[q+1].
  std::vector<std::size_t> seg_base(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) seg_base[i + 1] = seg_base[i] + s.line_vertices_[i].size();
  s.segments_.resize(seg_base[n]);
  s.half_edges_.resize(2 * seg_base[n]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lv = s.line_vertices_[i];
    const std::size_t k = lv.size();
    for (std::size_t q = 0; q < k; ++q) {
      const std::size_t sid = seg_base[i] + q;
      Segment& seg = s.segments_[sid];
      seg.line = i;
      seg.from = lv[q];
      seg.to = lv[(q + 1) % k];
      seg.length = k == 1 ? Rational(1) : (param(seg.to, i) - param(seg.from, i)).frac();
      s.half_edges_[2 * sid] = {sid, +1, seg.from, 0, 0};
      s.half_edges_[2 * sid + 1] = {sid, -1, seg.to, 0, 0};
    }
  }

  for (std::size_t vid = 0; vid < s.vertices_.size(); ++vid) {
    Vertex& v = s.vertices_[vid];
    std::array<std::size_t, 2> fwd{}, back{};
    for (int k = 0; k < 2; ++k) {
      const std::size_t line = v.line[k];
      const std::size_t cnt = s.line_vertices_[line].size();
      const std::size_t q = pos[vid][k];
      fwd[k] = 2 * (seg_base[line] + q);
      back[k] = 2 * (seg_base[line] + (q + cnt - 1) % cnt) + 1;
    }
    if (det2(ls[v.line[0]].h, ls[v.line[1]].h) > 0) {
      v.out = {fwd[0], fwd[1], back[0], back[1]};
    } else {
      v.out = {fwd[0], back[1], back[0], fwd[1]};
    }
    for (std::size_t he : v.out) {
      if (s.half_edges_[he].origin != vid) throw InternalError("half-edge origin mismatch");
    }
  }

  // next(e): the outgoing half-edge just clockwise of twin(e) at head(e).
  for (std::size_t he = 0; he < s.half_edges_.size(); ++he) {
    const std::size_t tw = he ^ 1u;
    const Vertex& v = s.vertices_[s.half_edges_[tw].origin];
    int r = 0;
    while (r < 4 && v.out[r] != tw) ++r;
    if (r == 4) throw InternalError("vertex is not of degree four");
    s.half_edges_[he].next = v.out[(r + 3) % 4];
  }

  const std::size_t none = static_cast<std::size_t>(-1);
  for (auto& e : s.half_edges_) e.face = none;
  for (std::size_t he = 0; he < s.half_edges_.size(); ++he) {
    if (s.half_edges_[he].face != none) continue;
    Face f;
    const std::size_t fid = s.faces_.size();
    std::size_t cur = he;
    do {
      if (s.half_edges_[cur].face != none) throw InternalError("face walk entered another face");
      s.half_edges_[cur].face = fid;
      f.half_edges.push_back(cur);
      cur = s.half_edges_[cur].next;
    } while (cur != he);
    s.faces_.push_back(std::move(f));
  }

  const auto v = static_cast<std::int64_t>(s.v());
  const auto e = static_cast<std::int64_t>(s.e());
  const auto f = static_cast<std::int64_t>(s.f());
  if (v - e + f != 0 || e != 2 * v) {
    throw InternalError("Euler check failed: v=" + std::to_string(v) + " e=" + std::to_string(e) +
                        " f=" + std::to_string(f));
  }
  return s;
}

}  // namespace affdimer
