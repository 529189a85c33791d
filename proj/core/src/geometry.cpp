#include "affdimer/geometry.hpp"

#include <algorithm>
#include <functional>

#include "affdimer/errors.hpp"

namespace affdimer {

namespace {

RatVec2 lerp(const RatVec2& p, const RatVec2& q, const Rational& u) {
  return {p.x + (q.x - p.x) * u, p.y + (q.y - p.y) * u};
}

// Keeps the part of poly where f >= 0, f affine.
Ring clip_half_plane(const Ring& poly, const std::function<Rational(const RatVec2&)>& f) {
  Ring out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec2& p = poly[i];
    const RatVec2& q = poly[(i + 1) % n];
    const Rational fp = f(p), fq = f(q);
    if (fp.sign() >= 0) out.push_back(p);
    if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) {
      out.push_back(lerp(p, q, fp / (fp - fq)));
    }
  }
  Ring dedup;
  for (auto& p : out) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace

Rational twice_signed_area(const Ring& r) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const RatVec2& p = r[i];
    const RatVec2& q = r[(i + 1) % r.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

Ring clip_to_box(const Ring& poly, const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  Ring r = clip_half_plane(poly, [&](const RatVec2& p) { return p.x - x0; });
  if (r.size() >= 3) r = clip_half_plane(r, [&](const RatVec2& p) { return x1 - p.x; });
  if (r.size() >= 3) r = clip_half_plane(r, [&](const RatVec2& p) { return p.y - y0; });
  if (r.size() >= 3) r = clip_half_plane(r, [&](const RatVec2& p) { return y1 - p.y; });
  return r;
}

RenderGeometry render_geometry(const Subdivision& s) {
  RenderGeometry g;
  const auto& arr = s.arrangement();
  auto he_vector = [&](std::size_t he) {
    const HalfEdge& e = s.half_edges()[he];
    const Segment& seg = s.segments()[e.segment];
    const IntVec2 h = arr[seg.line].h;
    return scale(e.dir > 0 ? h : -h, seg.length);
  };

  Rational total;
  for (const auto& face : s.faces()) {
    FaceGeometry fg;
    RatVec2 p = s.vertices()[s.half_edges()[face.half_edges[0]].origin].point;
    for (std::size_t he : face.half_edges) {
      fg.lifted.push_back(p);
      p = p + he_vector(he);
    }
    if (p != fg.lifted.front()) throw InternalError("lifted face does not close");

    const Rational a2 = twice_signed_area(fg.lifted);
    if (a2.sign() <= 0) throw InternalError("lifted face is not counterclockwise");
    fg.area = a2 / 2;

    // Centroid via the shoelace fan.
    Rational cx, cy;
    for (std::size_t i = 0; i < fg.lifted.size(); ++i) {
      const RatVec2& u = fg.lifted[i];
      const RatVec2& w = fg.lifted[(i + 1) % fg.lifted.size()];
      const Rational cr = u.x * w.y - u.y * w.x;
      cx += (u.x + w.x) * cr;
      cy += (u.y + w.y) * cr;
    }
    fg.anchor = RatVec2{cx / (a2 * 3), cy / (a2 * 3)}.reduced();

    Rational lo_x = fg.lifted[0].x, hi_x = lo_x, lo_y = fg.lifted[0].y, hi_y = lo_y;
    for (const auto& q : fg.lifted) {
      lo_x = std::min(lo_x, q.x);
      hi_x = std::max(hi_x, q.x);
      lo_y = std::min(lo_y, q.y);
      hi_y = std::max(hi_y, q.y);
    }
    Rational piece_sum;
    for (std::int64_t i = lo_x.floor(); Rational(i) < hi_x; ++i) {
      for (std::int64_t j = lo_y.floor(); Rational(j) < hi_y; ++j) {
        Ring piece = clip_to_box(fg.lifted, Rational(i), Rational(i + 1), Rational(j), Rational(j + 1));
        if (piece.size() < 3) continue;
        const Rational pa = twice_signed_area(piece);
        if (pa.is_zero()) continue;
        for (auto& q : piece) q = {q.x - i, q.y - j};
        piece_sum += pa;
        fg.pieces.push_back(std::move(piece));
      }
    }
    if (piece_sum != a2) throw InternalError("face pieces do not cover the lifted face");
    total += fg.area;
    g.faces.push_back(std::move(fg));
  }
  if (total != Rational(1)) throw InternalError("face areas do not sum to 1: " + total.str());

  for (std::size_t sid = 0; sid < s.e(); ++sid) {
    const Segment& seg = s.segments()[sid];
    SegmentGeometry sg;
    sg.line = seg.line;
    const RatVec2 p = s.vertices()[seg.from].point;
    const RatVec2 v = he_vector(2 * sid);
    const RatVec2 q = p + v;
    // Parameters in [0,1] where the segment meets the integer grid.
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    auto add_cuts = [&](const Rational& from, const Rational& d) {
      if (d.is_zero()) return;
      const Rational lo = std::min(from, from + d), hi = std::max(from, from + d);
      for (std::int64_t k = lo.floor() + 1; Rational(k) < hi; ++k) cuts.push_back((Rational(k) - from) / d);
    };
    add_cuts(p.x, v.x);
    add_cuts(p.y, v.y);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      RatVec2 a = lerp(p, q, cuts[c]);
      RatVec2 b = lerp(p, q, cuts[c + 1]);
      const RatVec2 mid = lerp(p, q, (cuts[c] + cuts[c + 1]) / 2);
      const std::int64_t ix = mid.x.floor(), iy = mid.y.floor();
      a = {a.x - ix, a.y - iy};
      b = {b.x - ix, b.y - iy};
      sg.pieces.push_back({std::move(a), std::move(b)});
    }
    g.segments.push_back(std::move(sg));
  }
  return g;
}

}  // namespace affdimer
