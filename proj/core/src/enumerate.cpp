#include "affdimer/enumerate.hpp"

#include <algorithm>
#include <set>

#include "affdimer/errors.hpp"

namespace affdimer {

namespace {

// Convex chains are grown from the lowest-leftmost vertex with strictly
// increasing edge angles. The closed partial polygon is contained in every
// completion, so its interior point count is a valid prune.
class ChainSearch {
 public:
  ChainSearch(std::int64_t genus, std::int64_t bound) : genus_(genus), bound_(bound) {}

  std::vector<LatticePolygon> run() {
    for (std::int64_t x0 = 0; x0 <= bound_; ++x0) {
      chain_.assign(1, IntVec2{x0, 0});
      extend();
    }
    std::vector<LatticePolygon> out;
    out.reserve(found_.size());
    for (const auto& verts : found_) out.push_back(LatticePolygon::from_vertices(verts));
    std::sort(out.begin(), out.end(), [](const LatticePolygon& a, const LatticePolygon& b) {
      const auto ka = std::make_tuple(a.size(), polygon_metrics(a).area2);
      const auto kb = std::make_tuple(b.size(), polygon_metrics(b).area2);
      if (ka != kb) return ka < kb;
      return a.vertices() < b.vertices();
    });
    return out;
  }

 private:
  std::int64_t interior_of_closed_chain() const {
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < chain_.size(); ++i) {
      boundary += gcd_of(chain_[(i + 1) % chain_.size()] - chain_[i]);
    }
    const std::int64_t area2 = twice_area(chain_);
    return (area2 - boundary + 2) / 2;
  }

  bool closes_convexly() const {
    const std::size_t n = chain_.size();
    const IntVec2 last = chain_[n - 1] - chain_[n - 2];
    const IntVec2 closing = chain_[0] - chain_[n - 1];
    const IntVec2 first = chain_[1] - chain_[0];
    return det2(last, closing) > 0 && det2(closing, first) > 0 && angle_less(last, closing);
  }

  void record() {
    std::int64_t min_x = chain_[0].x;
    for (const auto& p : chain_) min_x = std::min(min_x, p.x);
    if (min_x != 0) return;  // every class is also found touching x = 0
    found_.insert(canonical_form(LatticePolygon::from_vertices(chain_)));
  }

  void extend() {
    const IntVec2 v0 = chain_.front();
    const IntVec2 tail = chain_.back();
    for (std::int64_t y = 0; y <= bound_; ++y) {
      for (std::int64_t x = 0; x <= bound_; ++x) {
        const IntVec2 p{x, y};
        if (y == 0 && x <= v0.x) continue;
        if (p == tail) continue;
        const IntVec2 edge = p - tail;
        if (chain_.size() >= 2) {
          const IntVec2 prev = tail - chain_[chain_.size() - 2];
          if (det2(prev, edge) <= 0 || !angle_less(prev, edge)) continue;
        }
        // The closing edge back to v0 must still turn left at v0.
        if (chain_.size() >= 2 && det2(v0 - p, chain_[1] - v0) <= 0) continue;
        // v0 must stay strictly left of the new edge.
        if (chain_.size() >= 2 && det2(edge, v0 - p) <= 0) continue;
        chain_.push_back(p);
        if (chain_.size() >= 3) {
          if (interior_of_closed_chain() > genus_) {
            chain_.pop_back();
            continue;
          }
          if (closes_convexly() && interior_of_closed_chain() == genus_) record();
        }
        extend();
        chain_.pop_back();
      }
    }
  }

  std::int64_t genus_;
  std::int64_t bound_;
  std::vector<IntVec2> chain_;
  std::set<std::vector<IntVec2>> found_;
};

}  // namespace

std::vector<LatticePolygon> enumerate_polygons(std::int64_t genus, std::int64_t bound) {
  if (genus < 0 || genus > 2) throw InvalidInput("enumerate_polygons supports genus 0, 1 and 2");
  if (bound < 4) throw InvalidInput("enumerate_polygons needs bound >= 4");
  return ChainSearch(genus, bound).run();
}

}  // namespace affdimer
