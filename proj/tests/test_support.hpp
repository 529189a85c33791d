#pragma once

#include "affdimer/polygon.hpp"

namespace affdimer::test {

inline HomologyMultiset figure_classes() {
  return HomologyMultiset({{1, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, -2}});
}

inline LatticePolygon unit_triangle() { return LatticePolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}); }

}  // namespace affdimer::test
