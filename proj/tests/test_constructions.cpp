#include <algorithm>

#include "affdimer/constructions.hpp"
#include "affdimer/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace affdimer;

namespace {

std::vector<IntVec2> sorted(std::vector<IntVec2> v) {
  std::sort(v.begin(), v.end(), [](const IntVec2& a, const IntVec2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  return v;
}

Arrangement figure_dimer() {
  return Arrangement({{{1, 0}, Rational(0)},
                      {{1, 0}, Rational(1349146463, 2147483647)},
                      {{0, 1}, Rational(0)},
                      {{-1, 1}, Rational(1929886873, 2147483647)},
                      {{-1, -2}, Rational(399037182, 2147483647)}});
}

LatticePolygon polygon_of(const Arrangement& a) { return polygon_from_classes(HomologyMultiset(a.classes())); }

}  // namespace

TEST_CASE("base triangle dimer") {
  const Arrangement& b = base_triangle_dimer();
  CHECK(b.size() == 3);
  CHECK(oracle::admissible_as_given(b));
  CHECK(polygon_of(b).same_up_to_translation(test::unit_triangle()));
  const AdmissibilityReport r = check_admissible(b);
  CHECK(r.counts->f == 3);
  CHECK(r.counts->f_x == 1);
  CHECK(r.counts->f_cw == 1);
}

TEST_CASE("triangle dimers") {
  SUBCASE("unit triangle") {
    const Arrangement a = triangle_dimer({1, 0}, {0, 1});
    CHECK(a.size() == 3);
    CHECK(oracle::admissible_as_given(a));
  }
  SUBCASE("doubled unit triangle has six primitive sides and no interior point") {
    const Arrangement a = triangle_dimer({2, 0}, {0, 2});
    CHECK(a.size() == 6);
    CHECK(oracle::admissible_as_given(a));
    const LatticePolygon p = polygon_of(a);
    CHECK(p.same_up_to_translation(LatticePolygon::from_vertices({{0, 0}, {2, 0}, {0, 2}})));
    CHECK(polygon_metrics(p).interior == 0);
    CHECK(polygon_metrics(p).boundary == 6);
  }
  SUBCASE("genus one triangle") {
    const Arrangement a = triangle_dimer({3, 0}, {0, 3});
    CHECK(polygon_metrics(polygon_of(a)).interior == 1);
    CHECK(check_admissible(a).matches_prescribed);
  }
  SUBCASE("collinear input is rejected") {
    CHECK_THROWS_AS(triangle_dimer({1, 0}, {2, 0}), InvalidInput);
    CHECK_THROWS_AS(triangle_dimer({0, 0}, {2, 1}), InvalidInput);
  }
  SUBCASE("small triangles in the 3x3 box, checked by the definition") {
    int n = 0;
    for (std::int64_t ux = -3; ux <= 3; ++ux) {
      for (std::int64_t uy = 0; uy <= 3; ++uy) {
        for (std::int64_t wx = -3; wx <= 3; ++wx) {
          for (std::int64_t wy = 0; wy <= 3; ++wy) {
            const IntVec2 u{ux, uy}, w{wx, wy};
            const std::int64_t d = det2(u, w);
            if (d <= 0 || d > 4) continue;
            const Arrangement a = triangle_dimer(u, w);
            CHECK(polygon_of(a).same_up_to_translation(LatticePolygon::from_vertices({{0, 0}, u, w})));
            CHECK(oracle::admissible_as_given(a));
            ++n;
          }
        }
      }
    }
    CHECK(n > 50);
  }
}

TEST_CASE("linear maps and lifts") {
  const Arrangement fig = figure_dimer();
  const LatticePolygon p = polygon_of(fig);
  SUBCASE("identity") {
    const Arrangement a = apply_linear_to_dimer(fig, IntMat2::identity());
    CHECK(sorted(a.classes()) == sorted(fig.classes()));
  }
  SUBCASE("x-stretch lift") {
    const Arrangement a = lift_sublattice(fig, SublatticeSpec{IntMat2::from_columns({1, 0}, {0, 2})});
    CHECK(polygon_of(a).same_up_to_translation(apply_matrix(IntMat2::from_rows(2, 0, 0, 1), p)));
    CHECK(oracle::admissible_as_given(a));
    CHECK(oracle::vertex_count(a) == 2 * oracle::vertex_count(fig));
  }
  SUBCASE("orientation reversing bases") {
    const IntMat2 b = IntMat2::from_columns({0, 1}, {1, 0});
    const Arrangement a = lift_sublattice(fig, SublatticeSpec{b});
    CHECK(polygon_of(a).same_up_to_translation(apply_matrix(adjugate(b), p)));
    CHECK(oracle::admissible_as_given(a));
  }
  SUBCASE("random bases") {
    SplitMix64 g(41);
    int done = 0;
    while (done < 12) {
      const IntMat2 b{static_cast<std::int64_t>(g.below(5)) - 2, static_cast<std::int64_t>(g.below(5)) - 2,
                      static_cast<std::int64_t>(g.below(5)) - 2, static_cast<std::int64_t>(g.below(5)) - 2};
      const std::int64_t det = b.det();
      if (det == 0 || std::abs(det) > 3) continue;
      ++done;
      const Arrangement lifted = lift_sublattice(fig, SublatticeSpec{b});
      CHECK(polygon_of(lifted).same_up_to_translation(apply_matrix(adjugate(b), p)));
      CHECK(oracle::vertex_count(lifted) == std::abs(det) * oracle::vertex_count(fig));
      CHECK(oracle::admissible_as_given(lifted));
      const Arrangement mapped = apply_linear_to_dimer(fig, b);
      CHECK(polygon_of(mapped).same_up_to_translation(apply_matrix(b, p)));
      CHECK(oracle::admissible_as_given(mapped));
    }
  }
  SUBCASE("singular matrices are rejected") {
    CHECK_THROWS_AS(apply_linear_to_dimer(fig, IntMat2{1, 2, 2, 4}), InvalidInput);
    CHECK_THROWS_AS(lift_sublattice(fig, SublatticeSpec{IntMat2{0, 0, 0, 0}}), InvalidInput);
  }
}

TEST_CASE("adding a parallel pair") {
  const Arrangement fig = figure_dimer();
  for (std::size_t i = 0; i < fig.size(); ++i) {
    const Arrangement a = add_parallel_pair(fig, i);
    REQUIRE(a.size() == fig.size() + 2);
    auto expect = fig.classes();
    expect.push_back(fig[i].h);
    expect.push_back(-fig[i].h);
    CHECK(sorted(a.classes()) == sorted(expect));
    for (std::size_t j = 0; j < fig.size(); ++j) CHECK(a[j] == fig[j]);
    CHECK(oracle::admissible_as_given(a));
  }
  CHECK_THROWS_AS(add_parallel_pair(fig, 9), InvalidInput);
  // Repeated application stays admissible.
  Arrangement a = fig;
  for (int k = 0; k < 3; ++k) a = add_parallel_pair(a, 2);
  CHECK(a.size() == 11);
  CHECK(check_admissible(a).matches_prescribed);
}

TEST_CASE("double everything") {
  const std::vector<std::vector<IntVec2>> inputs = {
      {{1, 0}, {0, 1}},
      {{1, 0}, {0, 1}, {-1, -1}},
      {{2, 1}, {-1, 3}, {1, 1}},
      {{1, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, -2}},
  };
  for (const auto& cls : inputs) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Arrangement a = double_everything(cls, seed);
      std::vector<IntVec2> expect;
      for (const auto& h : cls) {
        expect.push_back(h);
        expect.push_back(-h);
      }
      CHECK(sorted(a.classes()) == sorted(expect));
      const AdmissibilityReport r = check_admissible(a);
      REQUIRE(r.matches_prescribed);
      if (r.k == 2) CHECK(r.induced_polygon->size() == 4);
      if (cls.size() == 2) CHECK(r.k == 2);
      CHECK(2 * r.counts->f_x == r.counts->f);
      CHECK(oracle::admissible_as_given(a));
      CHECK(double_everything(cls, seed) == a);
    }
  }
  CHECK_THROWS_AS(double_everything({{1, 0}}, 0), InvalidInput);
  CHECK_THROWS_AS(double_everything({{2, 0}, {0, 1}}, 0), InvalidInput);
}

TEST_CASE("verify_dimer rejects non-dimers") {
  const Arrangement bad({{{1, 0}, Rational(0)},
                         {{1, 0}, Rational(1, 4)},
                         {{0, 1}, Rational(0)},
                         {{-1, 1}, Rational(1929886873, 2147483647)},
                         {{-1, -2}, Rational(399037182, 2147483647)}});
  CHECK_THROWS_AS(verify_dimer(bad, "test"), InternalError);
  CHECK_NOTHROW(verify_dimer(figure_dimer(), "test"));
}
