#include <atomic>

#include "affdimer/admissibility.hpp"
#include "affdimer/classify.hpp"
#include "affdimer/enumerate.hpp"
#include "affdimer/errors.hpp"
#include "affdimer/moduli.hpp"
#include "affdimer/search.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace affdimer;

namespace {

Rational binomial(std::int64_t n, std::int64_t k) {
  Rational r(1);
  for (std::int64_t i = 1; i <= k; ++i) r = r * Rational(n - k + i, i);
  return r;
}

LatticePolygon rect(std::int64_t a, std::int64_t b) { return LatticePolygon::from_vertices({{0, 0}, {a, 0}, {a, b}, {0, b}}); }
LatticePolygon tri(std::int64_t a) { return LatticePolygon::from_vertices({{0, 0}, {a, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("degeneracy locus matches the general position check") {
  const std::vector<std::vector<IntVec2>> sets = {
      {{1, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, -2}},
      {{1, 0}, {0, 1}, {-1, -1}},
      {{2, 1}, {-1, 1}, {-1, -2}},
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
      {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
  };
  SplitMix64 g(3);
  for (const auto& cls : sets) {
    const DegeneracyLocus locus = build_degeneracy_locus(cls);
    CHECK(locus.dimension() == cls.size());
    int degenerate = 0;
    for (int t = 0; t < 400; ++t) {
      // Small denominators land on the locus often.
      std::vector<Rational> c;
      for (std::size_t i = 0; i < cls.size(); ++i) c.push_back(Rational(static_cast<std::int64_t>(g.below(6)), 6));
      const Arrangement a = realize(locus, c);
      const bool deg = is_degenerate(c, locus);
      CHECK(deg == !check_general_position(a).ok());
      degenerate += deg;
    }
    CHECK(degenerate > 0);
  }
}

TEST_CASE("locus constraints") {
  const DegeneracyLocus l = build_degeneracy_locus({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  // Two antiparallel pairs, no triple of pairwise non-parallel classes.
  CHECK(l.parallel_constraints.size() == 2);
  CHECK(l.triple_constraints.empty());
  for (const auto& pc : l.parallel_constraints) CHECK(pc.sigma == -1);
  const DegeneracyLocus t = build_degeneracy_locus({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(t.triple_constraints.size() == 1);
  CHECK(is_degenerate({Rational(0), Rational(0), Rational(0)}, t));
  CHECK_FALSE(is_degenerate({Rational(0), Rational(0), Rational(1, 2)}, t));
  CHECK(is_degenerate({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, build_degeneracy_locus({{1, 0}, {1, 0}, {-1, 0}})));
  CHECK_THROWS_AS(is_degenerate({Rational(0)}, t), InvalidInput);
}

TEST_CASE("random search on the figure polygon") {
  const LatticePolygon p = polygon_from_classes(test::figure_classes());
  const SearchOutcome o = random_search(p, 1000, 0);
  REQUIRE(o.status == SearchStatus::found);
  REQUIRE(o.certificate);
  CHECK(certificate_valid(p, *o.certificate));
  const AdmissibilityReport r = check_admissible(*o.certificate);
  CHECK(r.counts->f_x == 5);
  CHECK(r.counts->v == 13);
  CHECK(oracle::admissible_as_given(*o.certificate));
}

TEST_CASE("search results do not depend on the worker count") {
  const LatticePolygon p = rect(2, 2);
  SearchOptions one, three;
  one.workers = 1;
  three.workers = 3;
  for (std::uint64_t seed : {0ULL, 5ULL, 99ULL}) {
    const SearchOutcome a = random_search(p, 400, seed, one);
    const SearchOutcome b = random_search(p, 400, seed, three);
    CHECK(a.status == b.status);
    CHECK(a.found_at == b.found_at);
    CHECK(a.certificate == b.certificate);
    const VolumeEstimate va = estimate_admissible_volume(p, 300, seed, true, one);
    const VolumeEstimate vb = estimate_admissible_volume(p, 300, seed, true, three);
    CHECK(va.hits == vb.hits);
    CHECK(va.degenerate_resamples == vb.degenerate_resamples);
  }
}

TEST_CASE("search edge cases") {
  const LatticePolygon sq = rect(1, 1);
  CHECK(random_search(sq, 0, 0).status == SearchStatus::trials_exhausted);
  CHECK(random_search(sq, 100, 0).status == SearchStatus::found);
  CHECK_THROWS_AS(random_search(sq, -1, 0), InvalidInput);

  std::atomic<bool> stop{true};
  SearchOptions opt;
  opt.cancel = &stop;
  const SearchOutcome c = random_search(polygon_from_classes(test::figure_classes()), 100000, 0, opt);
  CHECK(c.status == SearchStatus::cancelled);
  CHECK_FALSE(c.certificate.has_value());
  CHECK(c.note.find("not") != std::string::npos);
}

TEST_CASE("mesh search") {
  const SearchOutcome o = mesh_search(rect(1, 1), 3);
  CHECK(o.status == SearchStatus::found);
  CHECK(o.resolution == 3);
  const SearchOutcome fig = mesh_search(polygon_from_classes(test::figure_classes()), 6);
  if (fig.status == SearchStatus::found) {
    CHECK(certificate_valid(polygon_from_classes(test::figure_classes()), *fig.certificate));
  } else {
    CHECK(fig.status == SearchStatus::exhausted_at_resolution);
  }
  // Without perturbation the degenerate grid points are skipped and counted.
  const SearchOutcome raw = mesh_search(tri(2), 2, false);
  CHECK(raw.degenerate_skips > 0);
  CHECK_THROWS_AS(mesh_search(rect(1, 1), 0), InvalidInput);
}

TEST_CASE("closed-form volumes") {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      CHECK(parallelogram_volume_exact(a, b) == Rational(4) / (binomial(2 * a, a) * binomial(2 * b, b)));
    }
    Rational fact(1), pow(1);
    for (std::int64_t i = 1; i <= a; ++i) {
      fact = fact * i;
      pow = pow * a;
    }
    CHECK(triangle_volume_exact(a) == fact / pow);
  }
  CHECK(parallelogram_volume_exact(1, 1) == Rational(1));
  CHECK(parallelogram_volume_exact(2, 1) == Rational(1, 3));
  CHECK(parallelogram_volume_exact(2, 2) == Rational(1, 9));
  CHECK(triangle_volume_exact(2) == Rational(1, 2));
  CHECK(triangle_volume_exact(3) == Rational(2, 9));

  auto cf = closed_form_volume(apply_matrix(IntMat2::from_rows(1, 1, 0, 1), rect(2, 3)));
  REQUIRE(cf);
  CHECK(cf->family == "parallelogram");
  CHECK(cf->volume == parallelogram_volume_exact(2, 3));
  cf = closed_form_volume(apply_matrix(IntMat2::from_rows(0, 1, 1, 0), tri(3)));
  REQUIRE(cf);
  CHECK(cf->family == "triangle");
  CHECK(cf->volume == Rational(2, 9));
  CHECK_FALSE(closed_form_volume(polygon_from_classes(test::figure_classes())));
}

TEST_CASE("volume estimates") {
  const VolumeEstimate sq = estimate_admissible_volume(rect(1, 1), 500, 1, true);
  CHECK(sq.estimate == Rational(1));
  CHECK(sq.std_error == 0.0);
  const VolumeEstimate v = estimate_admissible_volume(rect(2, 1), 3000, 4, true);
  CHECK(v.trials == 3000);
  CHECK(v.estimate == Rational(v.hits, 3000));
  CHECK(std::abs(v.estimate.to_double() - 1.0 / 3) <= 4 * v.std_error);
  const VolumeEstimate again = estimate_admissible_volume(rect(2, 1), 3000, 4, true);
  CHECK(again.hits == v.hits);
  CHECK_THROWS_AS(estimate_admissible_volume(rect(1, 1), 0, 0, true), InvalidInput);
}

TEST_CASE("reduced pair and search classes") {
  const LatticePolygon p = polygon_from_classes(test::figure_classes());
  const auto cls = search_classes(p);
  CHECK(cls.size() == 5);
  const auto [i, j] = reduced_pair(cls);
  CHECK(det2(cls[i], cls[j]) != 0);
  const auto [k, l] = reduced_pair({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(k == 0);
  CHECK(l == 2);
}

TEST_CASE("certify genus one polygons") {
  const auto polys = enumerate_polygons(1, 6);
  REQUIRE(polys.size() == 16);
  std::map<std::string, int> methods;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto c = certify_polygon(polys[i], 20000, derive_seed(0, i));
    REQUIRE(c);
    CHECK(certificate_valid(polys[i], c->certificate));
    ++methods[c->method.substr(0, c->method.find('/'))];
  }
  CHECK(methods["triangle"] == 5);
  CHECK(methods["search"] >= 1);
  CHECK_FALSE(certificate_valid(polys[0], Arrangement({{{1, 0}, Rational(0)}, {{-1, 0}, Rational(1, 2)}, {{0, 1}, Rational(1, 3)}, {{0, -1}, Rational(1, 5)}})));
}
