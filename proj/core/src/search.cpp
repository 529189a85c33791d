#include "affdimer/search.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

#include "affdimer/admissibility.hpp"
#include "affdimer/errors.hpp"
#include "affdimer/random.hpp"

namespace affdimer {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool cancelled(const SearchOptions& opt) { return opt.cancel && opt.cancel->load(std::memory_order_relaxed); }

unsigned resolve_workers(const SearchOptions& opt) { return opt.workers ? opt.workers : default_workers(); }

// Runs fn(i) for i in [begin, end) on up to `workers` threads; fn writes its
// own slot, so the merge order is fixed.
void parallel_for(std::int64_t begin, std::int64_t end, unsigned workers, const std::function<void(std::int64_t)>& fn) {
  const std::int64_t count = end - begin;
  if (workers <= 1 || count < 2 * static_cast<std::int64_t>(workers)) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = begin + w * chunk;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn, &err = errors[w]] {
      try {
        for (std::int64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

enum class TrialResult : std::uint8_t { degenerate, miss, pseudo, hit };

struct SearchSetup {
  std::vector<IntVec2> classes;
  DegeneracyLocus locus;
  std::pair<std::size_t, std::size_t> fixed;
};

SearchSetup setup_for(const LatticePolygon& p) {
  SearchSetup s;
  s.classes = search_classes(p);
  s.locus = build_degeneracy_locus(s.classes);
  s.fixed = reduced_pair(s.classes);
  return s;
}

std::vector<Rational> sample(SplitMix64& rng, const SearchSetup& s, bool reduce) {
  std::vector<Rational> c(s.classes.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (reduce && (i == s.fixed.first || i == s.fixed.second)) continue;
    c[i] = rng.offset();
  }
  return c;
}

TrialResult evaluate(const SearchSetup& s, const std::vector<Rational>& offsets) {
  if (is_degenerate(offsets, s.locus)) return TrialResult::degenerate;
  const AdmissibilityReport r = check_admissible(realize(s.locus, offsets));
  if (!r.admissible) return TrialResult::miss;
  return r.matches_prescribed ? TrialResult::hit : TrialResult::pseudo;
}

Rational central_binomial(std::int64_t a) {
  Rational c(1);
  for (std::int64_t i = 1; i <= a; ++i) c = c * (a + i) / i;
  return c;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("AFFDIMER_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted_at_resolution: return "exhausted_at_resolution";
    case SearchStatus::trials_exhausted: return "trials_exhausted";
    case SearchStatus::cancelled: return "cancelled";
  }
  return "trials_exhausted";
}

std::vector<IntVec2> search_classes(const LatticePolygon& p) { return classes_from_polygon(p).sorted(); }

std::pair<std::size_t, std::size_t> reduced_pair(const std::vector<IntVec2>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (det2(classes[i], classes[j]) != 0) return {i, j};
    }
  }
  throw InvalidInput("all classes are parallel");
}

SearchOutcome random_search(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                            const SearchOptions& opt) {
  const auto t0 = Clock::now();
  if (trials < 0) throw InvalidInput("random_search: trials must be >= 0");
  const SearchSetup s = setup_for(p);
  const unsigned workers = resolve_workers(opt);
  SearchOutcome out;
  const std::int64_t batch = 64 * static_cast<std::int64_t>(workers);
  std::vector<TrialResult> results;
  for (std::int64_t begin = 0; begin < trials; begin += batch) {
    if (cancelled(opt)) {
      out.status = SearchStatus::cancelled;
      break;
    }
    const std::int64_t end = std::min(trials, begin + batch);
    results.assign(static_cast<std::size_t>(end - begin), TrialResult::miss);
    parallel_for(begin, end, workers, [&](std::int64_t t) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      results[static_cast<std::size_t>(t - begin)] = evaluate(s, sample(rng, s, true));
    });
    for (std::int64_t t = begin; t < end; ++t) {
      const TrialResult r = results[static_cast<std::size_t>(t - begin)];
      ++out.trials;
      if (r == TrialResult::degenerate) ++out.degenerate_skips;
      if (r == TrialResult::pseudo) ++out.pseudo_dimers;
      if (r == TrialResult::hit) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        out.certificate = realize(s.locus, sample(rng, s, true));
        out.status = SearchStatus::found;
        out.found_at = t;
        break;
      }
    }
    if (out.status == SearchStatus::found) break;
  }
  if (out.status == SearchStatus::trials_exhausted || out.status == SearchStatus::cancelled) {
    out.note = "inconclusive: no dimer found in the sampled offsets; this does not show that none exists";
  }
  out.wall_ms = ms_since(t0);
  return out;
}

SearchOutcome mesh_search(const LatticePolygon& p, std::int64_t m, bool perturb, const SearchOptions& opt) {
  const auto t0 = Clock::now();
  if (m < 1) throw InvalidInput("mesh_search: m must be >= 1");
  const SearchSetup s = setup_for(p);
  const std::size_t n = s.classes.size();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != s.fixed.first && i != s.fixed.second) free.push_back(i);
  }
  std::int64_t total = 1;
  for (std::size_t q = 0; q < free.size(); ++q) {
    if (total > 100'000'000 / m) throw InvalidInput("mesh_search: grid has more than 10^8 points");
    total *= m;
  }

  SearchOutcome out;
  out.resolution = m;
  static constexpr std::int64_t primes[] = {3, 5, 7, 11, 13};
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (cancelled(opt)) {
      out.status = SearchStatus::cancelled;
      break;
    }
    std::vector<Rational> c(n);
    std::int64_t rest = idx;
    for (std::size_t q = 0; q < free.size(); ++q) {
      c[free[q]] = Rational(rest % m, m);
      rest /= m;
    }
    ++out.trials;
    if (is_degenerate(c, s.locus)) {
      bool fixed = false;
      if (perturb) {
        for (std::int64_t r : primes) {
          std::vector<Rational> shifted = c;
          Rational step = Rational(1, 2 * m) / r;
          for (std::size_t q = 0; q < free.size(); ++q, step /= r) shifted[free[q]] += step;
          if (!is_degenerate(shifted, s.locus)) {
            c = std::move(shifted);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) {
        ++out.degenerate_skips;
        continue;
      }
    }
    const TrialResult r = evaluate(s, c);
    if (r == TrialResult::pseudo) ++out.pseudo_dimers;
    if (r == TrialResult::hit) {
      out.status = SearchStatus::found;
      out.certificate = realize(s.locus, c);
      out.found_at = idx;
      break;
    }
  }
  if (out.status != SearchStatus::found && out.status != SearchStatus::cancelled) {
    out.status = SearchStatus::exhausted_at_resolution;
  }
  if (out.status != SearchStatus::found) {
    out.note = "inconclusive: the grid at this resolution holds no dimer; a finer grid may";
  }
  out.wall_ms = ms_since(t0);
  return out;
}

VolumeEstimate estimate_admissible_volume(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                                          bool reduce, const SearchOptions& opt) {
  if (trials < 1) throw InvalidInput("estimate_admissible_volume: trials must be >= 1");
  const SearchSetup s = setup_for(p);
  const unsigned workers = resolve_workers(opt);
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(trials), 0);
  std::vector<std::int64_t> resamples(static_cast<std::size_t>(trials), 0);
  parallel_for(0, trials, workers, [&](std::int64_t t) {
    if (cancelled(opt)) return;
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const TrialResult r = evaluate(s, sample(rng, s, reduce));
      if (r == TrialResult::degenerate) {
        ++resamples[static_cast<std::size_t>(t)];
        continue;
      }
      hit[static_cast<std::size_t>(t)] = r == TrialResult::hit;
      return;
    }
    throw InternalError("estimate_admissible_volume: sampler keeps hitting the degeneracy locus");
  });
  if (cancelled(opt)) throw InvalidInput("estimate_admissible_volume: cancelled");
  VolumeEstimate v;
  v.trials = trials;
  v.seed = seed;
  v.reduced = reduce;
  for (std::int64_t t = 0; t < trials; ++t) {
    v.hits += hit[static_cast<std::size_t>(t)];
    v.degenerate_resamples += resamples[static_cast<std::size_t>(t)];
  }
  v.estimate = Rational(v.hits, trials);
  const double e = v.estimate.to_double();
  v.std_error = std::sqrt(e * (1 - e) / static_cast<double>(trials));
  return v;
}

Rational parallelogram_volume_exact(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidInput("parallelogram_volume_exact: a and b must be >= 1");
  return Rational(4) / (central_binomial(a) * central_binomial(b));
}

Rational triangle_volume_exact(std::int64_t a) {
  if (a < 1) throw InvalidInput("triangle_volume_exact: a must be >= 1");
  Rational v(1);
  for (std::int64_t i = 1; i <= a; ++i) v = v * Rational(i, a);
  return v;
}

std::optional<ClosedForm> closed_form_volume(const LatticePolygon& p) {
  const PolygonMetrics m = polygon_metrics(p);
  if (p.size() == 4) {
    const std::int64_t ab = m.area2 / 2;
    for (std::int64_t b = 1; b * b <= ab; ++b) {
      if (ab % b != 0) continue;
      const std::int64_t a = ab / b;
      const auto rect = LatticePolygon::from_vertices({{0, 0}, {a, 0}, {a, b}, {0, b}});
      if (equivalent(p, rect)) return ClosedForm{"parallelogram", a, b, parallelogram_volume_exact(a, b)};
    }
  }
  if (p.size() == 3) {
    const std::int64_t a = m.area2;
    const auto tri = LatticePolygon::from_vertices({{0, 0}, {a, 0}, {0, 1}});
    if (equivalent(p, tri)) return ClosedForm{"triangle", a, 1, triangle_volume_exact(a)};
  }
  return std::nullopt;
}

}  // namespace affdimer
