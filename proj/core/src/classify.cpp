#include "affdimer/classify.hpp"

#include <algorithm>

#include "affdimer/constructions.hpp"
#include "affdimer/enumerate.hpp"
#include "affdimer/errors.hpp"
#include "affdimer/random.hpp"

namespace affdimer {

namespace {

std::int64_t multiplicity(const std::vector<IntVec2>& v, const IntVec2& h) {
  return std::count(v.begin(), v.end(), h);
}

bool symmetric(const std::vector<IntVec2>& classes) {
  return std::all_of(classes.begin(), classes.end(),
                     [&](const IntVec2& h) { return multiplicity(classes, h) == multiplicity(classes, -h); });
}

// One representative (upper half-plane) per antiparallel pair.
std::vector<IntVec2> halves(const std::vector<IntVec2>& classes) {
  std::vector<IntVec2> out;
  for (const auto& h : classes) {
    if (h.y > 0 || (h.y == 0 && h.x > 0)) out.push_back(h);
  }
  return out;
}

}  // namespace

bool certificate_valid(const LatticePolygon& p, const Arrangement& certificate) {
  try {
    const AdmissibilityReport r = check_admissible(certificate);
    if (!r.admissible || !r.matches_prescribed) return false;
    return HomologyMultiset(certificate.classes()) == classes_from_polygon(p);
  } catch (const InvalidInput&) {
    return false;
  }
}

std::optional<Certification> certify_polygon(const LatticePolygon& p, std::int64_t trials, std::uint64_t seed,
                                             const SearchOptions& opt) {
  const std::vector<IntVec2> classes = search_classes(p);

  if (p.size() == 3) {
    const auto& v = p.vertices();
    return Certification{"triangle", triangle_dimer(v[1] - v[0], v[2] - v[0]), 0};
  }

  if (symmetric(classes)) return Certification{"double", double_everything(halves(classes), seed), 0};

  for (const auto& h : classes) {
    if (multiplicity(classes, -h) == 0 || multiplicity(classes, h) < 2) continue;
    std::vector<IntVec2> rest = classes;
    rest.erase(std::find(rest.begin(), rest.end(), h));
    rest.erase(std::find(rest.begin(), rest.end(), -h));
    const bool all_parallel =
        std::all_of(rest.begin(), rest.end(), [&](const IntVec2& x) { return det2(rest[0], x) == 0; });
    if (all_parallel) continue;
    const LatticePolygon smaller = polygon_from_classes(HomologyMultiset(rest));
    auto sub = certify_polygon(smaller, trials, seed, opt);
    if (!sub) continue;
    const auto& lines = sub->certificate.lines();
    const auto it = std::find_if(lines.begin(), lines.end(), [&](const TorusLine& l) { return l.h == h || l.h == -h; });
    if (it == lines.end()) throw InternalError("add-pair recursion lost the class it needs");
    const auto idx = static_cast<std::size_t>(it - lines.begin());
    return Certification{"add-pair/" + sub->method, add_parallel_pair(sub->certificate, idx), sub->search_trials};
  }

  const SearchOutcome o = random_search(p, trials, seed, opt);
  if (o.status != SearchStatus::found) return std::nullopt;
  return Certification{"search", *o.certificate, o.trials};
}

std::size_t ClassificationReport::certified() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const ClassRecord& r) { return r.verified; }));
}

std::map<std::string, int> ClassificationReport::by_method() const {
  std::map<std::string, int> m;
  for (const auto& r : classes) {
    if (r.method.empty()) continue;
    m[r.method.substr(0, r.method.find('/'))]++;
  }
  return m;
}

ClassificationReport classify_genus(std::int64_t g, std::int64_t trials_per_class, std::uint64_t seed,
                                    std::int64_t volume_trials, std::int64_t bound, const SearchOptions& opt) {
  ClassificationReport rep;
  rep.genus = g;
  rep.bound = bound;
  const auto polys = enumerate_polygons(g, bound);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    ClassRecord rec;
    rec.index = i;
    rec.polygon = polys[i];
    rec.metrics = polygon_metrics(polys[i]);
    const std::uint64_t class_seed = derive_seed(seed, i);
    if (auto c = certify_polygon(polys[i], trials_per_class, class_seed, opt)) {
      rec.method = c->method;
      rec.verified = certificate_valid(polys[i], c->certificate);
      rec.certificate = std::move(c->certificate);
    }
    if (volume_trials > 0) {
      rec.volume = estimate_admissible_volume(polys[i], volume_trials, class_seed, true, opt);
    }
    rep.classes.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace affdimer
