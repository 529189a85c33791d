#pragma once

#include <cstdint>
#include <vector>

#include "affdimer/polygon.hpp"

namespace affdimer {

/// One representative per GL2(Z)+translation class of convex lattice
/// polygons with exactly `genus` interior points that fit (after
/// translation) in [0, bound]^2. Representatives are in canonical form and
/// sorted by (vertex count, twice area, canonical vertex list).
///
/// Supported genera are 0, 1 and 2; bound must be at least 4. Genus 1 and 2
/// are finite classifications that saturate at bound 6.
std::vector<LatticePolygon> enumerate_polygons(std::int64_t genus, std::int64_t bound);

}  // namespace affdimer
