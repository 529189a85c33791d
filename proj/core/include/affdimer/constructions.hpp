#pragma once

#include <cstdint>
#include <vector>

#include "affdimer/admissibility.hpp"
#include "affdimer/arrangement.hpp"

namespace affdimer {

/// Basis of a full-rank sublattice, as the columns of an integer matrix.
struct SublatticeSpec {
  IntMat2 basis;

  std::int64_t det() const { return basis.det(); }
  std::int64_t covolume() const { return det() < 0 ? -det() : det(); }
};

/// Adds a line of class h and one of class -h just to the left of line
/// `line_index` (class h), inside the band free of other features. The two
/// new lines are appended. Requires an admissible input that matches its
/// classes; the output is re-verified.
Arrangement add_parallel_pair(const Arrangement& a, std::size_t line_index);

/// One line per class of `classes` at seeded generic offsets, each followed
/// by a close antiparallel companion. Lines may come back reversed (class -h,
/// offset -c) so that the result matches its own classes.
Arrangement double_everything(const std::vector<IntVec2>& classes, std::uint64_t seed);

/// Pulls the arrangement back along the covering R^2/L -> R^2/Z^2, written in
/// the coordinates of L's basis. Homology polygon becomes adj(basis)(P).
Arrangement lift_sublattice(const Arrangement& a, const SublatticeSpec& l);

/// Homology polygon becomes B(P).
Arrangement apply_linear_to_dimer(const Arrangement& a, const IntMat2& b);

/// Dimer whose polygon is the triangle with vertices 0, u, w.
Arrangement triangle_dimer(const IntVec2& u, const IntVec2& w);

/// The three-line unit-triangle dimer every triangle is lifted from.
const Arrangement& base_triangle_dimer();

/// Throws InternalError unless `a` is admissible and matches its classes.
AdmissibilityReport verify_dimer(const Arrangement& a, const char* what);

}  // namespace affdimer
