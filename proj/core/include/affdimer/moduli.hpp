#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "affdimer/arrangement.hpp"

namespace affdimer {

/// c_i - sigma * c_j in Z, sigma = +1 for parallel and -1 for antiparallel
/// classes.
struct ParallelConstraint {
  std::size_t i;
  std::size_t j;
  int sigma;
  friend bool operator==(const ParallelConstraint&, const ParallelConstraint&) = default;
};

/// <(c_i, c_j, c_k), nu> in modulus * Z, where nu is the cross product of the
/// two columns of the 3x2 matrix with rows a_i, a_j, a_k.
struct TripleConstraint {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  std::array<std::int64_t, 3> nu;
  std::int64_t modulus;
  friend bool operator==(const TripleConstraint&, const TripleConstraint&) = default;
};

struct DegeneracyLocus {
  std::vector<IntVec2> classes;
  std::vector<ParallelConstraint> parallel_constraints;
  std::vector<TripleConstraint> triple_constraints;

  std::size_t dimension() const { return classes.size(); }
};

/// Classes need only be primitive; the zero-sum condition is not used.
DegeneracyLocus build_degeneracy_locus(const std::vector<IntVec2>& classes);

/// Exact membership of the offset vector in the locus.
bool is_degenerate(const std::vector<Rational>& offsets, const DegeneracyLocus& locus);

/// Arrangement with the locus' classes at the given offsets (reduced mod 1).
Arrangement realize(const DegeneracyLocus& locus, const std::vector<Rational>& offsets);

}  // namespace affdimer
