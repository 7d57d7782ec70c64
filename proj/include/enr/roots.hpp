#pragma once

// Root enumeration in negative definite lattices (bounded Fincke-Pohst with
// exact rational pivots) and the orthogonal-A2 embedding search.

#include "enr/lattice.hpp"

#include <optional>
#include <vector>

namespace enr {

struct RootSystem {
  GramLattice lattice;
  std::vector<VecZ> roots;  // all v with v.v = -2, closed under negation
};

// All vectors of square -2; requires a negative definite lattice.
RootSystem roots_of(const GramLattice& l);

// Vectors of given negative even square (used for -2 and -4 searches).
std::vector<VecZ> vectors_of_square(const GramLattice& l, const Integer& square);

struct A2Witness {
  // k pairs (r, s) with r.r = s.s = -2, r.s = 1, pairwise orthogonal blocks.
  std::vector<std::pair<VecZ, VecZ>> pairs;
};

// Searches for k pairwise orthogonal A2 configurations among the roots.
std::optional<A2Witness> admits_orthogonal_A2s(const RootSystem& r, int k);

}  // namespace enr
