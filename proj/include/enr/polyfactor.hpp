#pragma once

// Factorization over Q for the small-degree polynomials that show up as
// discriminants: squarefree decomposition, rational roots, full handling of
// degrees <= 4, and a mod-p irreducibility certificate for the rest.

#include "enr/poly.hpp"

#include <vector>

namespace enr {

struct PolyFactor {
  RatPoly factor;  // monic irreducible
  int multiplicity = 0;
};

struct Factorization {
  Rational unit;  // leading content, so that unit * prod factor^mult == p
  std::vector<PolyFactor> factors;
};

// Yun's algorithm: p = unit * prod part_i^i with the parts squarefree and
// pairwise coprime (parts monic; trivial parts omitted).
std::vector<PolyFactor> squarefree_decomposition(const RatPoly& p);

// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p);

// Complete factorization into monic irreducibles. Degrees up to 4 are always
// resolved; higher degrees fall back to a mod-p irreducibility certificate
// and throw if none of the tried primes certifies the remaining factor.
Factorization factor_rational(const RatPoly& p);

// True if p (nonconstant, squarefree) is certified irreducible: complete
// criteria in degree <= 3 after root search, resolvent analysis in degree 4,
// reduction mod small primes beyond.
bool is_irreducible(const RatPoly& p);

}  // namespace enr
