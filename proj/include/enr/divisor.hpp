#pragma once

// Divisor classes on an Enriques surface: Num(S) = U + E8 in a fixed basis
// (e, f, then the eight E8 simple roots in Bourbaki order), Picard-Lefschetz
// reflections, pullback to the K3 cover, and fiber-support decompositions.

#include "enr/code3.hpp"
#include "enr/kodaira.hpp"
#include "enr/lattice.hpp"

#include <string>
#include <vector>

namespace enr {

enum class Ambient { kNumS, kCoverNumS };

const GramLattice& num_s_lattice();        // U + E8
const GramLattice& cover_num_s_lattice();  // U(2) + E8(2)

struct DivisorClass {
  VecZ coords;  // length 10
  Ambient ambient = Ambient::kNumS;

  static DivisorClass num_s(VecZ coords);
  static DivisorClass cover(VecZ coords);
  static DivisorClass basis_vector(int i, Ambient a = Ambient::kNumS);

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.ambient == b.ambient && a.coords == b.coords;
  }
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(const Integer& n) const;
};

Integer intersect(const DivisorClass& a, const DivisorClass& b);
Integer self_intersection(const DivisorClass& a);

// s_E(D) = D + (D.E) E; requires E.E = -2.
DivisorClass reflect(const DivisorClass& d, const DivisorClass& e);

struct ReflectionWord {
  std::vector<DivisorClass> steps;  // applied left to right (steps[0] first)
};

DivisorClass apply_word(const ReflectionWord& w, DivisorClass d);

// Same coordinates in the U(2) + E8(2) ambient; all pairings double.
DivisorClass pullback_to_cover(const DivisorClass& d);

// A singular fiber with explicit component classes. `multiplicities` are the
// Kodaira multiplicities; the component sum with multiplicities equals 2H
// (or H when the fiber is a half-pencil).
struct FiberDivisor {
  KodairaType type;
  std::vector<DivisorClass> components;
  std::vector<int> multiplicities;
  bool half_pencil = false;
};

// Validates component count, multiplicity multiset, the half-pencil rule for
// additive fibers, and the fiber-sum identity against h.
void validate_fiber(const FiberDivisor& f, const DivisorClass& h);

struct FiberDecomposition {
  Integer n;                   // D = n H + D_tilde
  int fiber_index = -1;        // fiber carrying D_tilde
  std::vector<Integer> coeffs; // component coefficients of D_tilde
};

// Decomposes D (orthogonal to H, supported on H and fiber components) as
// n H + D_tilde with 0 < D_tilde < 2H (< H on a half-pencil), D_tilde
// supported on a single fiber.
FiberDecomposition fiber_decompose(const DivisorClass& d,
                                   const std::vector<FiberDivisor>& fibers,
                                   const DivisorClass& h);

// The F_3 linear system attached to half-pencil multiplicity constraints:
// rows of `coeffs` times the unknown vector equals rhs mod 3.
struct HMultiplicitySystem {
  MatZ coeffs;
  VecZ rhs;
};

F3SystemSolution h_multiplicity_system(const HMultiplicitySystem& sys);

}  // namespace enr
