#pragma once

// Kodaira fiber types with their standard numerical data: Euler numbers,
// component counts, root lattices and local height contributions.

#include "enr/lattice.hpp"
#include "enr/numeric.hpp"

#include <optional>
#include <string>

namespace enr {

enum class KodairaClass { kIn, kInStar, kII, kIII, kIV, kIVStar, kIIIStar, kIIStar };

struct KodairaType {
  KodairaClass cls = KodairaClass::kIn;
  int n = 0;  // index for I_n / I_n*; unused otherwise

  static KodairaType In(int n) { return {KodairaClass::kIn, n}; }
  static KodairaType InStar(int n) { return {KodairaClass::kInStar, n}; }
  static KodairaType II() { return {KodairaClass::kII, 0}; }
  static KodairaType III() { return {KodairaClass::kIII, 0}; }
  static KodairaType IV() { return {KodairaClass::kIV, 0}; }
  static KodairaType IVStar() { return {KodairaClass::kIVStar, 0}; }
  static KodairaType IIIStar() { return {KodairaClass::kIIIStar, 0}; }
  static KodairaType IIStar() { return {KodairaClass::kIIStar, 0}; }

  bool additive() const { return cls != KodairaClass::kIn; }
  bool smooth() const { return cls == KodairaClass::kIn && n == 0; }

  std::string str() const;
  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.cls == b.cls && a.n == b.n;
  }
};

KodairaType parse_kodaira(const std::string& s);  // "I3", "I0*", "IV*", ...

int euler_contribution(const KodairaType& t);
int component_count(const KodairaType& t);

// Rank of the root lattice spanned by non-identity components.
int root_rank(const KodairaType& t);

// Determinant of that root lattice (absolute value); 1 for irreducible fibers.
Integer root_lattice_det(const KodairaType& t);

// Gram matrix of the non-identity components (negated Cartan of A_{n-1},
// D_{n+4}, A_1, A_2, E_6, E_7, E_8); rank-0 matrix for II and I_0 / I_1.
MatZ root_lattice_gram(const KodairaType& t);

// Local height contribution of a component. Component indexing:
//   I_n: 0..n-1 cyclically, contribution i(n-i)/n;
//   I_n*: 0 identity, 1 the near simple component (contribution 1),
//         2 and 3 the far simple components (contribution 1 + n/4);
//   III: 0,1 (1/2); IV: 0,1,2 (2/3); IV*: 0 identity, 1..3 simple (4/3);
//   III*: 0,1 (3/2); II, II*: only 0.
Rational local_contribution(const KodairaType& t, int component);

// Number of distinct contact component indices accepted by the type.
int contact_choices(const KodairaType& t);

}  // namespace enr
