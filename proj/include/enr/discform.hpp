#pragma once

// Discriminant groups A_L = L^vee / L and their finite quadratic forms
// q : A_L -> Q/2Z, together with the isometry search and isotropic subgroup
// enumeration that drive all overlattice and gluing arguments.

#include "enr/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enr {

struct FiniteAbelianGroup {
  // d_1 | d_2 | ... | d_k, each > 1.
  std::vector<Integer> invariant_factors;
  // Rows are lifts of the generators to L (x) Q, in the defining basis.
  // Empty (0 x rank) for the trivial group.
  MatQ generator_lifts;

  Integer order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
  int num_generators() const { return static_cast<int>(invariant_factors.size()); }
};

// Group elements are coefficient vectors (x_1,...,x_k) with 0 <= x_i < d_i.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  // q_gen(i) = q(g_i) in [0,2); b_gen(i,j) = b(g_i,g_j) in [0,1).
  FiniteQuadraticForm(FiniteAbelianGroup group, VecQ q_gen, MatQ b_gen);

  const FiniteAbelianGroup& group() const { return group_; }
  const VecQ& q_gen() const { return q_gen_; }
  const MatQ& b_gen() const { return b_gen_; }

  Rational q(const VecZ& x) const;               // value in [0,2)
  Rational b(const VecZ& x, const VecZ& y) const;  // value in [0,1)

  VecZ reduce(const VecZ& x) const;
  VecZ add(const VecZ& x, const VecZ& y) const;
  VecZ negate(const VecZ& x) const;
  VecZ zero() const;
  Integer element_order(const VecZ& x) const;

  // All group elements, lexicographically.
  std::vector<VecZ> elements() const;

  FiniteQuadraticForm negated() const;  // q -> -q on the same group

 private:
  FiniteAbelianGroup group_;
  VecQ q_gen_;
  MatQ b_gen_;
};

FiniteAbelianGroup discriminant_group(const GramLattice& l);
FiniteQuadraticForm discriminant_form(const GramLattice& l);

int p_length(const FiniteAbelianGroup& g, const Integer& p);

enum class IsoVerdict { kIsometric, kNotIsometric, kUndecided };

struct IsometryResult {
  IsoVerdict verdict = IsoVerdict::kUndecided;
  // Row i is the image of generator g_i of the source form, as an element of
  // the target form. Present only for kIsometric.
  MatZ generator_images;
  std::string detail;
};

// Explicit generator-image search up to |A| <= search_bound; beyond that,
// invariant comparison only (order, invariant factors, q-value multiset),
// answering kUndecided unless the invariants differ.
IsometryResult qforms_isometric(const FiniteQuadraticForm& a,
                                const FiniteQuadraticForm& b,
                                const Integer& search_bound = Integer(10000));

struct IsotropicSubgroup {
  std::vector<VecZ> generators;  // minimal generating set found by the search
  std::vector<VecZ> elements;    // full sorted element list
  Integer order() const { return Integer(elements.size()); }
};

// Complete list of subgroups H with q|_H = 0 and b|_H = 0 (the trivial
// subgroup included), for group order up to enumeration_bound.
std::vector<IsotropicSubgroup> isotropic_subgroups(
    const FiniteQuadraticForm& q, const Integer& enumeration_bound = Integer(4096));

}  // namespace enr
