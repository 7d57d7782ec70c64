#pragma once

// Even integer lattices presented by exact Gram matrices.
//
// Conventions: root lattices A_n, D_n, E6, E7, E8 are negative definite
// (negated Cartan matrices, Bourbaki vertex numbering); U is the hyperbolic
// plane [[0,1],[1,0]].

#include "enr/matrix.hpp"

#include <string>
#include <utility>

namespace enr {

class GramLattice {
 public:
  // Validates symmetry, even diagonal and (by default) nondegeneracy.
  static GramLattice make(MatZ gram, std::string label = "");
  // Same checks except the determinant may vanish.
  static GramLattice make_degenerate_ok(MatZ gram, std::string label = "");

  const MatZ& gram() const { return gram_; }
  Eigen::Index rank() const { return gram_.rows(); }
  const std::string& label() const { return label_; }
  bool degenerate_ok() const { return degenerate_ok_; }

  Integer pair(const VecZ& a, const VecZ& b) const;
  Rational pair(const VecQ& a, const VecQ& b) const;

 private:
  GramLattice(MatZ gram, std::string label, bool degenerate_ok)
      : gram_(std::move(gram)), label_(std::move(label)),
        degenerate_ok_(degenerate_ok) {}
  MatZ gram_;
  std::string label_;
  bool degenerate_ok_ = false;
};

// Symbols: "An"/"Dn" (n >= 1), "E6", "E7", "E8", "U", "<n>" for the rank-one
// lattice [[n]] (n even), each optionally followed by "(k)" for the scaled
// lattice L(k). Examples: "A2", "U(2)", "E8(2)", "<12>".
GramLattice make_named_lattice(const std::string& symbol);

GramLattice scale(const GramLattice& l, const Integer& n);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

Integer determinant(const GramLattice& l);

struct Signature {
  Eigen::Index n_plus = 0;
  Eigen::Index n_minus = 0;
};

// Exact inertia counts via symmetric Gaussian elimination over Q; throws on
// degenerate Gram matrices.
Signature signature(const GramLattice& l);

bool is_negative_definite(const GramLattice& l);

// Negated Cartan matrices in Bourbaki numbering.
MatZ cartan_gram_A(int n);
MatZ cartan_gram_D(int n);
MatZ cartan_gram_E(int n);  // n in {6,7,8}

}  // namespace enr
