#pragma once

// Exact dense linear algebra over Z and Q. Eigen supplies the containers and
// expressions; the algorithms below are fraction-free or plain rational
// elimination, since Eigen's decompositions assume floating point scalars.

#include "enr/numeric.hpp"

#include <Eigen/Dense>

#include <vector>

namespace enr {

using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

MatQ to_rational(const MatZ& m);
VecQ to_rational(const VecZ& v);

// Requires every entry to be integral.
MatZ to_integer(const MatQ& m);
VecZ to_integer(const VecQ& v);

Integer det_exact(const MatZ& m);
Rational det_exact(const MatQ& m);

Eigen::Index rank_exact(const MatQ& m);

// Inverse of a nonsingular rational matrix; throws on singular input.
MatQ inverse_exact(const MatQ& m);

// One solution x of m x = rhs; throws if the system is inconsistent.
VecQ solve_exact(const MatQ& m, const VecQ& rhs);

struct SmithForm {
  MatZ d;        // diagonal, d_i | d_{i+1}, nonnegative
  MatZ left;     // unimodular
  MatZ right;    // unimodular, left * m * right == d
};

SmithForm smith_normal_form(const MatZ& m);

// Basis (as rows) of {x in Z^n : m x = 0}; the result is saturated.
MatZ integer_kernel(const MatZ& m);

// Row-style Hermite form: returns the nonzero rows of an echelon basis of the
// row lattice of m (pivots positive, entries above pivots reduced).
MatZ row_hermite(const MatZ& m);

bool is_unimodular(const MatZ& m);

// Common denominator of all entries.
Integer common_denominator(const MatQ& m);

}  // namespace enr
