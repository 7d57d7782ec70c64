#pragma once

// Linear codes over F_3 in canonical reduced-echelon form: kernels, weight
// distributions, the Griesmer bound and brute-force subspace enumeration.

#include "enr/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace enr {

// Entries in {0,1,2}; basis rows in reduced row-echelon form.
class TernaryCode {
 public:
  TernaryCode() = default;
  // Rows are reduced mod 3 and echelonized; dependent rows are dropped.
  static TernaryCode from_generators(const std::vector<std::vector<int>>& rows,
                                     int length);

  int length() const { return length_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  // All 3^dim codewords (including zero).
  std::vector<std::vector<int>> codewords() const;

 private:
  int length_ = 0;
  std::vector<std::vector<int>> basis_;
};

// Null space {x : m x = 0 over F_3} of an integer matrix reduced mod 3.
TernaryCode kernel_f3(const MatZ& m);

// Coefficient tuples (lambda_i mod p) with sum lambda_i v_i in p * Z^n;
// vectors are the rows of `vectors`, given in the coordinates of the ambient
// lattice basis. For p = 3 this is the 3-divisibility code.
TernaryCode divisibility_kernel(const MatZ& vectors, int p = 3);

// Multiset of Hamming weights of the nonzero codewords.
std::multiset<int> weight_distribution(const TernaryCode& c);

// Largest k with sum_{i<k} ceil(d / 3^i) <= n.
int griesmer_max_dim(int n, int d);

// Number of 1-dimensional subspaces, (3^k - 1) / 2.
Integer lines_count(const TernaryCode& c);

struct CodeSearchResult {
  std::optional<TernaryCode> witness;  // empty = completed search, none exists
  Integer subspaces_examined;
};

// Enumerates every k-dimensional subspace of F_3^n (canonical echelon forms)
// and reports either a code whose nonzero words all have weight in `weights`,
// or a completed-search certificate.
CodeSearchResult exhaustive_no_code(int n, int k, const std::set<int>& weights);

// Solution set of an affine F_3 system A m = rhs by enumeration of all 3^k
// tuples, cross-checked against the rank of the coefficient matrix.
struct F3SystemSolution {
  int rank = 0;
  std::vector<std::vector<int>> solutions;
};

F3SystemSolution solve_f3_system(const MatZ& a, const VecZ& rhs);

}  // namespace enr
