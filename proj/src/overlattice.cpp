#include "enr/overlattice.hpp"

#include <stdexcept>

namespace enr {

OverlatticeResult overlattice(const GramLattice& l, const MatQ& glue) {
  const Eigen::Index n = l.rank();
  if (glue.cols() != n && glue.rows() > 0)
    throw std::invalid_argument("overlattice: glue vector size mismatch");
  MatQ gram = to_rational(l.gram());

  for (Eigen::Index i = 0; i < glue.rows(); ++i) {
    VecQ v = glue.row(i).transpose();
    VecQ pairings = gram * v;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_integral(pairings(j)))
        throw std::invalid_argument("overlattice: glue vector not in the dual lattice");
    Rational vv = (v.transpose() * gram * v)(0);
    if (!is_integral(vv) || Integer(vv.get_num()) % 2 != 0)
      throw std::invalid_argument("overlattice: glue vector not isotropic (v.v not in 2Z)");
    for (Eigen::Index j = 0; j < glue.rows(); ++j) {
      Rational vw = (v.transpose() * gram * glue.row(j).transpose())(0);
      if (!is_integral(vw))
        throw std::invalid_argument("overlattice: glue vectors pair non-integrally");
    }
  }

  MatQ stacked(n + glue.rows(), n);
  stacked.topRows(n) = MatQ::Identity(n, n);
  stacked.bottomRows(glue.rows()) = glue;
  Integer den = common_denominator(stacked);
  MatZ scaled(stacked.rows(), n);
  for (Eigen::Index i = 0; i < stacked.rows(); ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational e = stacked(i, j) * Rational(den);
      scaled(i, j) = Integer(e.get_num());
    }
  MatZ h = row_hermite(scaled);
  if (h.rows() != n) throw std::logic_error("overlattice: rank drop");
  MatQ basis = to_rational(h) / Rational(den);

  MatQ new_gram_q = basis * gram * basis.transpose();
  MatZ new_gram = to_integer(new_gram_q);

  Integer det_l = det_exact(l.gram());
  Integer det_m = det_exact(new_gram);
  if (det_m == 0 || det_l % det_m != 0)
    throw std::logic_error("overlattice: determinant law violated");
  Integer idx = exact_sqrt(det_l / det_m);

  OverlatticeResult out{GramLattice::make(new_gram, l.label().empty() ? "" : l.label() + "^over"),
                        basis, idx};
  return out;
}

VecZ overlattice_coords(const OverlatticeResult& result, const VecQ& x) {
  VecQ y = solve_exact(result.basis.transpose(), x);
  return to_integer(y);
}

ComplementResult orthogonal_complement(const GramLattice& ambient,
                                       const MatZ& sub_basis_rows) {
  if (sub_basis_rows.cols() != ambient.rank())
    throw std::invalid_argument("orthogonal_complement: size mismatch");
  if (rank_exact(to_rational(sub_basis_rows)) != sub_basis_rows.rows())
    throw std::invalid_argument("orthogonal_complement: dependent sub-basis");
  MatQ restr = to_rational(sub_basis_rows) * to_rational(ambient.gram()) *
               to_rational(sub_basis_rows).transpose();
  if (rank_exact(restr) != sub_basis_rows.rows())
    throw std::invalid_argument("orthogonal_complement: degenerate Gram restriction");

  MatZ pairing = sub_basis_rows * ambient.gram();  // k x n, complement = kernel
  MatZ kernel = integer_kernel(pairing);
  MatZ gram = kernel * ambient.gram() * kernel.transpose();
  return ComplementResult{GramLattice::make_degenerate_ok(gram), kernel};
}

}  // namespace enr
