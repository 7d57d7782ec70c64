#include "enr/matrix.hpp"

#include <stdexcept>

namespace enr {

MatQ to_rational(const MatZ& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

MatZ to_integer(const MatQ& m) {
  MatZ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        throw std::invalid_argument("to_integer: non-integral entry");
      r(i, j) = Integer(m(i, j).get_num());
    }
  return r;
}

VecZ to_integer(const VecQ& v) {
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v(i)))
      throw std::invalid_argument("to_integer: non-integral entry");
    r(i) = Integer(v(i).get_num());
  }
  return r;
}

Rational det_exact(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: not square");
  const Eigen::Index n = m.rows();
  MatQ a = m;
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (a(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer det_exact(const MatZ& m) {
  Rational d = det_exact(to_rational(m));
  if (!is_integral(d)) throw std::logic_error("det_exact: integer det not integral");
  return Integer(d.get_num());
}

Eigen::Index rank_exact(const MatQ& m) {
  MatQ a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(rank, c);
      for (Eigen::Index j = c; j < cols; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

MatQ inverse_exact(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse_exact: not square");
  const Eigen::Index n = m.rows();
  MatQ a = m;
  MatQ inv = MatQ::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (a(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("inverse_exact: singular matrix");
    a.row(pivot).swap(a.row(c));
    inv.row(pivot).swap(inv.row(c));
    Rational p = a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) { a(c, j) /= p; inv(c, j) /= p; }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

VecQ solve_exact(const MatQ& m, const VecQ& rhs) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (rhs.size() != rows) throw std::invalid_argument("solve_exact: size mismatch");
  MatQ a(rows, cols + 1);
  a.leftCols(cols) = m;
  a.col(cols) = rhs;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    Rational p = a(rank, c);
    for (Eigen::Index j = c; j <= cols; ++j) a(rank, j) /= p;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (Eigen::Index j = c; j <= cols; ++j) a(r, j) -= f * a(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (Eigen::Index r = rank; r < rows; ++r)
    if (a(r, cols) != 0) throw std::domain_error("solve_exact: inconsistent system");
  VecQ x = VecQ::Zero(cols);
  for (Eigen::Index i = 0; i < rank; ++i) x(pivot_col[i]) = a(i, cols);
  return x;
}

namespace {

// Truncated division step used during Smith reduction: a -> a - q*b with
// |a - q*b| < |b|.
Integer tdiv_q(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const MatZ& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithForm out;
  out.d = m;
  out.left = MatZ::Identity(rows, rows);
  out.right = MatZ::Identity(cols, cols);
  MatZ& a = out.d;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Locate a pivot of minimal absolute value in the trailing block.
    Eigen::Index pr = -1, pc = -1;
    Integer best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Integer v = abs(a(i, j));
        if (pr < 0 || v < best) { best = v; pr = i; pc = j; }
      }
    if (pr < 0) break;
    if (pr != t) { a.row(pr).swap(a.row(t)); out.left.row(pr).swap(out.left.row(t)); }
    if (pc != t) { a.col(pc).swap(a.col(t)); out.right.col(pc).swap(out.right.col(t)); }

    bool settled = false;
    while (!settled) {
      settled = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = tdiv_q(a(i, t), a(t, t));
        if (q != 0) { a.row(i) -= a.row(t) * q; out.left.row(i) -= out.left.row(t) * q; }
        if (a(i, t) != 0) {
          a.row(i).swap(a.row(t));
          out.left.row(i).swap(out.left.row(t));
          settled = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = tdiv_q(a(t, j), a(t, t));
        if (q != 0) { a.col(j) -= a.col(t) * q; out.right.col(j) -= out.right.col(t) * q; }
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          out.right.col(j).swap(out.right.col(t));
          settled = false;
        }
      }
      if (settled) {
        // Pivot must divide the rest of the block for d_i | d_{i+1}.
        for (Eigen::Index i = t + 1; i < rows && settled; ++i)
          for (Eigen::Index j = t + 1; j < cols && settled; ++j)
            if (a(i, j) % a(t, t) != 0) {
              a.row(t) += a.row(i);
              out.left.row(t) += out.left.row(i);
              settled = false;
            }
      }
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      out.left.row(t) = -out.left.row(t);
    }
  }
  return out;
}

MatZ integer_kernel(const MatZ& m) {
  SmithForm snf = smith_normal_form(m);
  const Eigen::Index cols = m.cols();
  const Eigen::Index steps = std::min(m.rows(), cols);
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < cols; ++j)
    if (j >= steps || snf.d(j, j) == 0) free_cols.push_back(j);
  MatZ kernel(static_cast<Eigen::Index>(free_cols.size()), cols);
  for (Eigen::Index k = 0; k < kernel.rows(); ++k)
    kernel.row(k) = snf.right.col(free_cols[k]).transpose();
  return kernel;
}

MatZ row_hermite(const MatZ& m) {
  MatZ a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r by gcd row operations.
    while (true) {
      Eigen::Index pivot = -1;
      Integer best = 0;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer v = abs(a(i, c));
        if (pivot < 0 || v < best) { best = v; pivot = i; }
      }
      if (pivot < 0) break;
      a.row(pivot).swap(a.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = tdiv_q(a(i, c), a(r, c));
        a.row(i) -= a.row(r) * q;
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      if (q != 0) a.row(i) -= a.row(r) * q;
    }
    ++r;
  }
  return a.topRows(r);
}

bool is_unimodular(const MatZ& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = det_exact(m);
  return d == 1 || d == -1;
}

Integer common_denominator(const MatQ& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

}  // namespace enr
