#include "enr/lattice.hpp"

#include <stdexcept>

namespace enr {

namespace {

void validate(const MatZ& gram, bool allow_degenerate) {
  if (gram.rows() != gram.cols())
    throw std::invalid_argument("GramLattice: matrix not square");
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) % 2 != 0)
      throw std::invalid_argument("GramLattice: odd diagonal entry (lattice not even)");
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i))
        throw std::invalid_argument("GramLattice: matrix not symmetric");
  }
  if (!allow_degenerate && gram.rows() > 0 && det_exact(gram) == 0)
    throw std::invalid_argument("GramLattice: degenerate Gram matrix");
}

}  // namespace

GramLattice GramLattice::make(MatZ gram, std::string label) {
  validate(gram, false);
  return GramLattice(std::move(gram), std::move(label), false);
}

GramLattice GramLattice::make_degenerate_ok(MatZ gram, std::string label) {
  validate(gram, true);
  return GramLattice(std::move(gram), std::move(label), true);
}

Integer GramLattice::pair(const VecZ& a, const VecZ& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw std::invalid_argument("pair: vector size mismatch");
  return (a.transpose() * gram_ * b)(0);
}

Rational GramLattice::pair(const VecQ& a, const VecQ& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw std::invalid_argument("pair: vector size mismatch");
  return (a.transpose() * to_rational(gram_) * b)(0);
}

MatZ cartan_gram_A(int n) {
  MatZ g = MatZ::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) { g(i, i + 1) = 1; g(i + 1, i) = 1; }
  }
  return g;
}

MatZ cartan_gram_D(int n) {
  if (n < 3) throw std::invalid_argument("cartan_gram_D: need n >= 3");
  MatZ g = MatZ::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (int i = 0; i + 1 < n - 1; ++i) { g(i, i + 1) = 1; g(i + 1, i) = 1; }
  g(n - 3, n - 1) = 1;
  g(n - 1, n - 3) = 1;
  return g;
}

MatZ cartan_gram_E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("cartan_gram_E: n must be 6, 7 or 8");
  // Bourbaki: chain 1-3-4-5-...-n with vertex 2 attached to vertex 4.
  MatZ g = MatZ::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  auto link = [&](int a, int b) { g(a - 1, b - 1) = 1; g(b - 1, a - 1) = 1; };
  link(1, 3);
  link(2, 4);
  for (int v = 3; v < n; ++v) link(v, v + 1);
  return g;
}

namespace {

GramLattice base_named(const std::string& sym) {
  if (sym == "U") {
    MatZ g(2, 2);
    g << 0, 1, 1, 0;
    return GramLattice::make(g, "U");
  }
  if (sym.size() >= 2 && sym.front() == '<' && sym.back() == '>') {
    Integer n(sym.substr(1, sym.size() - 2));
    MatZ g(1, 1);
    g(0, 0) = n;
    return GramLattice::make(g, sym);
  }
  if (sym.size() >= 2 && (sym[0] == 'A' || sym[0] == 'D' || sym[0] == 'E')) {
    int n = std::stoi(sym.substr(1));
    if (sym[0] == 'A' && n >= 1) return GramLattice::make(cartan_gram_A(n), sym);
    if (sym[0] == 'D' && n >= 3) return GramLattice::make(cartan_gram_D(n), sym);
    if (sym[0] == 'E') return GramLattice::make(cartan_gram_E(n), sym);
  }
  throw std::invalid_argument("make_named_lattice: unknown symbol '" + sym + "'");
}

}  // namespace

GramLattice make_named_lattice(const std::string& symbol) {
  auto open = symbol.find('(');
  if (open == std::string::npos) return base_named(symbol);
  if (symbol.back() != ')')
    throw std::invalid_argument("make_named_lattice: bad symbol '" + symbol + "'");
  GramLattice base = base_named(symbol.substr(0, open));
  Integer k(symbol.substr(open + 1, symbol.size() - open - 2));
  GramLattice scaled = scale(base, k);
  return GramLattice::make(scaled.gram(), symbol);
}

GramLattice scale(const GramLattice& l, const Integer& n) {
  if (n == 0) throw std::invalid_argument("scale: zero factor");
  MatZ g = l.gram() * n;
  std::string label = l.label().empty() ? "" : l.label() + "(" + n.get_str() + ")";
  return l.degenerate_ok() ? GramLattice::make_degenerate_ok(g, label)
                           : GramLattice::make(g, label);
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  MatZ g = MatZ::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  bool deg = a.degenerate_ok() || b.degenerate_ok();
  return deg ? GramLattice::make_degenerate_ok(g, label) : GramLattice::make(g, label);
}

Integer determinant(const GramLattice& l) { return det_exact(l.gram()); }

Signature signature(const GramLattice& l) {
  const Eigen::Index n = l.rank();
  MatQ a = to_rational(l.gram());
  Signature sig;
  for (Eigen::Index t = 0; t < n; ++t) {
    if (a(t, t) == 0) {
      Eigen::Index diag = -1;
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (a(j, j) != 0) { diag = j; break; }
      if (diag >= 0) {
        a.row(t).swap(a.row(diag));
        a.col(t).swap(a.col(diag));
      } else {
        Eigen::Index off = -1;
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (a(t, j) != 0) { off = j; break; }
        if (off < 0)
          throw std::domain_error("signature: degenerate Gram matrix");
        // Congruence mix; pivot becomes 2*a(t,off) != 0 (all trailing
        // diagonal entries vanish in this branch).
        a.row(t) += a.row(off);
        a.col(t) += a.col(off);
      }
    }
    if (a(t, t) > 0) ++sig.n_plus; else ++sig.n_minus;
    for (Eigen::Index r = t + 1; r < n; ++r) {
      if (a(r, t) == 0) continue;
      Rational f = a(r, t) / a(t, t);
      a.row(r) -= f * a.row(t);
      a.col(r) -= f * a.col(t);
    }
  }
  return sig;
}

bool is_negative_definite(const GramLattice& l) {
  Signature s = signature(l);
  return s.n_plus == 0 && s.n_minus == l.rank();
}

}  // namespace enr
