#include "enr/pencil.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace enr {

void TernaryForm::set(int a, int b, int c, const RatPoly& coeff) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != degree_)
    throw std::invalid_argument("TernaryForm::set: bad exponent triple");
  if (coeff.is_zero())
    terms_.erase({a, b, c});
  else
    terms_[{a, b, c}] = coeff;
}

RatPoly TernaryForm::get(int a, int b, int c) const {
  auto it = terms_.find({a, b, c});
  return it == terms_.end() ? RatPoly() : it->second;
}

bool TernaryForm::is_zero() const { return terms_.empty(); }

TernaryForm TernaryForm::partial(int var) const {
  TernaryForm out(degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::array<int, 3> d = e;
    d[var] -= 1;
    out.set(d[0], d[1], d[2], out.get(d[0], d[1], d[2]) + c * Rational(e[var]));
  }
  return out;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm out(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::array<int, 3> e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.set(e[0], e[1], e[2], out.get(e[0], e[1], e[2]) + ca * cb);
    }
  return out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("TernaryForm: degree mismatch");
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) out.set(e[0], e[1], e[2], out.get(e[0], e[1], e[2]) + c);
  return out;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("TernaryForm: degree mismatch");
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) out.set(e[0], e[1], e[2], out.get(e[0], e[1], e[2]) - c);
  return out;
}

TernaryForm parse_ternary_form(const std::string& monomials, int degree) {
  TernaryForm out(degree);
  std::istringstream is(monomials);
  std::string tok;
  while (is >> tok) {
    std::istringstream ts(tok);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ts, part, ',')) parts.push_back(part);
    if (parts.size() != 4)
      throw std::invalid_argument("parse_ternary_form: want coeff,a,b,c");
    Rational c = parse_fraction(parts[0]);
    int a = std::stoi(parts[1]), b = std::stoi(parts[2]), cc = std::stoi(parts[3]);
    out.set(a, b, cc, out.get(a, b, cc) + RatPoly::constant(c));
  }
  return out;
}

namespace {

// Quadric coefficient vector on the monomial basis x^2, y^2, z^2, yz, xz, xy.
std::array<RatPoly, 6> quadric_coeffs(const TernaryForm& q) {
  if (q.degree() != 2) throw std::invalid_argument("quadric_coeffs: degree != 2");
  return {q.get(2, 0, 0), q.get(0, 2, 0), q.get(0, 0, 2),
          q.get(0, 1, 1), q.get(1, 0, 1), q.get(1, 1, 0)};
}

RatPoly det6(std::array<std::array<RatPoly, 6>, 6>& m) {
  // Cofactor expansion; entries are small polynomials.
  std::vector<int> cols = {0, 1, 2, 3, 4, 5};
  std::function<RatPoly(int, std::vector<int>&)> rec =
      [&](int row, std::vector<int>& cs) -> RatPoly {
    if (cs.size() == 1) return m[row][cs[0]];
    RatPoly acc;
    for (size_t k = 0; k < cs.size(); ++k) {
      if (m[row][cs[k]].is_zero()) continue;
      std::vector<int> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      RatPoly minor = rec(row + 1, rest);
      RatPoly term = m[row][cs[k]] * minor;
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  return rec(0, cols);
}

}  // namespace

RatPoly resultant_three_quadrics(const TernaryForm& q1, const TernaryForm& q2,
                                 const TernaryForm& q3) {
  // Jacobian determinant of (q1, q2, q3): a cubic form.
  std::array<std::array<TernaryForm, 3>, 3> jac;
  const TernaryForm* qs[3] = {&q1, &q2, &q3};
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 3; ++v) jac[i][v] = qs[i]->partial(v);
  TernaryForm j = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1]) -
                  jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0]) +
                  jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);

  std::array<std::array<RatPoly, 6>, 6> m;
  m[0] = quadric_coeffs(q1);
  m[1] = quadric_coeffs(q2);
  m[2] = quadric_coeffs(q3);
  for (int v = 0; v < 3; ++v) m[3 + v] = quadric_coeffs(j.partial(v));
  RatPoly det = det6(m);
  // Normalization: Res(x^2, y^2, z^2) = 1 makes the constant 512.
  det *= make_fraction(1, 512);
  return det;
}

RatPoly pencil_discriminant(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != 3 || g.degree() != 3)
    throw std::invalid_argument("pencil_discriminant: cubics required");
  TernaryForm member(3);
  RatPoly t = RatPoly::variable();
  for (const auto& [e, c] : f.terms()) member.set(e[0], e[1], e[2], c);
  for (const auto& [e, c] : g.terms())
    member.set(e[0], e[1], e[2], member.get(e[0], e[1], e[2]) + c * t);
  return resultant_three_quadrics(member.partial(0), member.partial(1),
                                  member.partial(2));
}

std::vector<PencilPlace> cubic_pencil_singular_places(const TernaryForm& f,
                                                      const TernaryForm& g) {
  RatPoly disc = pencil_discriminant(f, g);
  if (disc.is_zero())
    throw std::domain_error("cubic_pencil_singular_places: identically singular pencil");
  std::vector<PencilPlace> out;
  Factorization fac = factor_rational(disc);
  for (const auto& p : fac.factors)
    out.push_back(PencilPlace{p.factor, false, p.multiplicity});
  if (disc.degree() < 12)
    out.push_back(PencilPlace{RatPoly(), true, 12 - disc.degree()});
  return out;
}

}  // namespace enr
