#pragma once

// Dense univariate polynomials over Q, the coefficient ring for all
// Weierstrass models. Canonical form: no trailing zero coefficients.

#include "enr/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace enr {

class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs);  // ascending powers
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  static RatPoly variable();  // t

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

PolyDivision divmod(const RatPoly& num, const RatPoly& den);
RatPoly pow(const RatPoly& base, int e);
RatPoly derivative(const RatPoly& p);
RatPoly monic(const RatPoly& p);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic gcd

// Multiplicity of the monic irreducible `place` in p (p nonzero).
int ord_at(const RatPoly& p, const RatPoly& place);

// Exact division; throws if the remainder is nonzero.
RatPoly exact_div(const RatPoly& num, const RatPoly& den);

// p(num/den) * den^degree_bound, for degree_bound >= deg p.
RatPoly homogenized_subst(const RatPoly& p, const RatPoly& num,
                          const RatPoly& den, int degree_bound);

// Exact polynomial square root by coefficient matching; nullopt if p is not
// a square in Q[t].
std::optional<RatPoly> poly_is_square(const RatPoly& p);

// Decomposition p = unit * s^2 with s monic, when p is a square up to a
// rational constant (i.e. a square over the complex function field).
struct SquarePart {
  Rational unit;
  RatPoly root;
};
std::optional<SquarePart> poly_square_up_to_unit(const RatPoly& p);

RatPoly parse_poly(const std::string& csv_of_fractions);  // "a0,a1,..."

}  // namespace enr
