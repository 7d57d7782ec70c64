#pragma once

// Pencils of plane cubics F + t G and their discriminant in Q[t], via the
// classical determinantal formula for the resultant of the three partial
// derivatives (three ternary quadrics).

#include "enr/poly.hpp"
#include "enr/polyfactor.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace enr {

// Homogeneous form in x, y, z with coefficients in Q[t]: exponent triple
// (a,b,c) with a+b+c = degree -> coefficient polynomial.
class TernaryForm {
 public:
  TernaryForm() = default;
  explicit TernaryForm(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  void set(int a, int b, int c, const RatPoly& coeff);
  RatPoly get(int a, int b, int c) const;
  const std::map<std::array<int, 3>, RatPoly>& terms() const { return terms_; }

  TernaryForm partial(int var) const;  // var: 0 = x, 1 = y, 2 = z

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);

  bool is_zero() const;

 private:
  int degree_ = 0;
  std::map<std::array<int, 3>, RatPoly> terms_;  // only nonzero entries
};

// Parses "x^3 + y^3 + z^3", "(x+y)*(y+z)*(z+x)", "3*x*y*z" style products of
// linear/monomial factors is NOT attempted; input is a monomial list like
// "1,3,0,0 1,0,3,0" (coeff,a,b,c separated by spaces). Programmatic builders
// below cover the shipped pencils.
TernaryForm parse_ternary_form(const std::string& monomials, int degree);

// Resultant of three ternary quadrics (degree 4 in each argument's
// coefficients), computed as det of the 6x6 matrix of the three quadrics and
// the three partials of their Jacobian determinant, normalized so that
// Res(x^2, y^2, z^2) = 1.
RatPoly resultant_three_quadrics(const TernaryForm& q1, const TernaryForm& q2,
                                 const TernaryForm& q3);

// Discriminant (up to a nonzero rational constant) of the cubic F + t G as a
// polynomial in t.
RatPoly pencil_discriminant(const TernaryForm& f, const TernaryForm& g);

struct PencilPlace {
  RatPoly place;  // monic irreducible in t, or zero polynomial for infinity
  bool at_infinity = false;
  int multiplicity = 0;
};

// Factored vanishing locus of the pencil discriminant, multiplicity at
// infinity = 12 - deg. Throws if the pencil is identically singular.
std::vector<PencilPlace> cubic_pencil_singular_places(const TernaryForm& f,
                                                      const TernaryForm& g);

}  // namespace enr
