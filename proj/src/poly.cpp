#include "enr/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace enr {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::variable() { return monomial(Rational(1), 1); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational RatPoly::leading() const {
  if (is_zero()) return Rational(0);
  return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) os << fraction_str(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

PolyDivision divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rational> rem(num.coeffs());
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {RatPoly(), num};
  std::vector<Rational> quot(dn - dd + 1, Rational(0));
  for (int k = dn; k >= dd; --k) {
    Rational c = rem[k] / den.leading();
    if (c == 0) continue;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly pow(const RatPoly& base, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  RatPoly r = RatPoly::constant(1);
  RatPoly b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RatPoly derivative(const RatPoly& p) {
  if (p.degree() < 1) return RatPoly();
  std::vector<Rational> d(p.degree());
  for (int k = 1; k <= p.degree(); ++k) d[k - 1] = p.coeff(k) * Rational(k);
  return RatPoly(std::move(d));
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  RatPoly r = p;
  r *= Rational(1) / p.leading();
  return r;
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return monic(x);
}

int ord_at(const RatPoly& p, const RatPoly& place) {
  if (p.is_zero()) throw std::domain_error("ord_at: zero polynomial");
  if (place.degree() < 1) throw std::invalid_argument("ord_at: constant place");
  int ord = 0;
  RatPoly cur = p;
  while (true) {
    PolyDivision d = divmod(cur, place);
    if (!d.remainder.is_zero()) return ord;
    cur = d.quotient;
    ++ord;
  }
}

RatPoly exact_div(const RatPoly& num, const RatPoly& den) {
  PolyDivision d = divmod(num, den);
  if (!d.remainder.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return d.quotient;
}

RatPoly homogenized_subst(const RatPoly& p, const RatPoly& num, const RatPoly& den,
                          int degree_bound) {
  if (degree_bound < p.degree())
    throw std::invalid_argument("homogenized_subst: bound below degree");
  RatPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    out += RatPoly::constant(p.coeff(k)) * pow(num, k) * pow(den, degree_bound - k);
  }
  if (p.is_zero()) return RatPoly();
  return out;
}

std::optional<RatPoly> poly_is_square(const RatPoly& p) {
  if (p.is_zero()) return RatPoly();
  int d = p.degree();
  if (d % 2 != 0) return std::nullopt;
  if (!is_square(p.leading())) return std::nullopt;
  int m = d / 2;
  std::vector<Rational> q(m + 1, Rational(0));
  q[m] = sqrt_rational(p.leading());
  // Match coefficients of t^(d-1), t^(d-2), ..., t^m; each determines the
  // next unknown linearly through 2*q[m].
  for (int k = m - 1; k >= 0; --k) {
    // Coefficient of t^(m+k) in q^2 is 2 q[m] q[k] plus the ordered pairs
    // strictly between.
    Rational conv = 0;
    for (int i = k + 1; i <= m - 1; ++i) {
      int j = m + k - i;
      if (j <= k || j >= m) continue;
      conv += q[i] * q[j];
    }
    q[k] = (p.coeff(m + k) - conv) / (2 * q[m]);
  }
  RatPoly root{std::vector<Rational>(q)};
  if (root * root == p) return root;
  return std::nullopt;
}

std::optional<SquarePart> poly_square_up_to_unit(const RatPoly& p) {
  if (p.is_zero()) return SquarePart{Rational(1), RatPoly()};
  if (p.degree() % 2 != 0) return std::nullopt;
  RatPoly normalized = monic(p);
  auto root = poly_is_square(normalized);
  if (!root) return std::nullopt;
  return SquarePart{p.leading(), *root};
}

RatPoly parse_poly(const std::string& csv) {
  std::vector<Rational> coeffs;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("parse_poly: empty token");
    coeffs.push_back(parse_fraction(token.substr(a, b - a + 1)));
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace enr
