#pragma once

// Exact scalar types for the whole library. All arithmetic is over GMP
// integers/rationals; floating point is not used anywhere.

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace enr {

// Thrown when a configurable enumeration limit is hit (CLI exit code 4).
struct BoundExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_fraction: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b" into a reduced rational.
inline Rational parse_fraction(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_fraction: bad fraction '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_fraction: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string fraction_str(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_rational(const Rational& q) {
  return floor_div(Integer(q.get_num()), Integer(q.get_den()));
}

inline Integer ceil_rational(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

// Canonical representative of q in Q/2Z, inside [0,2).
inline Rational reduce_mod2(const Rational& q) {
  Rational half = q / 2;
  Rational frac = half - Rational(floor_rational(half));
  return frac * 2;
}

// Canonical representative of q in Q/Z, inside [0,1).
inline Rational reduce_mod1(const Rational& q) {
  return q - Rational(floor_rational(q));
}

inline int mod_p(const Integer& a, int p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<int>(r.get_ui());
}

inline Integer exact_sqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("exact_sqrt: negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) throw std::domain_error("exact_sqrt: not a perfect square");
  return r;
}

inline bool is_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) &&
         mpz_perfect_square_p(q.get_den_mpz_t());
}

inline Rational sqrt_rational(const Rational& q) {
  return make_fraction(exact_sqrt(Integer(q.get_num())),
                       exact_sqrt(Integer(q.get_den())));
}

}  // namespace enr

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
