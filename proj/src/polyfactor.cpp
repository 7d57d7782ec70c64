#include "enr/polyfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace enr {

namespace {

// Integer-coefficient image of a monic-normalized rational polynomial:
// returns primitive integer coefficients of d*p for the lcm d of denominators.
std::vector<Integer> integer_model(const RatPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(den);
    out.push_back(Integer(scaled.get_num()));
  }
  Integer content = 0;
  for (const auto& c : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

std::vector<Integer> divisors_of(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> divs;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    divs.push_back(d);
    if (d != a / d) divs.push_back(a / d);
  }
  return divs;
}

// Arithmetic in F_p[x] with small p; coefficients in [0, p).
using FpPoly = std::vector<long>;

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, long p) {
  FpPoly prod(a.size() + b.size() - 1 + (a.empty() || b.empty() ? 1 : 0), 0);
  if (a.empty() || b.empty()) return {};
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // Reduce mod the monic modulus.
  int dm = static_cast<int>(mod.size()) - 1;
  for (int k = static_cast<int>(prod.size()) - 1; k >= dm; --k) {
    long c = prod[k] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      long idx = k - dm + j;
      prod[idx] = ((prod[idx] - c * mod[j]) % p + p) % p;
    }
  }
  prod.resize(dm);
  return fp_trim(prod);
}

FpPoly fp_powmod_xq(const FpPoly& mod, long p, long e_exponent_of_p, long p_base) {
  // x^(p^e) mod `mod` by repeated Frobenius power.
  FpPoly x = {0, 1};
  FpPoly acc = x;
  for (long step = 0; step < e_exponent_of_p; ++step) {
    // acc <- acc^p mod `mod` by square-and-multiply on exponent p.
    FpPoly result = {1};
    FpPoly base = acc;
    long e = p_base;
    while (e > 0) {
      if (e & 1) result = fp_mulmod(result, base, mod, p);
      base = fp_mulmod(base, base, mod, p);
      e >>= 1;
    }
    acc = result;
  }
  return acc;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  auto inv = [&](long x) {
    long r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  a = fp_trim(a);
  b = fp_trim(b);
  while (!b.empty()) {
    // a mod b
    FpPoly r = a;
    long lb = inv(b.back());
    while (r.size() >= b.size() && !r.empty()) {
      long c = r.back() * lb % p;
      size_t shift = r.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        r[shift + j] = ((r[shift + j] - c * b[j]) % p + p) % p;
      r = fp_trim(r);
      if (r.size() >= b.size() && r.back() == 0) r = fp_trim(r);
    }
    a = b;
    b = r;
  }
  return a;
}

// Rabin irreducibility test for f mod p (f squarefree mod p assumed checked).
bool fp_irreducible(const std::vector<Integer>& f, long p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (mod_p(f.back(), static_cast<int>(p)) == 0) return false;
  // Make monic mod p.
  FpPoly mod(n + 1);
  long lead = mod_p(f.back(), static_cast<int>(p));
  long linv = 1;
  {
    long e = p - 2, base = lead;
    while (e > 0) {
      if (e & 1) linv = linv * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  for (int i = 0; i <= n; ++i) mod[i] = mod_p(f[i], static_cast<int>(p)) * linv % p;

  FpPoly x = {0, 1};
  // x^(p^n) == x mod f
  FpPoly xpn = fp_powmod_xq(mod, p, n, p);
  FpPoly diff = xpn;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  if (!fp_trim(diff).empty()) return false;
  // gcd(x^(p^(n/q)) - x, f) == 1 for every prime q | n
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool isprime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) isprime = false;
    if (!isprime) continue;
    FpPoly xq = fp_powmod_xq(mod, p, n / q, p);
    FpPoly d = xq;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    FpPoly g = fp_gcd(mod, fp_trim(d), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Splits a monic squarefree quartic into two monic rational quadratics if
// possible (no rational roots assumed).
std::optional<std::pair<RatPoly, RatPoly>> quartic_split(const RatPoly& f) {
  // Depress: g(s) = f(s - a3/4) = s^4 + p s^2 + q s + r.
  Rational a3 = f.coeff(3);
  RatPoly shift{-a3 / 4, Rational(1)};
  RatPoly g;
  for (int k = 0; k <= 4; ++k)
    g += RatPoly::constant(f.coeff(k)) * pow(shift, k);
  Rational p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);

  auto recompose = [&](const Rational& u, const Rational& v, const Rational& w)
      -> std::optional<std::pair<RatPoly, RatPoly>> {
    RatPoly f1{v, u, Rational(1)};
    RatPoly f2{w, -u, Rational(1)};
    // Undo the shift s = t + a3/4.
    RatPoly back{a3 / 4, Rational(1)};
    RatPoly g1, g2;
    for (int k = 0; k <= 2; ++k) {
      g1 += RatPoly::constant(f1.coeff(k)) * pow(back, k);
      g2 += RatPoly::constant(f2.coeff(k)) * pow(back, k);
    }
    if (g1 * g2 == f) return std::make_pair(g1, g2);
    return std::nullopt;
  };

  // u = 0 case: s^4 + p s^2 + r splits iff y^2 - p y + r has a rational root
  // pattern with v + w = p, vw = r.
  Rational disc = p * p - 4 * r;
  if (q == 0 && is_square(disc)) {
    Rational s = sqrt_rational(disc);
    Rational v = (p - s) / 2, w = (p + s) / 2;
    auto res = recompose(Rational(0), v, w);
    if (res) return res;
  }
  // General case: u^2 = z for a rational root z > 0 of the resolvent
  // z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
  RatPoly resolvent{-q * q, p * p - 4 * r, 2 * p, Rational(1)};
  for (const auto& [z, mult] : rational_roots(resolvent)) {
    (void)mult;
    if (z <= 0 || !is_square(z)) continue;
    Rational u = sqrt_rational(z);
    Rational v = (p + z - q / u) / 2;
    Rational w = (p + z + q / u) / 2;
    auto res = recompose(u, v, w);
    if (res) return res;
  }
  return std::nullopt;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const RatPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<PolyFactor> parts;
  RatPoly f = monic(p);
  RatPoly df = derivative(f);
  RatPoly a = poly_gcd(f, df);
  RatPoly b = exact_div(f, a);
  RatPoly c = exact_div(df, a);
  RatPoly d = c - derivative(b);
  int i = 1;
  while (b.degree() >= 1) {
    RatPoly g = poly_gcd(b, d);
    if (g.degree() >= 1) parts.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    ++i;
  }
  return parts;
}

std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  RatPoly f = p;
  // Factor out powers of t.
  int t_ord = 0;
  while (f.coeff(0) == 0 && f.degree() >= 1) {
    f = exact_div(f, RatPoly::variable());
    ++t_ord;
  }
  if (t_ord > 0) out.push_back({Rational(0), t_ord});
  if (f.degree() < 1) return out;

  std::vector<Integer> zf = integer_model(f);
  for (const Integer& num : divisors_of(zf.front()))
    for (const Integer& den : divisors_of(zf.back()))
      for (int sign = -1; sign <= 1; sign += 2) {
        Rational cand = make_fraction(sign * num, den);
        if (f.eval(cand) != 0) continue;
        bool seen = false;
        for (auto& kv : out)
          if (kv.first == cand) seen = true;
        if (seen) continue;
        int mult = 0;
        RatPoly lin{-cand, Rational(1)};
        RatPoly cur = f;
        while (true) {
          PolyDivision d = divmod(cur, lin);
          if (!d.remainder.is_zero()) break;
          cur = d.quotient;
          ++mult;
        }
        out.push_back({cand, mult});
      }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const RatPoly& p) {
  int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (!rational_roots(p).empty()) return false;
  if (d == 2 || d == 3) return true;
  if (d == 4) return !quartic_split(monic(p)).has_value();
  std::vector<Integer> zf = integer_model(p);
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (long q : primes) {
    if (mod_p(zf.back(), static_cast<int>(q)) == 0) continue;
    if (fp_irreducible(zf, q)) return true;
  }
  throw std::domain_error("is_irreducible: cannot certify degree " + std::to_string(d));
}

Factorization factor_rational(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_rational: zero polynomial");
  Factorization out;
  out.unit = p.leading();
  if (p.degree() < 1) return out;

  for (const auto& part : squarefree_decomposition(p)) {
    // part.factor is monic squarefree; peel linear factors first.
    RatPoly rest = part.factor;
    for (const auto& [root, mult] : rational_roots(rest)) {
      (void)mult;  // squarefree: multiplicity 1 inside this part
      RatPoly lin{-root, Rational(1)};
      rest = exact_div(rest, lin);
      out.factors.push_back({lin, part.multiplicity});
    }
    std::vector<RatPoly> queue{rest};
    while (!queue.empty()) {
      RatPoly f = queue.back();
      queue.pop_back();
      if (f.degree() < 1) continue;
      if (f.degree() == 4) {
        auto split = quartic_split(f);
        if (split) {
          queue.push_back(split->first);
          queue.push_back(split->second);
          continue;
        }
      }
      if (f.degree() <= 4 || is_irreducible(f)) {
        out.factors.push_back({f, part.multiplicity});
        continue;
      }
      throw std::domain_error("factor_rational: unresolved factor of degree " +
                              std::to_string(f.degree()));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    return a.factor.str() < b.factor.str();
  });
  return out;
}

}  // namespace enr
