#include "enr/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

namespace enr {

StandardInvariants invariants(const WeierstrassModel& w) {
  StandardInvariants s;
  s.b2 = w.a1 * w.a1 + 4 * Rational(1) * w.a2;
  s.b4 = 2 * Rational(1) * w.a4 + w.a1 * w.a3;
  s.b6 = w.a3 * w.a3 + 4 * Rational(1) * w.a6;
  s.b8 = w.a1 * w.a1 * w.a6 + 4 * Rational(1) * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 +
         w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
  s.c4 = s.b2 * s.b2 - 24 * Rational(1) * s.b4;
  s.c6 = -(s.b2 * s.b2 * s.b2) + 36 * Rational(1) * s.b2 * s.b4 - 216 * Rational(1) * s.b6;
  s.delta = -(s.b2 * s.b2 * s.b8) - 8 * Rational(1) * (s.b4 * s.b4 * s.b4) -
            27 * Rational(1) * (s.b6 * s.b6) + 9 * Rational(1) * s.b2 * s.b4 * s.b6;
  if (s.delta.is_zero())
    throw std::domain_error("invariants: discriminant vanishes identically");
  return s;
}

PlaceOfP1 PlaceOfP1::finite(const RatPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("PlaceOfP1: constant polynomial");
  RatPoly m = monic(p);
  if (!is_irreducible(m)) throw std::invalid_argument("PlaceOfP1: reducible polynomial");
  return {false, m};
}

PlaceOfP1 PlaceOfP1::rational_point(const Rational& a) {
  return {false, RatPoly{-a, Rational(1)}};
}

std::string PlaceOfP1::str() const {
  if (at_infinity) return "oo";
  if (poly.degree() == 1) {
    Rational root = -poly.coeff(0);
    return "t=" + fraction_str(root);
  }
  return poly.str();
}

namespace {

constexpr int kInfiniteOrd = 1 << 24;

int ord_or_infinite(const RatPoly& p, const RatPoly& place) {
  if (p.is_zero()) return kInfiniteOrd;
  return ord_at(p, place);
}

struct MinimalVals {
  int v4, v6, vd;
};

MinimalVals minimal_valuations(int v4, int v6, int vd) {
  int k = std::min({v4 / 4, v6 / 6, vd / 12});
  if (k < 0) throw std::logic_error("minimal_valuations: negative valuation");
  return {v4 - 4 * k, v6 - 6 * k, vd - 12 * k};
}

KodairaType classify(const MinimalVals& m) {
  if (m.vd == 0) return KodairaType::In(0);
  if (m.v4 == 0) return KodairaType::In(m.vd);
  switch (m.vd) {
    case 2: return KodairaType::II();
    case 3: return KodairaType::III();
    case 4: return KodairaType::IV();
    case 6: return KodairaType::InStar(0);
    default: break;
  }
  if (m.v4 == 2 && m.v6 == 3 && m.vd >= 7) return KodairaType::InStar(m.vd - 6);
  switch (m.vd) {
    case 8: return KodairaType::IVStar();
    case 9: return KodairaType::IIIStar();
    case 10: return KodairaType::IIStar();
    default:
      throw std::logic_error("classify: impossible valuation pattern (" +
                             std::to_string(m.v4) + "," + std::to_string(m.v6) + "," +
                             std::to_string(m.vd) + ")");
  }
}

}  // namespace

FiberData kodaira_type(const WeierstrassModel& w, const PlaceOfP1& v) {
  StandardInvariants s = invariants(w);
  int v4, v6, vd;
  if (!v.at_infinity) {
    v4 = ord_or_infinite(s.c4, v.poly);
    v6 = ord_or_infinite(s.c6, v.poly);
    vd = ord_at(s.delta, v.poly);
  } else {
    // Rescale t -> 1/s with weight w0 large enough that all of c4, c6, delta
    // become polynomial in s; the k-reduction strips the excess.
    int w0 = 0;
    if (!s.c4.is_zero()) w0 = std::max(w0, (s.c4.degree() + 3) / 4);
    if (!s.c6.is_zero()) w0 = std::max(w0, (s.c6.degree() + 5) / 6);
    w0 = std::max(w0, (s.delta.degree() + 11) / 12);
    v4 = s.c4.is_zero() ? kInfiniteOrd : 4 * w0 - s.c4.degree();
    v6 = s.c6.is_zero() ? kInfiniteOrd : 6 * w0 - s.c6.degree();
    vd = 12 * w0 - s.delta.degree();
  }
  MinimalVals m = minimal_valuations(v4, v6, vd);
  KodairaType type = classify(m);
  FiberData f;
  f.place = v;
  f.type = type;
  f.ord_delta_minimal = m.vd;
  f.component_count = component_count(type);
  f.place_degree = v.at_infinity ? 1 : v.poly.degree();
  if (euler_contribution(type) != m.vd)
    throw std::logic_error("kodaira_type: Euler number mismatch");
  return f;
}

std::vector<FiberData> singular_fibers(const WeierstrassModel& w) {
  StandardInvariants s = invariants(w);
  Factorization fac = factor_rational(s.delta);
  std::vector<FiberData> out;
  for (const auto& f : fac.factors) {
    FiberData fd = kodaira_type(w, PlaceOfP1{false, f.factor});
    if (!fd.type.smooth()) out.push_back(fd);
  }
  FiberData inf = kodaira_type(w, PlaceOfP1::infinity());
  if (!inf.type.smooth()) out.push_back(inf);
  return out;
}

int euler_number(const std::vector<FiberData>& fibers) {
  int e = 0;
  for (const auto& f : fibers) e += f.place_degree * euler_contribution(f.type);
  return e;
}

WeierstrassModel quadratic_twist(const WeierstrassModel& w, const RatPoly& d) {
  if (d.degree() >= 1 && poly_gcd(d, derivative(d)).degree() != 0)
    throw std::invalid_argument("quadratic_twist: d not squarefree");
  StandardInvariants s = invariants(w);
  WeierstrassModel t;
  t.a1 = RatPoly();
  t.a3 = RatPoly();
  t.a2 = s.b2 * d * make_fraction(1, 4);
  t.a4 = s.b4 * d * d * make_fraction(1, 2);
  t.a6 = s.b6 * d * d * d * make_fraction(1, 4);
  t.label = w.label.empty() ? "" : w.label + " twist";
  return t;
}

WeierstrassModel base_change(const WeierstrassModel& w, const RatPoly& num,
                             const RatPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("base_change: zero denominator");
  RatPoly g = poly_gcd(num, den);
  RatPoly f = num, h = den;
  if (g.degree() >= 1) { f = exact_div(num, g); h = exact_div(den, g); }
  if (f.degree() <= 0 && h.degree() <= 0)
    throw std::invalid_argument("base_change: constant substitution");
  int k = 1;
  auto need = [&](const RatPoly& p, int i) {
    if (!p.is_zero()) k = std::max(k, (p.degree() + i - 1) / i);
  };
  need(w.a1, 1);
  need(w.a2, 2);
  need(w.a3, 3);
  need(w.a4, 4);
  need(w.a6, 6);
  // a_i(f/h) * h^(i k) is polynomial because i k >= deg a_i.
  WeierstrassModel out;
  auto subst = [&](const RatPoly& p, int i) {
    if (p.is_zero()) return RatPoly();
    return homogenized_subst(p, f, h, i * k);
  };
  out.a1 = subst(w.a1, 1);
  out.a2 = subst(w.a2, 2);
  out.a3 = subst(w.a3, 3);
  out.a4 = subst(w.a4, 4);
  out.a6 = subst(w.a6, 6);
  out.label = w.label.empty() ? "" : w.label + " base-changed";
  return out;
}

std::pair<RatPoly, RatPoly> j_invariant(const WeierstrassModel& w) {
  StandardInvariants s = invariants(w);
  return {s.c4 * s.c4 * s.c4, s.delta};
}

bool same_j(const WeierstrassModel& a, const WeierstrassModel& b) {
  auto [n1, d1] = j_invariant(a);
  auto [n2, d2] = j_invariant(b);
  return n1 * d2 == n2 * d1;
}

}  // namespace enr
