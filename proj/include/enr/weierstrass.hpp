#pragma once

// Weierstrass models over Q(t): standard invariants, Kodaira fiber typing by
// valuations (residue characteristic zero), quadratic twists and base change.

#include "enr/kodaira.hpp"
#include "enr/poly.hpp"
#include "enr/polyfactor.hpp"

#include <string>
#include <vector>

namespace enr {

struct WeierstrassModel {
  RatPoly a1, a2, a3, a4, a6;
  std::string label;
};

struct StandardInvariants {
  RatPoly b2, b4, b6, b8, c4, c6, delta;
};

// Throws if delta vanishes identically.
StandardInvariants invariants(const WeierstrassModel& w);

struct PlaceOfP1 {
  bool at_infinity = false;
  RatPoly poly;  // monic irreducible for finite places

  static PlaceOfP1 infinity() { return {true, RatPoly()}; }
  static PlaceOfP1 finite(const RatPoly& p);
  static PlaceOfP1 rational_point(const Rational& a);  // t - a
  std::string str() const;
  friend bool operator==(const PlaceOfP1& a, const PlaceOfP1& b) {
    return a.at_infinity == b.at_infinity && a.poly == b.poly;
  }
};

struct FiberData {
  PlaceOfP1 place;
  KodairaType type;
  int ord_delta_minimal = 0;  // = Euler contribution of one fiber
  int component_count = 0;
  int place_degree = 1;  // residue degree; a degree-k place is k fibers
};

// Fiber type at one place, from the minimal valuations of (c4, c6, delta).
FiberData kodaira_type(const WeierstrassModel& w, const PlaceOfP1& v);

// All singular fibers: finite places from the factored discriminant plus the
// place at infinity when singular there. Sorted: finite places by factor,
// then infinity.
std::vector<FiberData> singular_fibers(const WeierstrassModel& w);

// Sum of Euler contributions, each weighted by the residue degree of its
// place.
int euler_number(const std::vector<FiberData>& fibers);

// Twist by a squarefree polynomial d: y^2 = x^3 + (b2 d/4) x^2 + (b4 d^2/2) x
// + (b6 d^3/4). The j-invariant is unchanged; fibers at roots of d trade
// I_n <-> I_n*, II <-> IV*, III <-> III*, IV <-> II*.
WeierstrassModel quadratic_twist(const WeierstrassModel& w, const RatPoly& d);

// Substitute t = num/den and clear denominators by the weighted rescaling.
WeierstrassModel base_change(const WeierstrassModel& w, const RatPoly& num,
                             const RatPoly& den);

// j-invariant as the exact fraction c4^3 / delta (not reduced).
std::pair<RatPoly, RatPoly> j_invariant(const WeierstrassModel& w);

// True if the two models have equal j-invariant as elements of Q(t).
bool same_j(const WeierstrassModel& a, const WeierstrassModel& b);

}  // namespace enr
