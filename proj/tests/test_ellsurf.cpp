#include "doctest.h"

#include "enr/mordell.hpp"
#include "enr/pencil.hpp"
#include "enr/polyfactor.hpp"
#include "enr/weierstrass.hpp"

using namespace enr;

namespace {

Rational Q(long n, long d = 1) { return make_fraction(Integer(n), Integer(d)); }

// y^2 + xy + ty = x^3
WeierstrassModel model_x431() {
  WeierstrassModel w;
  w.a1 = RatPoly{Q(1)};
  w.a3 = RatPoly{Q(0), Q(1)};
  w.label = "X431";
  return w;
}

// y^2 + ty = x^3
WeierstrassModel model_x44() {
  WeierstrassModel w;
  w.a3 = RatPoly{Q(0), Q(1)};
  w.label = "X44";
  return w;
}

// y^2 = x (x^2 + (t^2/4 + t - 2) x + (1 - t))
WeierstrassModel model_x6321() {
  WeierstrassModel w;
  w.a2 = RatPoly{Q(-2), Q(1), Q(1, 4)};
  w.a4 = RatPoly{Q(1), Q(-1)};
  w.label = "X6321";
  return w;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  RatPoly p{Q(1), Q(2), Q(1)};  // 1 + 2t + t^2
  auto root = poly_is_square(p);
  REQUIRE(root.has_value());
  CHECK(*root == RatPoly{Q(1), Q(1)});
  CHECK(!poly_is_square(RatPoly{Q(0), Q(1)}).has_value());

  RatPoly f{Q(-1), Q(0), Q(1)};  // t^2 - 1
  auto d = divmod(f, RatPoly{Q(1), Q(1)});
  CHECK(d.quotient == RatPoly{Q(-1), Q(1)});
  CHECK(d.remainder.is_zero());

  CHECK(ord_at(RatPoly{Q(0), Q(0), Q(0), Q(5)}, RatPoly::variable()) == 3);
  CHECK(poly_gcd(f, derivative(f)).degree() == 0);
}

TEST_CASE("factorization") {
  // t^3 (1 - 27 t)
  RatPoly delta{Q(0), Q(0), Q(0), Q(1), Q(-27)};
  Factorization fac = factor_rational(delta);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor == RatPoly::variable());
  CHECK(fac.factors[0].multiplicity == 3);
  CHECK(fac.factors[1].factor == RatPoly{Q(-1, 27), Q(1)});
  CHECK(fac.factors[1].multiplicity == 1);

  // (t^3 + 1)^3 = (t+1)^3 (t^2 - t + 1)^3
  RatPoly cube{Q(1), Q(0), Q(0), Q(1)};
  RatPoly p = cube * cube * cube;
  Factorization fc = factor_rational(p);
  REQUIRE(fc.factors.size() == 2);
  CHECK(fc.factors[0].factor.degree() == 1);
  CHECK(fc.factors[0].multiplicity == 3);
  CHECK(fc.factors[1].factor.degree() == 2);
  CHECK(fc.factors[1].multiplicity == 3);
  CHECK(is_irreducible(RatPoly{Q(1), Q(-1), Q(1)}));

  // Quartic splitting into two irreducible quadratics.
  RatPoly quartic = RatPoly{Q(1), Q(0), Q(1)} * RatPoly{Q(2), Q(2), Q(1)};
  Factorization fq = factor_rational(quartic);
  CHECK(fq.factors.size() == 2);
  CHECK(!is_irreducible(quartic));
}

TEST_CASE("X431 invariants and fibers") {
  WeierstrassModel w = model_x431();
  StandardInvariants s = invariants(w);
  CHECK(s.delta == RatPoly{Q(0), Q(0), Q(0), Q(1), Q(-27)});
  CHECK(s.c4 * s.c4 * s.c4 - s.c6 * s.c6 == 1728 * Rational(1) * s.delta);

  FiberData at0 = kodaira_type(w, PlaceOfP1::rational_point(Q(0)));
  CHECK(at0.type == KodairaType::In(3));
  FiberData atinf = kodaira_type(w, PlaceOfP1::infinity());
  CHECK(atinf.type == KodairaType::IVStar());
  FiberData at127 = kodaira_type(w, PlaceOfP1::rational_point(Q(1, 27)));
  CHECK(at127.type == KodairaType::In(1));

  auto fibers = singular_fibers(w);
  REQUIRE(fibers.size() == 3);
  CHECK(euler_number(fibers) == 12);
}

TEST_CASE("X44 invariants and fibers") {
  WeierstrassModel w = model_x44();
  StandardInvariants s = invariants(w);
  CHECK(s.delta == RatPoly{Q(0), Q(0), Q(0), Q(0), Q(-27)});

  CHECK(kodaira_type(w, PlaceOfP1::rational_point(Q(0))).type == KodairaType::IV());
  CHECK(kodaira_type(w, PlaceOfP1::infinity()).type == KodairaType::IVStar());
  CHECK(euler_number(singular_fibers(w)) == 12);
}

TEST_CASE("X6321 fibers at the pencil places") {
  WeierstrassModel w = model_x6321();
  CHECK(kodaira_type(w, PlaceOfP1::rational_point(Q(0))).type == KodairaType::In(3));
  CHECK(kodaira_type(w, PlaceOfP1::rational_point(Q(1))).type == KodairaType::In(2));
  CHECK(kodaira_type(w, PlaceOfP1::rational_point(Q(-8))).type == KodairaType::In(1));
  CHECK(kodaira_type(w, PlaceOfP1::infinity()).type == KodairaType::In(6));
  CHECK(euler_number(singular_fibers(w)) == 12);
}

TEST_CASE("quadratic twist rules") {
  WeierstrassModel w = model_x6321();
  // Twist ramified at t = 2 and t = 8/3.
  RatPoly d = RatPoly{Q(-2), Q(1)} * RatPoly{Q(-8, 3), Q(1)};
  WeierstrassModel tw = quadratic_twist(w, d);
  CHECK(same_j(w, tw));
  CHECK(kodaira_type(tw, PlaceOfP1::rational_point(Q(2))).type == KodairaType::InStar(0));
  CHECK(kodaira_type(tw, PlaceOfP1::rational_point(Q(8, 3))).type == KodairaType::InStar(0));
  CHECK(kodaira_type(tw, PlaceOfP1::rational_point(Q(0))).type == KodairaType::In(3));
  CHECK(kodaira_type(tw, PlaceOfP1::rational_point(Q(1))).type == KodairaType::In(2));
  CHECK(kodaira_type(tw, PlaceOfP1::infinity()).type == KodairaType::In(6));
  CHECK(euler_number(singular_fibers(tw)) == 24);

  // Twisting twice restores the fiber types.
  WeierstrassModel tw2 = quadratic_twist(tw, d);
  CHECK(same_j(w, tw2));
  CHECK(kodaira_type(tw2, PlaceOfP1::rational_point(Q(2))).type == KodairaType::In(0));
  CHECK(euler_number(singular_fibers(tw2)) == 12);
}

TEST_CASE("base change duplicates fibers") {
  WeierstrassModel w = model_x6321();
  // t = s^2 + 5: unramified over 0, 1, -8, oo ramifies... oo is ramified;
  // the I6 there becomes I12.
  RatPoly num{Q(5), Q(0), Q(1)};
  RatPoly den{Q(1)};
  WeierstrassModel bc = base_change(w, num, den);
  CHECK(same_j(base_change(w, RatPoly::variable(), RatPoly{Q(1)}), w));
  CHECK(euler_number(singular_fibers(bc)) == 24);
  CHECK(kodaira_type(bc, PlaceOfP1::infinity()).type == KodairaType::In(12));
  // Preimages of t=1: s^2 = -4, irreducible quadratic place with an I2 pair.
  RatPoly pre1{Q(4), Q(0), Q(1)};
  CHECK(kodaira_type(bc, PlaceOfP1::finite(pre1)).type == KodairaType::In(2));
}

TEST_CASE("pencil discriminants") {
  // Hesse pencil x^3 + y^3 + z^3 + 3 lambda xyz.
  TernaryForm f(3), g(3);
  f.set(3, 0, 0, RatPoly{Q(1)});
  f.set(0, 3, 0, RatPoly{Q(1)});
  f.set(0, 0, 3, RatPoly{Q(1)});
  g.set(1, 1, 1, RatPoly{Q(3)});
  auto places = cubic_pencil_singular_places(f, g);
  // Roots of lambda^3 = -1: lambda = -1 and an irreducible quadratic, each
  // with multiplicity 3; infinity gets the rest.
  REQUIRE(places.size() == 3);
  CHECK(places[0].place == RatPoly{Q(1), Q(1)});
  CHECK(places[0].multiplicity == 3);
  CHECK(places[1].place == RatPoly{Q(1), Q(-1), Q(1)});
  CHECK(places[1].multiplicity == 3);
  CHECK(places[2].at_infinity);
  CHECK(places[2].multiplicity == 3);

  // (x+y)(y+z)(z+x) + t xyz.
  TernaryForm f2(3), g2(3);
  // Expand (x+y)(y+z)(z+x) = x^2y + x^2z + xy^2 + y^2z + xz^2 + yz^2 + 2xyz.
  f2.set(2, 1, 0, RatPoly{Q(1)});
  f2.set(2, 0, 1, RatPoly{Q(1)});
  f2.set(1, 2, 0, RatPoly{Q(1)});
  f2.set(0, 2, 1, RatPoly{Q(1)});
  f2.set(1, 0, 2, RatPoly{Q(1)});
  f2.set(0, 1, 2, RatPoly{Q(1)});
  f2.set(1, 1, 1, RatPoly{Q(2)});
  g2.set(1, 1, 1, RatPoly{Q(1)});
  auto pl = cubic_pencil_singular_places(f2, g2);
  REQUIRE(pl.size() == 4);
  auto mult_of = [&](const RatPoly& place) {
    for (const auto& p : pl)
      if (!p.at_infinity && p.place == place) return p.multiplicity;
    return -1;
  };
  CHECK(mult_of(RatPoly{Q(0), Q(1)}) == 3);   // t = 0
  CHECK(mult_of(RatPoly{Q(-1), Q(1)}) == 2);  // t = 1
  CHECK(mult_of(RatPoly{Q(8), Q(1)}) == 1);   // t = -8
  CHECK(pl[3].at_infinity);
  CHECK(pl[3].multiplicity == 6);

  // A smooth member has nonzero discriminant: Fermat cubic member at t=0.
  RatPoly disc = pencil_discriminant(f, g);
  CHECK(disc.eval(Q(0)) != 0);
}

TEST_CASE("heights from the worked examples") {
  // Twisted X3333: I3*, three I3, I0*; chi = 2.
  std::vector<KodairaType> fibers = {KodairaType::InStar(3), KodairaType::In(3),
                                     KodairaType::In(3), KodairaType::In(3),
                                     KodairaType::InStar(0)};
  SectionData q;
  q.contacts = {2, 1, 0, 0, 1};  // far simple on I3*, one I3, the I0*
  q.o_intersection = 0;
  CHECK(height_pairing(q, 2, fibers) == Q(7, 12));

  // Pull-back on the K3 cover: I6 + six I3, contact at the opposite I6
  // component and the duplicated I3 pair.
  std::vector<KodairaType> cover = {KodairaType::In(6), KodairaType::In(3),
                                    KodairaType::In(3), KodairaType::In(3),
                                    KodairaType::In(3), KodairaType::In(3),
                                    KodairaType::In(3)};
  SectionData qc;
  qc.contacts = {3, 1, 1, 0, 0, 0, 0};
  CHECK(height_pairing(qc, 2, cover) == Q(7, 6));

  // Twist of X6321: two I0* plus I6, I3, I2, I1; chi = 2. Case 1.
  std::vector<KodairaType> tw = {KodairaType::InStar(0), KodairaType::InStar(0),
                                 KodairaType::In(6), KodairaType::In(3),
                                 KodairaType::In(2), KodairaType::In(1)};
  SectionData c1;
  c1.contacts = {1, 0, 3, 0, 0, 0};
  CHECK(height_pairing(c1, 2, tw) == Q(3, 2));
  SectionData c2;
  c2.contacts = {1, 0, 1, 1, 0, 0};
  CHECK(height_pairing(c2, 2, tw) == Q(3, 2));

  // Height 3 on the K3 cover of X6321 (2 x (I6, I3, I2, I1)), case 1.
  std::vector<KodairaType> y6321 = {KodairaType::In(6), KodairaType::In(6),
                                    KodairaType::In(3), KodairaType::In(3),
                                    KodairaType::In(2), KodairaType::In(2),
                                    KodairaType::In(1), KodairaType::In(1)};
  SectionData q3;
  q3.contacts = {3, 3, 0, 0, 0, 0, 0, 0};
  q3.o_intersection = 1;
  CHECK(height_pairing(q3, 2, y6321) == Q(3));

  // Zero section: P.O specializes to O.O = -chi, giving height zero.
  SectionData zero;
  zero.contacts = {0, 0, 0, 0, 0, 0, 0, 0};
  zero.o_intersection = -2;
  CHECK(height_pairing(zero, 2, y6321) == Q(0));

  // 2-torsion of X6321 (chi = 1): I6 at the opposite component, I2 nonzero.
  std::vector<KodairaType> x6321 = {KodairaType::In(6), KodairaType::In(3),
                                    KodairaType::In(2), KodairaType::In(1)};
  SectionData two_torsion;
  two_torsion.contacts = {3, 0, 1, 0};
  CHECK(height_pairing(two_torsion, 1, x6321) == Q(0));

  // 3-torsion of X431 (chi = 1): IV* simple component, I3 nonzero.
  std::vector<KodairaType> x431 = {KodairaType::IVStar(), KodairaType::In(3),
                                   KodairaType::In(1)};
  SectionData three_torsion;
  three_torsion.contacts = {1, 1, 0};
  CHECK(height_pairing(three_torsion, 1, x431) == Q(0));
}

TEST_CASE("shioda-tate bookkeeping") {
  // Jacobian of the F3333 K3 cover: 8 x I3, MW = (Z/3)^2.
  std::vector<KodairaType> jac(8, KodairaType::In(3));
  ShiodaTate st = shioda_tate(jac, 0, Integer(9));
  CHECK(st.rho == 18);
  CHECK(st.ns_determinant == Q(-81));

  // Generic Y6321: duplicated I6, I3, I2, I1 with Z/6 torsion.
  std::vector<KodairaType> y = {KodairaType::In(6), KodairaType::In(6),
                                KodairaType::In(3), KodairaType::In(3),
                                KodairaType::In(2), KodairaType::In(2),
                                KodairaType::In(1), KodairaType::In(1)};
  ShiodaTate sty = shioda_tate(y, 0, Integer(6));
  CHECK(sty.rho == 18);
  CHECK(sty.ns_determinant == Q(-36));

  // X3333 itself: rational, 4 x I3, (Z/3)^2.
  std::vector<KodairaType> x(4, KodairaType::In(3));
  ShiodaTate stx = shioda_tate(x, 0, Integer(9));
  CHECK(stx.rho == 10);
  CHECK(abs(Integer(stx.ns_determinant.get_num())) == 1);

  // The five extremal configurations all give rho = 10 with |det| = 1.
  auto check_extremal = [](const std::vector<KodairaType>& f, long torsion) {
    ShiodaTate s = shioda_tate(f, 0, Integer(torsion));
    CHECK(s.rho == 10);
    CHECK(s.ns_determinant == Q(-1));
  };
  check_extremal({KodairaType::In(3), KodairaType::In(3), KodairaType::In(3),
                  KodairaType::In(3)}, 9);
  check_extremal({KodairaType::IVStar(), KodairaType::In(3), KodairaType::In(1)}, 3);
  check_extremal({KodairaType::IVStar(), KodairaType::IV()}, 3);
  check_extremal({KodairaType::IIStar(), KodairaType::In(1), KodairaType::In(1)}, 1);
  check_extremal({KodairaType::IIStar(), KodairaType::II()}, 1);
}

TEST_CASE("ramified base change turns I0* into smooth fibers") {
  WeierstrassModel w = model_x6321();
  RatPoly d = RatPoly{Q(-2), Q(1)} * RatPoly{Q(-8, 3), Q(1)};
  WeierstrassModel tw = quadratic_twist(w, d);
  // Base change ramified exactly over t = 2 and t = 8/3:
  // t = (2 s^2 - 8/3) / (s^2 - 1) has t(s)=2 and t(s)=8/3 as double values.
  RatPoly num = RatPoly{Q(-8, 3), Q(0), Q(2)};
  RatPoly den = RatPoly{Q(-1), Q(0), Q(1)};
  WeierstrassModel up = base_change(tw, num, den);
  CHECK(euler_number(singular_fibers(up)) == 24);
  // Same K3 from the untwisted side.
  WeierstrassModel up2 = base_change(w, num, den);
  CHECK(same_j(up, up2));
  CHECK(euler_number(singular_fibers(up2)) == 24);
}
