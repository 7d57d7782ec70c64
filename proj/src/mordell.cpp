#include "enr/mordell.hpp"

#include <stdexcept>

namespace enr {

void verify_section_on_model(const WeierstrassModel& w, const SectionData& s) {
  if (!s.x || !s.y) return;
  const RatPoly& xn = s.x->num;
  const RatPoly& xd = s.x->den;
  const RatPoly& yn = s.y->num;
  const RatPoly& yd = s.y->den;
  if (xd.is_zero() || yd.is_zero())
    throw std::invalid_argument("verify_section_on_model: zero denominator");
  // y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, cleared by xd^3 yd^2.
  RatPoly lhs = yn * yn * xd * xd * xd +
                w.a1 * xn * yn * xd * xd * yd +
                w.a3 * yn * xd * xd * xd * yd;
  RatPoly rhs = (xn * xn * xn + w.a2 * xn * xn * xd + w.a4 * xn * xd * xd +
                 w.a6 * xd * xd * xd) * yd * yd;
  if (!(lhs == rhs))
    throw std::invalid_argument("verify_section_on_model: point not on the curve");
}

Rational height_pairing(const SectionData& s, int chi,
                        const std::vector<KodairaType>& fibers) {
  if (s.contacts.size() != fibers.size())
    throw std::invalid_argument("height_pairing: one contact per fiber required");
  Rational h = Rational(2 * chi) + 2 * Rational(s.o_intersection);
  for (size_t i = 0; i < fibers.size(); ++i)
    h -= local_contribution(fibers[i], s.contacts[i]);
  return h;
}

ShiodaTate shioda_tate(const std::vector<KodairaType>& fibers, int mw_rank,
                       const Integer& torsion_order,
                       const Rational& frame_det) {
  if (torsion_order < 1) throw std::invalid_argument("shioda_tate: bad torsion order");
  ShiodaTate out;
  int rho = 2 + mw_rank;
  Rational det = 1;
  for (const auto& f : fibers) {
    rho += root_rank(f);
    det *= Rational(root_lattice_det(f));
  }
  out.rho = rho;
  det *= frame_det;
  det /= Rational(torsion_order * torsion_order);
  if ((rho - 1) % 2 != 0) det = -det;
  out.ns_determinant = det;
  return out;
}

}  // namespace enr
