#pragma once

// Mordell-Weil height pairing and Shioda-Tate bookkeeping for jacobian
// elliptic surfaces.

#include "enr/kodaira.hpp"
#include "enr/poly.hpp"
#include "enr/weierstrass.hpp"

#include <optional>
#include <vector>

namespace enr {

struct RatFunction {
  RatPoly num;
  RatPoly den;  // nonzero
};

struct SectionData {
  // Optional explicit coordinates; when present they must satisfy the
  // Weierstrass equation identically.
  std::optional<RatFunction> x, y;
  // contact[i] = component index met in fiber i (indexing per kodaira.hpp).
  std::vector<int> contacts;
  Integer o_intersection = 0;  // P.O
  std::string label;
};

// Checks x, y against the model when present.
void verify_section_on_model(const WeierstrassModel& w, const SectionData& s);

// h(P) = 2 chi + 2 (P.O) - sum_v contr_v(contact_v).
Rational height_pairing(const SectionData& s, int chi,
                        const std::vector<KodairaType>& fibers);

struct ShiodaTate {
  int rho = 0;
  // (-1)^(rho-1) * prod_v det(R_v) * frame_det / torsion^2; the signed
  // determinant of NS for a surface realizing the data.
  Rational ns_determinant;
};

ShiodaTate shioda_tate(const std::vector<KodairaType>& fibers, int mw_rank,
                       const Integer& torsion_order,
                       const Rational& frame_det = Rational(1));

}  // namespace enr
