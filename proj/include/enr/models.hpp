#pragma once

// The shipped geometric configurations: the extremal rational elliptic
// surfaces, the divisibility configurations of four (or eight) A2's, the
// explicit Neron-Severi builds, and the dual graphs used by the searches.

#include "enr/code3.hpp"
#include "enr/graph.hpp"
#include "enr/mordell.hpp"
#include "enr/nsbuild.hpp"
#include "enr/weierstrass.hpp"

#include <optional>

namespace enr {
namespace models {

// Extremal rational elliptic surfaces.
WeierstrassModel x431();   // y^2 + xy + ty = x^3: IV* + I3 + I1
WeierstrassModel x44();    // y^2 + ty = x^3: IV* + IV
WeierstrassModel x6321();  // y^2 = x(x^2 + (t^2/4+t-2)x + (1-t)): I6+I3+I2+I1
WeierstrassModel x3333();  // Hesse pencil jacobian: 4 x I3

// Section-free A2 configurations modeled by explicit classes; `differences`
// holds one row F'_j - F''_j per configuration, in ambient coordinates.
struct DivisibilityConfig {
  GramLattice ambient;
  MatZ differences;
  std::vector<std::pair<VecZ, VecZ>> pairs;  // the underlying curve classes
};

// Four A2's in the fibers of the I3^4 fibration on Num(S) = U + E8
// (full-rank inside the E8 summand): four 3-divisible sets.
DivisibilityConfig f3333_enriques();
// Same with the fourth pair using the affine fiber component: exactly one.
DivisibilityConfig f3333_enriques_small();
// IV* + I3 configuration on Num(S): exactly one 3-divisible set.
DivisibilityConfig f431_enriques();

// K3-cover configurations inside the constructed NS lattices.
DivisibilityConfig f431_cover();         // 2 x IV* + 2 x I3: four sets
DivisibilityConfig f3333_cover();        // 8 x I3: four sets
DivisibilityConfig f3333_cover_small();  // mixed labels: exactly one

// The index-3 overlattice M of A2^2 + E6^2 from the square-(-4) glue vector.
GramLattice overlattice_M();

// Y_{6,3,2,1}: quadratic base change of x6321, with Z/6 torsion glued in;
// optionally enhanced by the induced height-3 section (two contact cases).
enum class HeightThreeCase { kOne, kTwo };
NsLattice y6321_ns(std::optional<HeightThreeCase> with_section = std::nullopt);

// The two orthogonal E8 blocks of II* divisors (16 rows, NS coordinates).
MatZ y6321_e8_blocks(const NsLattice& ns);
// The degree-6 multisection of the II* fibration (NS coordinates).
VecZ y6321_multisection(const NsLattice& ns);
// The class of one II* divisor (the new fiber), NS coordinates.
VecZ y6321_iistar_fiber(const NsLattice& ns);

NsLattice jac_y3333_ns();  // 8 x I3, MW (Z/3)^2: det -81

// Section of height 3/2 on the twisted model from the one-parameter family:
// a, c, the model, the section, and its y-coordinate.
struct TwistFamilyResult {
  Rational a, c;
  WeierstrassModel model;
  SectionData section;
  // y^2 = y_unit * y^2-part: the section's y-coordinate is
  // sqrt(y_unit) * y, rational exactly when y_unit is a square.
  Rational y_unit;
  RatPoly y;
};
TwistFamilyResult twist_family_section(const Rational& b);

// Dual graphs.
CurveGraph figure1_graph();     // I6 + I3 + I2 fibers with the bisection R
CurveGraph example310_graph();  // 4 x I3 with a (-2) bisection
// The nine components of a II* fiber inside U + E8, with classes assigned.
CurveGraph iistar_tree();

}  // namespace models
}  // namespace enr
