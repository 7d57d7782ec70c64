#pragma once

// Overlattices from isotropic glue vectors, and saturated orthogonal
// complements of sublattices.

#include "enr/lattice.hpp"

namespace enr {

struct OverlatticeResult {
  GramLattice lattice;
  // Rows: basis of the overlattice, in the coordinates of the input lattice.
  MatQ basis;
  Integer index;  // [M : L]
};

// glue: rows are rational vectors in L (x) Q lying in L^vee, with v.v in 2Z
// and pairwise integral pairings. Returns the overlattice L + sum Z v_j on an
// adapted basis.
OverlatticeResult overlattice(const GramLattice& l, const MatQ& glue);

// Coordinates of a vector of the overlattice with respect to result.basis;
// throws if x is not in the overlattice.
VecZ overlattice_coords(const OverlatticeResult& result, const VecQ& x);

struct ComplementResult {
  GramLattice lattice;
  // Rows: basis of the complement, in ambient coordinates. The complement is
  // the full kernel of pairing against the sublattice, hence saturated.
  MatZ basis;
};

ComplementResult orthogonal_complement(const GramLattice& ambient,
                                       const MatZ& sub_basis_rows);

}  // namespace enr
