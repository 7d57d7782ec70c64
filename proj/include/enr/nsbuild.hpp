#pragma once

// Neron-Severi lattices of elliptic surfaces assembled from explicit curve
// classes: U (zero section and fiber) or U(2) (bisection and fiber), fiber
// root blocks, extra sections, and overlattice glue from torsion sections or
// declared divisible classes.

#include "enr/kodaira.hpp"
#include "enr/overlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enr {

enum class NsBase { kSection, kBisection };

struct NsSectionSpec {
  std::vector<int> contacts;  // component index per fiber (I_n only)
  Integer o_intersection = 0;
  std::string label;
};

// A torsion section declared by its contact pattern; its class is the
// rational combination of the trivial lattice determined by the pattern and
// enters as overlattice glue. The pattern must give height zero.
struct NsTorsionSpec {
  std::vector<int> contacts;
  Integer o_intersection = 0;
};

class NsLattice {
 public:
  const GramLattice& lattice() const { return over_.lattice; }
  const OverlatticeResult& overlattice_data() const { return over_; }
  int chi() const { return chi_; }
  int span_dim() const { return span_dim_; }

  // Coordinates in the pre-glue span basis [F, O/D, components..., sections].
  int col_fiber_class() const { return 0; }
  int col_zero() const { return 1; }
  int col_component(int fiber, int component) const;  // component >= 1
  int col_section(int j) const;

  // Identity component of a fiber, F - sum of the others (I_n fibers).
  VecZ identity_component(int fiber) const;

  // NS coordinates (overlattice basis) of a vector given in span coords.
  VecZ ns_coords(const VecQ& span_vector) const;
  VecZ ns_coords(const VecZ& span_vector) const;

  // Glue vector of torsion section j, in span coordinates.
  const VecQ& torsion_vector(int j) const { return torsion_vectors_[j]; }

  friend NsLattice build_neron_severi(int chi, NsBase base,
                                      const std::vector<KodairaType>& fibers,
                                      const std::vector<NsSectionSpec>& sections,
                                      const std::vector<NsTorsionSpec>& torsions,
                                      const MatQ& extra_glue);

 private:
  OverlatticeResult over_{GramLattice::make_degenerate_ok(MatZ(0, 0)), MatQ(), Integer(1)};
  int chi_ = 0;
  int span_dim_ = 0;
  std::vector<KodairaType> fibers_;
  std::vector<int> fiber_offsets_;
  int section_offset_ = 0;
  std::vector<VecQ> torsion_vectors_;
};

// fibers: I_n types only (the builds used here are semistable). extra_glue
// rows are rational vectors in span coordinates (pass MatQ(0, 0) for none).
NsLattice build_neron_severi(int chi, NsBase base,
                             const std::vector<KodairaType>& fibers,
                             const std::vector<NsSectionSpec>& sections,
                             const std::vector<NsTorsionSpec>& torsions,
                             const MatQ& extra_glue);

}  // namespace enr
