#include "enr/nsbuild.hpp"

#include "enr/mordell.hpp"

#include <stdexcept>

namespace enr {

int NsLattice::col_component(int fiber, int component) const {
  if (fiber < 0 || fiber >= static_cast<int>(fibers_.size()))
    throw std::invalid_argument("col_component: bad fiber index");
  int m = component_count(fibers_[fiber]);
  if (component < 1 || component >= m)
    throw std::invalid_argument("col_component: bad component index");
  return fiber_offsets_[fiber] + component - 1;
}

int NsLattice::col_section(int j) const { return section_offset_ + j; }

VecZ NsLattice::identity_component(int fiber) const {
  VecZ v = VecZ::Zero(span_dim_);
  v(col_fiber_class()) = 1;
  int m = component_count(fibers_[fiber]);
  for (int c = 1; c < m; ++c) v(col_component(fiber, c)) = -1;
  return v;
}

VecZ NsLattice::ns_coords(const VecQ& span_vector) const {
  return overlattice_coords(over_, span_vector);
}

VecZ NsLattice::ns_coords(const VecZ& span_vector) const {
  return ns_coords(to_rational(span_vector));
}

NsLattice build_neron_severi(int chi, NsBase base,
                             const std::vector<KodairaType>& fibers,
                             const std::vector<NsSectionSpec>& sections,
                             const std::vector<NsTorsionSpec>& torsions,
                             const MatQ& extra_glue) {
  NsLattice out;
  out.chi_ = chi;
  out.fibers_ = fibers;

  int dim = 2;
  for (const auto& f : fibers) {
    if (f.cls != KodairaClass::kIn || f.n < 1)
      throw std::invalid_argument("build_neron_severi: only I_n fibers supported");
    out.fiber_offsets_.push_back(dim);
    dim += component_count(f) - 1;
  }
  out.section_offset_ = dim;
  dim += static_cast<int>(sections.size());
  out.span_dim_ = dim;

  const int trivial_dim = out.section_offset_;

  MatZ gram = MatZ::Zero(dim, dim);
  gram(0, 1) = 1;
  gram(1, 0) = 1;
  if (base == NsBase::kSection) {
    if (chi % 2 != 0)
      throw std::invalid_argument(
          "build_neron_severi: odd chi gives an odd lattice (O.O = -chi)");
    gram(1, 1) = -chi;  // zero section
  } else {
    gram(0, 1) = 2;   // bisection of square 0
    gram(1, 0) = 2;
    gram(1, 1) = 0;
    if (!sections.empty() || !torsions.empty())
      throw std::invalid_argument("build_neron_severi: bisection base takes glue only");
  }
  for (size_t v = 0; v < fibers.size(); ++v) {
    MatZ block = root_lattice_gram(fibers[v]);
    gram.block(out.fiber_offsets_[v], out.fiber_offsets_[v], block.rows(), block.cols()) =
        block;
  }
  for (size_t j = 0; j < sections.size(); ++j) {
    const NsSectionSpec& s = sections[j];
    if (s.contacts.size() != fibers.size())
      throw std::invalid_argument("build_neron_severi: one contact per fiber");
    int col = out.col_section(static_cast<int>(j));
    gram(col, col) = -2;
    gram(col, 0) = gram(0, col) = 1;
    gram(col, 1) = gram(1, col) = s.o_intersection;
    for (size_t v = 0; v < fibers.size(); ++v) {
      int c = s.contacts[v];
      if (c < 0 || c >= fibers[v].n)
        throw std::invalid_argument("build_neron_severi: bad contact");
      if (c >= 1) {
        int cc = out.col_component(static_cast<int>(v), c);
        gram(col, cc) = gram(cc, col) = 1;
      }
    }
    // Sections of different labels are assumed disjoint unless they share a
    // declared pairing; none of the shipped builds needs a nonzero one.
    for (size_t k = 0; k < j; ++k) {
      int ck = out.col_section(static_cast<int>(k));
      gram(col, ck) = gram(ck, col) = 0;
    }
  }

  // Torsion sections: the class is pinned inside the trivial part by its
  // pairings (F.P = 1, O.P = o_int, component contacts), then glued in.
  std::vector<VecQ> glue_rows;
  MatZ trivial_block = gram.topLeftCorner(trivial_dim, trivial_dim);
  MatQ trivial_gram = to_rational(trivial_block);
  for (const auto& tor : torsions) {
    if (tor.contacts.size() != fibers.size())
      throw std::invalid_argument("build_neron_severi: one torsion contact per fiber");
    std::vector<KodairaType> ftypes = fibers;
    SectionData probe;
    probe.contacts = tor.contacts;
    probe.o_intersection = tor.o_intersection;
    if (height_pairing(probe, chi, ftypes) != 0)
      throw std::invalid_argument("build_neron_severi: torsion contacts have nonzero height");

    VecQ rhs = VecQ::Zero(trivial_dim);
    rhs(0) = 1;
    rhs(1) = Rational(tor.o_intersection);
    for (size_t v = 0; v < fibers.size(); ++v) {
      int c = tor.contacts[v];
      if (c >= 1) rhs(out.col_component(static_cast<int>(v), c)) = 1;
    }
    VecQ p_triv = solve_exact(trivial_gram, rhs);
    VecQ p = VecQ::Zero(dim);
    p.head(trivial_dim) = p_triv;
    // Consistency: an honest torsion section is a (-2)-class pairing
    // integrally with every declared section.
    Rational sq = (p.transpose() * to_rational(gram) * p)(0);
    if (sq != -2)
      throw std::logic_error("build_neron_severi: torsion class has square != -2");
    for (size_t j = 0; j < sections.size(); ++j) {
      Rational pq = (p.transpose() * to_rational(gram).col(out.col_section(
                        static_cast<int>(j))))(0);
      if (!is_integral(pq))
        throw std::invalid_argument(
            "build_neron_severi: torsion glue pairs non-integrally with a section");
    }
    glue_rows.push_back(p);
    out.torsion_vectors_.push_back(p);
  }

  MatQ glue(static_cast<Eigen::Index>(glue_rows.size()) + extra_glue.rows(), dim);
  for (size_t i = 0; i < glue_rows.size(); ++i)
    glue.row(static_cast<Eigen::Index>(i)) = glue_rows[i].transpose();
  for (Eigen::Index i = 0; i < extra_glue.rows(); ++i) {
    if (extra_glue.cols() != dim)
      throw std::invalid_argument("build_neron_severi: extra glue size mismatch");
    glue.row(static_cast<Eigen::Index>(glue_rows.size()) + i) = extra_glue.row(i);
  }

  GramLattice span = GramLattice::make(gram);
  out.over_ = overlattice(span, glue);
  return out;
}

}  // namespace enr
