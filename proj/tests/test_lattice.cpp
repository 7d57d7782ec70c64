#include "doctest.h"

#include "enr/code3.hpp"
#include "enr/discform.hpp"
#include "enr/lattice.hpp"
#include "enr/overlattice.hpp"
#include "enr/roots.hpp"

#include <set>

using namespace enr;

namespace {

GramLattice n_copies(const std::string& sym, int n) {
  GramLattice l = make_named_lattice(sym);
  GramLattice out = l;
  for (int i = 1; i < n; ++i) out = direct_sum(out, l);
  return out;
}

}  // namespace

TEST_CASE("named lattices") {
  GramLattice a2 = make_named_lattice("A2");
  MatZ expect(2, 2);
  expect << -2, 1, 1, -2;
  CHECK(a2.gram() == expect);

  GramLattice u = make_named_lattice("U");
  CHECK(determinant(u) == -1);

  GramLattice e8 = make_named_lattice("E8");
  CHECK(e8.rank() == 8);
  CHECK(determinant(e8) == 1);

  CHECK(determinant(make_named_lattice("E7")) == -2);
  CHECK(determinant(make_named_lattice("E6")) == 3);
  CHECK(determinant(make_named_lattice("D8")) == 4);

  CHECK_THROWS(make_named_lattice("F4"));
  CHECK_THROWS(make_named_lattice("A0"));

  GramLattice u2 = make_named_lattice("U(2)");
  CHECK(determinant(u2) == -4);
  CHECK(make_named_lattice("<12>").gram()(0, 0) == 12);
}

TEST_CASE("scale") {
  MatZ g(2, 2);
  g << 2, 1, 1, 4;
  GramLattice l = GramLattice::make(g);
  GramLattice s = scale(l, Integer(3));
  MatZ expect(2, 2);
  expect << 6, 3, 3, 12;
  CHECK(s.gram() == expect);
  CHECK(scale(l, Integer(1)).gram() == g);
}

TEST_CASE("direct sums and determinants") {
  GramLattice m = n_copies("A2", 4);
  CHECK(determinant(m) == 81);

  GramLattice ns = direct_sum(direct_sum(make_named_lattice("U(2)"), n_copies("A2", 2)),
                              n_copies("E6", 2));
  CHECK(determinant(ns) == -324);
  Signature sig = signature(ns);
  CHECK(sig.n_plus == 1);
  CHECK(sig.n_minus == 17);

  GramLattice ns2 = direct_sum(
      direct_sum(make_named_lattice("U(2)"), make_named_lattice("A2")),
      direct_sum(make_named_lattice("E6"), make_named_lattice("E8")));
  CHECK(determinant(ns2) == -36);
}

TEST_CASE("signature") {
  Signature u = signature(make_named_lattice("U"));
  CHECK(u.n_plus == 1);
  CHECK(u.n_minus == 1);
  Signature e8 = signature(make_named_lattice("E8"));
  CHECK(e8.n_plus == 0);
  CHECK(e8.n_minus == 8);
  Signature big = signature(direct_sum(make_named_lattice("U(6)"), n_copies("E8", 2)));
  CHECK(big.n_plus == 1);
  CHECK(big.n_minus == 17);
}

TEST_CASE("smith normal form basics") {
  MatZ id = MatZ::Identity(3, 3);
  SmithForm s = smith_normal_form(id);
  CHECK(s.d == id);

  SmithForm a2 = smith_normal_form(make_named_lattice("A2").gram());
  CHECK(a2.d(0, 0) == 1);
  CHECK(a2.d(1, 1) == 3);
  CHECK(is_unimodular(a2.left));
  CHECK(is_unimodular(a2.right));
  CHECK(a2.left * make_named_lattice("A2").gram() * a2.right == a2.d);

  SmithForm m = smith_normal_form(n_copies("A2", 4).gram());
  std::vector<Integer> diag;
  for (int i = 0; i < 8; ++i) diag.push_back(m.d(i, i));
  CHECK(diag == std::vector<Integer>{1, 1, 1, 1, 3, 3, 3, 3});
}

TEST_CASE("discriminant groups") {
  FiniteAbelianGroup a2 = discriminant_group(make_named_lattice("A2"));
  CHECK(a2.invariant_factors == std::vector<Integer>{3});

  FiniteAbelianGroup m = discriminant_group(n_copies("A2", 4));
  CHECK(m.invariant_factors == std::vector<Integer>{3, 3, 3, 3});

  GramLattice cover = direct_sum(make_named_lattice("U(2)"), make_named_lattice("E8(2)"));
  FiniteAbelianGroup g = discriminant_group(cover);
  CHECK(g.order() == 1024);

  CHECK(p_length(m, 3) == 4);
  GramLattice ns = direct_sum(
      direct_sum(make_named_lattice("U(2)"), make_named_lattice("A2")),
      direct_sum(make_named_lattice("E6"), make_named_lattice("E8")));
  CHECK(p_length(discriminant_group(ns), 2) == 2);
  GramLattice ns2 = direct_sum(direct_sum(make_named_lattice("U(2)"), n_copies("A2", 2)),
                               n_copies("E6", 2));
  CHECK(p_length(discriminant_group(ns2), 2) == 2);
}

TEST_CASE("discriminant forms") {
  FiniteQuadraticForm qa2 = discriminant_form(make_named_lattice("A2"));
  VecZ gen = VecZ::Ones(1);
  CHECK(qa2.q(gen) == reduce_mod2(Rational(-2, 3)));

  FiniteQuadraticForm qe6 = discriminant_form(make_named_lattice("E6"));
  VecZ g6 = VecZ::Ones(1);
  CHECK(qe6.q(g6) == reduce_mod2(Rational(-4, 3)));

  FiniteQuadraticForm qe8 = discriminant_form(make_named_lattice("E8"));
  CHECK(qe8.group().num_generators() == 0);
}

TEST_CASE("qform isometry verdicts") {
  GramLattice l1 = direct_sum(make_named_lattice("U(6)"), n_copies("E8", 2));
  GramLattice l2 = direct_sum(
      direct_sum(make_named_lattice("U(2)"), make_named_lattice("A2")),
      direct_sum(make_named_lattice("E6"), make_named_lattice("E8")));
  IsometryResult iso = qforms_isometric(discriminant_form(l1), discriminant_form(l2));
  CHECK(iso.verdict == IsoVerdict::kIsometric);

  FiniteQuadraticForm q = discriminant_form(make_named_lattice("A2"));
  IsometryResult self = qforms_isometric(q, q);
  CHECK(self.verdict == IsoVerdict::kIsometric);

  IsometryResult no =
      qforms_isometric(q, discriminant_form(make_named_lattice("E6")));
  CHECK(no.verdict == IsoVerdict::kNotIsometric);
}

TEST_CASE("isotropic subgroups of q(4A2)") {
  FiniteQuadraticForm q = discriminant_form(n_copies("A2", 4));
  auto subs = isotropic_subgroups(q);
  std::set<Integer> orders;
  for (const auto& h : subs)
    if (h.order() > 1) orders.insert(h.order());
  CHECK(orders == std::set<Integer>{Integer(3), Integer(9)});
}

TEST_CASE("overlattice: index 9 overlattice of 4A2 is E8") {
  GramLattice m = n_copies("A2", 4);
  FiniteQuadraticForm q = discriminant_form(m);
  auto subs = isotropic_subgroups(q);
  const FiniteAbelianGroup& grp = q.group();
  bool found = false;
  for (const auto& h : subs) {
    if (h.order() != 9) continue;
    MatQ glue(static_cast<Eigen::Index>(h.generators.size()), m.rank());
    for (size_t i = 0; i < h.generators.size(); ++i) {
      VecQ lift = VecQ::Zero(m.rank());
      for (int j = 0; j < grp.num_generators(); ++j)
        lift += Rational(h.generators[i](j)) * grp.generator_lifts.row(j).transpose();
      glue.row(static_cast<Eigen::Index>(i)) = lift.transpose();
    }
    OverlatticeResult over = overlattice(m, glue);
    CHECK(over.index == 9);
    CHECK(determinant(over.lattice) == 1);
    CHECK(is_negative_definite(over.lattice));
    RootSystem roots = roots_of(over.lattice);
    CHECK(roots.roots.size() == 240);
    found = true;
    break;
  }
  CHECK(found);

  // Trivial glue leaves the lattice unchanged.
  OverlatticeResult trivial = overlattice(m, MatQ(0, m.rank()));
  CHECK(trivial.lattice.gram() == m.gram());
  CHECK(trivial.index == 1);
}

TEST_CASE("root counts") {
  CHECK(roots_of(make_named_lattice("A2")).roots.size() == 6);
  CHECK(roots_of(make_named_lattice("D8")).roots.size() == 112);
  CHECK(roots_of(make_named_lattice("E8")).roots.size() == 240);
  CHECK_THROWS(roots_of(make_named_lattice("U")));
}

TEST_CASE("orthogonal A2 configurations") {
  RootSystem d8 = roots_of(make_named_lattice("D8"));
  CHECK(!admits_orthogonal_A2s(d8, 4).has_value());

  RootSystem e7a1 = roots_of(direct_sum(make_named_lattice("E7"), make_named_lattice("A1")));
  CHECK(!admits_orthogonal_A2s(e7a1, 4).has_value());

  RootSystem e8 = roots_of(make_named_lattice("E8"));
  auto witness = admits_orthogonal_A2s(e8, 4);
  REQUIRE(witness.has_value());
  const MatZ& g = e8.lattice.gram();
  for (int i = 0; i < 4; ++i) {
    const auto& [r, s] = witness->pairs[i];
    CHECK(Integer((r.transpose() * g * r)(0)) == -2);
    CHECK(Integer((s.transpose() * g * s)(0)) == -2);
    CHECK(Integer((r.transpose() * g * s)(0)) == 1);
    for (int j = i + 1; j < 4; ++j) {
      const auto& [r2, s2] = witness->pairs[j];
      CHECK(Integer((r.transpose() * g * r2)(0)) == 0);
      CHECK(Integer((r.transpose() * g * s2)(0)) == 0);
      CHECK(Integer((s.transpose() * g * r2)(0)) == 0);
      CHECK(Integer((s.transpose() * g * s2)(0)) == 0);
    }
  }
}

TEST_CASE("orthogonal complement") {
  GramLattice amb = direct_sum(make_named_lattice("U(6)"), n_copies("E8", 2));
  MatZ sub(8, 18);
  sub.setZero();
  for (int i = 0; i < 8; ++i) sub(i, 2 + i) = 1;  // first E8 summand
  ComplementResult comp = orthogonal_complement(amb, sub);
  CHECK(comp.lattice.rank() == 10);
  CHECK(det_exact(comp.lattice.gram()) == -36);
  // Complement pairs to zero with the sublattice.
  MatZ cross = comp.basis * amb.gram() * sub.transpose();
  CHECK(cross.isZero());
}

TEST_CASE("ternary code basics") {
  TernaryCode zero = kernel_f3(MatZ::Identity(4, 4));
  CHECK(zero.dim() == 0);
  CHECK(lines_count(zero) == 0);

  TernaryCode full = kernel_f3(MatZ::Zero(4, 4));
  CHECK(full.dim() == 4);

  TernaryCode rep = TernaryCode::from_generators({{1, 1, 1, 1, 1, 1}}, 6);
  auto wd = weight_distribution(rep);
  CHECK(wd == std::multiset<int>{6, 6});
  CHECK(lines_count(rep) == 1);

  CHECK(griesmer_max_dim(8, 6) == 2);
  CHECK(griesmer_max_dim(6, 6) == 1);
  CHECK(griesmer_max_dim(5, 5) == 1);
  CHECK(griesmer_max_dim(3, 3) == 1);
}

TEST_CASE("exhaustive code search, small cases") {
  auto easy = exhaustive_no_code(3, 1, {3});
  REQUIRE(easy.witness.has_value());
  CHECK(easy.witness->dim() == 1);

  auto wit = exhaustive_no_code(8, 2, {6});
  REQUIRE(wit.witness.has_value());
  auto wd = weight_distribution(*wit.witness);
  CHECK(wd.size() == 8);
  CHECK(*wd.begin() == 6);
  CHECK(*wd.rbegin() == 6);
}

TEST_CASE("f3 linear system") {
  MatZ a(4, 4);
  a << 1, 1, 1, 0,
       1, -1, 0, 1,
       0, 1, -1, 1,
      -1, 0, 1, 1;
  VecZ rhs(4);
  rhs << 1, 0, 1, -1;
  F3SystemSolution sol = solve_f3_system(a, rhs);
  CHECK(sol.solutions.empty());

  MatZ single(1, 2);
  single << 1, 0;
  VecZ r1(1);
  r1 << 1;
  CHECK(solve_f3_system(single, r1).solutions.size() == 3);

  MatZ full = MatZ::Identity(3, 3);
  F3SystemSolution hom = solve_f3_system(full, VecZ::Zero(3));
  CHECK(hom.rank == 3);
  CHECK(hom.solutions.size() == 1);
}
