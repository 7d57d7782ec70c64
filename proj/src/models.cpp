#include "enr/models.hpp"

#include "enr/divisor.hpp"
#include "enr/roots.hpp"

#include <stdexcept>

namespace enr {
namespace models {

namespace {

Rational Q(long n, long d = 1) { return make_fraction(Integer(n), Integer(d)); }

VecZ embed_e8(const VecZ& root) {
  VecZ v = VecZ::Zero(10);
  v.tail(8) = root;
  return v;
}

VecZ unit(int n, int i) {
  VecZ v = VecZ::Zero(n);
  v(i) = 1;
  return v;
}

// Four pairwise orthogonal A2 pairs spanning a full-rank 4A2 inside E8,
// found deterministically from the root list.
std::vector<std::pair<VecZ, VecZ>> orthogonal_a2_quadruple() {
  static const std::vector<std::pair<VecZ, VecZ>> cached = [] {
    auto witness = admits_orthogonal_A2s(roots_of(make_named_lattice("E8")), 4);
    if (!witness) throw std::logic_error("orthogonal_a2_quadruple: search failed");
    return witness->pairs;
  }();
  return cached;
}

// Basis pair of the A2 orthogonal to the E6 = <alpha_1..alpha_6> in E8.
std::pair<VecZ, VecZ> e6_complement_a2() {
  RootSystem e8 = roots_of(make_named_lattice("E8"));
  const MatZ& g = e8.lattice.gram();
  std::vector<VecZ> perp;
  for (const auto& r : e8.roots) {
    bool ok = true;
    for (int j = 0; j < 6 && ok; ++j)
      if ((r.transpose() * g * unit(8, j))(0) != 0) ok = false;
    if (ok) perp.push_back(r);
  }
  for (size_t i = 0; i < perp.size(); ++i)
    for (size_t j = i + 1; j < perp.size(); ++j)
      if ((perp[i].transpose() * g * perp[j])(0) == 1) return {perp[i], perp[j]};
  throw std::logic_error("e6_complement_a2: no pair found");
}

MatZ differences_from_pairs(const std::vector<std::pair<VecZ, VecZ>>& pairs) {
  MatZ d(static_cast<Eigen::Index>(pairs.size()), pairs[0].first.size());
  for (size_t i = 0; i < pairs.size(); ++i)
    d.row(static_cast<Eigen::Index>(i)) = (pairs[i].first - pairs[i].second).transpose();
  return d;
}

}  // namespace

WeierstrassModel x431() {
  WeierstrassModel w;
  w.a1 = RatPoly{Q(1)};
  w.a3 = RatPoly{Q(0), Q(1)};
  w.label = "X_{4,3,1}";
  return w;
}

WeierstrassModel x44() {
  WeierstrassModel w;
  w.a3 = RatPoly{Q(0), Q(1)};
  w.label = "X_{4,4}";
  return w;
}

WeierstrassModel x6321() {
  WeierstrassModel w;
  w.a2 = RatPoly{Q(-2), Q(1), Q(1, 4)};
  w.a4 = RatPoly{Q(1), Q(-1)};
  w.label = "X_{6,3,2,1}";
  return w;
}

WeierstrassModel x3333() {
  // Jacobian of the Hesse pencil x^3 + y^3 + z^3 + 3t xyz: four I3 fibers at
  // the third roots of -1 and at infinity.
  WeierstrassModel w;
  w.a4 = RatPoly{Q(0), Q(27 * 8), Q(0), Q(0), Q(-27)};  // 27 t (8 - t^3)
  w.a6 = RatPoly{Q(-8 * 54), Q(0), Q(0), Q(20 * 54), Q(0), Q(0), Q(54)};
  w.label = "X_{3,3,3,3}";
  return w;
}

DivisibilityConfig f3333_enriques() {
  DivisibilityConfig cfg{num_s_lattice(), MatZ(), {}};
  for (const auto& [r, s] : orthogonal_a2_quadruple())
    cfg.pairs.emplace_back(embed_e8(r), embed_e8(s));
  cfg.differences = differences_from_pairs(cfg.pairs);
  return cfg;
}

DivisibilityConfig f3333_enriques_small() {
  DivisibilityConfig cfg = f3333_enriques();
  // Fourth configuration replaced by (first component, affine component):
  // the affine class is 2e - r - s off the fiber relation r + s + aff = 2H.
  VecZ e = unit(10, 0);
  auto& [r4, s4] = cfg.pairs[3];
  VecZ affine = 2 * e - r4 - s4;
  cfg.pairs[3] = {r4, affine};
  cfg.differences = differences_from_pairs(cfg.pairs);
  return cfg;
}

DivisibilityConfig f431_enriques() {
  // IV* fiber inside U + E8: central alpha_4, arms (alpha_3, alpha_1),
  // (alpha_5, alpha_6), (alpha_2, affine); I3 fiber from the complement A2.
  DivisibilityConfig cfg{num_s_lattice(), MatZ(), {}};
  VecZ e = unit(10, 0);
  auto a = [&](int i) { return unit(10, 1 + i); };  // alpha_i at column 1+i
  VecZ theta6 = a(1) + 2 * a(2) + 2 * a(3) + 3 * a(4) + 2 * a(5) + a(6);
  VecZ affine = 2 * e - theta6;
  cfg.pairs.emplace_back(a(1), a(3));
  cfg.pairs.emplace_back(a(6), a(5));
  cfg.pairs.emplace_back(affine, a(2));
  auto [b1, b2] = e6_complement_a2();
  cfg.pairs.emplace_back(embed_e8(b1), embed_e8(b2));
  cfg.differences = differences_from_pairs(cfg.pairs);
  return cfg;
}

namespace {

// Span basis of the F_{4,3,1} cover: [D, F | E6#1 | E6#2 | A2#1 | A2#2].
struct F431CoverSpan {
  GramLattice span;
  OverlatticeResult over;
};

const F431CoverSpan& f431_cover_span() {
  static const F431CoverSpan data = [] {
    MatZ g = MatZ::Zero(18, 18);
    g(0, 1) = 2;
    g(1, 0) = 2;
    g.block(2, 2, 6, 6) = cartan_gram_E(6);
    g.block(8, 8, 6, 6) = cartan_gram_E(6);
    g.block(14, 14, 2, 2) = cartan_gram_A(2);
    g.block(16, 16, 2, 2) = cartan_gram_A(2);
    GramLattice span = GramLattice::make(g, "U(2)+E6^2+A2^2 span");
    // Glue: minimal vectors of E6^vee twice each and of A2^vee twice each,
    // of total square -4.
    MatQ glue = MatQ::Zero(1, 18);
    auto put_e6 = [&](int offset) {
      // (alpha_1 - alpha_3 - alpha_6 + alpha_5)/3 has square -4/3.
      glue(0, offset + 0) = Q(1, 3);
      glue(0, offset + 2) = Q(-1, 3);
      glue(0, offset + 5) = Q(-1, 3);
      glue(0, offset + 4) = Q(1, 3);
    };
    auto put_a2 = [&](int offset) {
      glue(0, offset + 0) = Q(1, 3);
      glue(0, offset + 1) = Q(-1, 3);
    };
    put_e6(2);
    put_e6(8);
    put_a2(14);
    put_a2(16);
    return F431CoverSpan{span, overlattice(span, glue)};
  }();
  return data;
}

}  // namespace

DivisibilityConfig f431_cover() {
  const F431CoverSpan& data = f431_cover_span();
  // Differences in span coordinates, then re-expressed in the overlattice
  // basis. Configuration order: three A2's of IV*#1, three of IV*#2, then
  // the I3 fibers.
  auto e6_diffs = [&](int offset) {
    std::vector<VecQ> d;
    VecQ d1 = VecQ::Zero(18), d2 = VecQ::Zero(18), d3 = VecQ::Zero(18);
    d1(offset + 0) = 1;
    d1(offset + 2) = -1;  // alpha_1 - alpha_3
    d2(offset + 5) = 1;
    d2(offset + 4) = -1;  // alpha_6 - alpha_5
    // affine - alpha_2 = F - theta - alpha_2
    d3(1) = 1;
    Rational theta[6] = {Q(1), Q(3), Q(2), Q(3), Q(2), Q(1)};  // theta + alpha_2
    for (int i = 0; i < 6; ++i) d3(offset + i) = -theta[i];
    return std::vector<VecQ>{d1, d2, d3};
  };
  std::vector<VecQ> rows;
  for (auto& d : e6_diffs(2)) rows.push_back(d);
  for (auto& d : e6_diffs(8)) rows.push_back(d);
  for (int offset : {14, 16}) {
    VecQ d = VecQ::Zero(18);
    d(offset) = 1;
    d(offset + 1) = -1;
    rows.push_back(d);
  }
  MatZ diffs(8, data.over.lattice.rank());
  for (int i = 0; i < 8; ++i)
    diffs.row(i) = overlattice_coords(data.over, rows[i]).transpose();
  return DivisibilityConfig{data.over.lattice, diffs, {}};
}

GramLattice overlattice_M() {
  MatZ g = MatZ::Zero(16, 16);
  g.block(0, 0, 6, 6) = cartan_gram_E(6);
  g.block(6, 6, 6, 6) = cartan_gram_E(6);
  g.block(12, 12, 2, 2) = cartan_gram_A(2);
  g.block(14, 14, 2, 2) = cartan_gram_A(2);
  GramLattice span = GramLattice::make(g, "A2^2+E6^2");
  MatQ glue = MatQ::Zero(1, 16);
  for (int offset : {0, 6}) {
    glue(0, offset + 0) = Q(1, 3);
    glue(0, offset + 2) = Q(-1, 3);
    glue(0, offset + 5) = Q(-1, 3);
    glue(0, offset + 4) = Q(1, 3);
  }
  for (int offset : {12, 14}) {
    glue(0, offset + 0) = Q(1, 3);
    glue(0, offset + 1) = Q(-1, 3);
  }
  OverlatticeResult over = overlattice(span, glue);
  if (over.index != 3) throw std::logic_error("overlattice_M: expected index 3");
  return over.lattice;
}

namespace {

// Span of the F_{3,3,3,3} cover: [D, F | 8 x A2], blocks ordered
// (1+, 2+, 3+, 4+, 1-, 2-, 3-, 4-). The glue is the doubled tetracode.
struct F3333CoverSpan {
  GramLattice span;
  OverlatticeResult over;
};

const F3333CoverSpan& f3333_cover_span() {
  static const F3333CoverSpan data = [] {
    MatZ g = MatZ::Zero(18, 18);
    g(0, 1) = 2;
    g(1, 0) = 2;
    for (int b = 0; b < 8; ++b) g.block(2 + 2 * b, 2 + 2 * b, 2, 2) = cartan_gram_A(2);
    GramLattice span = GramLattice::make(g, "U(2)+A2^8 span");
    const int tetracode[2][4] = {{1, 0, 1, 1}, {0, 1, 1, -1}};
    MatQ glue = MatQ::Zero(2, 18);
    for (int r = 0; r < 2; ++r)
      for (int b = 0; b < 8; ++b) {
        int lambda = tetracode[r][b % 4];
        glue(r, 2 + 2 * b) = Q(lambda, 3);
        glue(r, 2 + 2 * b + 1) = Q(-lambda, 3);
      }
    return F3333CoverSpan{span, overlattice(span, glue)};
  }();
  return data;
}

}  // namespace

DivisibilityConfig f3333_cover() {
  const F3333CoverSpan& data = f3333_cover_span();
  MatZ diffs(8, data.over.lattice.rank());
  for (int b = 0; b < 8; ++b) {
    VecQ d = VecQ::Zero(18);
    d(2 + 2 * b) = 1;
    d(2 + 2 * b + 1) = -1;
    diffs.row(b) = overlattice_coords(data.over, d).transpose();
  }
  return DivisibilityConfig{data.over.lattice, diffs, {}};
}

DivisibilityConfig f3333_cover_small() {
  const F3333CoverSpan& data = f3333_cover_span();
  MatZ diffs(8, data.over.lattice.rank());
  for (int b = 0; b < 8; ++b) {
    VecQ d = VecQ::Zero(18);
    if (b % 4 == 3) {
      // Configurations (4,+) and (4,-) use the pair (first component,
      // affine component): difference 2 beta_1 + beta_2 - F.
      d(2 + 2 * b) = 2;
      d(2 + 2 * b + 1) = 1;
      d(1) = -1;
    } else {
      d(2 + 2 * b) = 1;
      d(2 + 2 * b + 1) = -1;
    }
    diffs.row(b) = overlattice_coords(data.over, d).transpose();
  }
  return DivisibilityConfig{data.over.lattice, diffs, {}};
}

namespace {

const std::vector<KodairaType>& y6321_fibers() {
  static const std::vector<KodairaType> f = {
      KodairaType::In(6), KodairaType::In(6), KodairaType::In(3), KodairaType::In(3),
      KodairaType::In(2), KodairaType::In(2), KodairaType::In(1), KodairaType::In(1)};
  return f;
}

}  // namespace

NsLattice y6321_ns(std::optional<HeightThreeCase> with_section) {
  NsTorsionSpec p6;
  p6.contacts = {1, 1, 1, 1, 1, 1, 0, 0};
  std::vector<NsSectionSpec> sections;
  if (with_section) {
    NsSectionSpec q;
    q.o_intersection = 1;
    q.label = "Q";
    // Q is the pull-back of a twist-side section, hence anti-invariant for
    // the deck transformation: contacts at conjugate fibers are negatives of
    // each other (3 = -3 mod 6 in the first case).
    q.contacts = *with_section == HeightThreeCase::kOne
                     ? std::vector<int>{3, 3, 0, 0, 0, 0, 0, 0}
                     : std::vector<int>{1, 5, 1, 2, 0, 0, 0, 0};
    sections.push_back(q);
  }
  return build_neron_severi(2, NsBase::kSection, y6321_fibers(), sections, {p6},
                            MatQ(0, 0));
}

MatZ y6321_e8_blocks(const NsLattice& ns) {
  const int dim = ns.span_dim();
  auto comp = [&](int fiber, int c) {
    VecZ v = VecZ::Zero(dim);
    v(ns.col_component(fiber, c)) = 1;
    return v;
  };
  auto zero_section = [&] {
    VecZ v = VecZ::Zero(dim);
    v(ns.col_zero()) = 1;
    return v;
  };
  // Block 1: O connected to the identity components of I2#1, I3#1 and the
  // chain of I6#1 running away from the torsion contact.
  std::vector<VecZ> span_rows;
  span_rows.push_back(zero_section());
  span_rows.push_back(ns.identity_component(4));   // I2#1 identity
  span_rows.push_back(ns.identity_component(2));   // I3#1 identity
  span_rows.push_back(comp(2, 2));                 // I3#1 away from P6
  span_rows.push_back(ns.identity_component(0));   // I6#1 identity
  span_rows.push_back(comp(0, 5));
  span_rows.push_back(comp(0, 4));
  span_rows.push_back(comp(0, 3));

  MatZ rows(16, ns.lattice().rank());
  for (int i = 0; i < 8; ++i) rows.row(i) = ns.ns_coords(span_rows[i]).transpose();

  // Block 2: the 6-torsion section with the mirrored components of the #2
  // fibers (P6 meets component 1 everywhere).
  rows.row(8) = ns.ns_coords(ns.torsion_vector(0)).transpose();
  std::vector<VecZ> block2 = {comp(5, 1), comp(3, 1), comp(3, 2),
                              comp(1, 1), comp(1, 2), comp(1, 3), comp(1, 4)};
  for (int i = 0; i < 7; ++i) rows.row(9 + i) = ns.ns_coords(block2[i]).transpose();
  return rows;
}

VecZ y6321_multisection(const NsLattice& ns) {
  VecZ v = VecZ::Zero(ns.span_dim());
  v(ns.col_component(0, 1)) = 1;
  return ns.ns_coords(v);
}

VecZ y6321_iistar_fiber(const NsLattice& ns) {
  VecZ v = VecZ::Zero(ns.span_dim());
  v(ns.col_zero()) = 6;
  VecZ idc2 = ns.identity_component(4);
  VecZ idc3 = ns.identity_component(2);
  VecZ idc6 = ns.identity_component(0);
  v += 3 * idc2 + 4 * idc3 + 5 * idc6;
  v(ns.col_component(2, 2)) += 2;
  v(ns.col_component(0, 5)) += 4;
  v(ns.col_component(0, 4)) += 3;
  v(ns.col_component(0, 3)) += 2;
  v(ns.col_component(0, 2)) += 1;
  return ns.ns_coords(v);
}

NsLattice jac_y3333_ns() {
  std::vector<KodairaType> fibers(8, KodairaType::In(3));
  NsTorsionSpec pa, pb;
  pa.contacts = {1, 0, 1, 1, 1, 0, 1, 1};
  pb.contacts = {0, 1, 1, 2, 0, 1, 1, 2};
  return build_neron_severi(2, NsBase::kSection, fibers, {}, {pa, pb}, MatQ(0, 0));
}

TwistFamilyResult twist_family_section(const Rational& b) {
  for (long excluded : {-8, -2, 0, 1, 10})
    if (b == Q(excluded))
      throw std::invalid_argument("twist_family_section: b = " + fraction_str(b) +
                                  " is excluded");
  TwistFamilyResult out;
  out.a = Q(-1, 3) * (b + 2) * (b + 2) / (b - 4);
  out.c = (b + 8) * (b - 1) * (b - 1) / 27;

  RatPoly t_minus_a{-out.a, Q(1)};
  RatPoly t_minus_b{-b, Q(1)};
  RatPoly quadratic{Q(-2), Q(1), Q(1, 4)};  // t^2/4 + t - 2
  RatPoly one_minus_t{Q(1), Q(-1)};

  WeierstrassModel w;
  w.a2 = t_minus_a * t_minus_b * quadratic;
  w.a4 = t_minus_a * t_minus_a * t_minus_b * t_minus_b * one_minus_t;
  w.label = "X'_{6,3,2,1}(a,b)";
  out.model = w;

  RatPoly xq = RatPoly::constant(out.c) * t_minus_a;
  RatPoly rhs = xq * xq * xq + w.a2 * xq * xq + w.a4 * xq;
  // The base field is C: the y-coordinate is sqrt(unit) * root with a
  // rational unit that need not be a square in Q.
  auto sq = poly_square_up_to_unit(rhs);
  if (!sq)
    throw std::logic_error("twist_family_section: section is not on the curve");
  out.y_unit = sq->unit;
  out.y = sq->root;
  if (!(RatPoly::constant(sq->unit) * sq->root * sq->root == rhs))
    throw std::logic_error("twist_family_section: square decomposition failed");
  SectionData s;
  s.x = RatFunction{xq, RatPoly{Q(1)}};
  s.label = "Q'";
  out.section = s;
  return out;
}

CurveGraph figure1_graph() {
  CurveGraph g;
  for (int i = 0; i < 6; ++i) g.add_vertex("g" + std::to_string(i));
  for (int i = 0; i < 3; ++i) g.add_vertex("t" + std::to_string(i));
  g.add_vertex("d0");
  g.add_vertex("d1");
  g.add_vertex("R");
  for (int i = 0; i < 6; ++i) g.add_edge("g" + std::to_string(i), "g" + std::to_string((i + 1) % 6));
  g.add_edge("t0", "t1");
  g.add_edge("t0", "t2");
  g.add_edge("t1", "t2");
  g.add_edge("d0", "d1", 2);
  g.add_edge("R", "g1");
  g.add_edge("R", "g4");
  g.add_edge("R", "t0", 2);
  g.add_edge("R", "d0");
  g.add_edge("R", "d1");
  return g;
}

CurveGraph example310_graph() {
  CurveGraph g;
  g.add_vertex("R");
  for (int j = 1; j <= 4; ++j)
    for (const char* c : {"a", "b", "c"})
      g.add_vertex(std::string(c) + std::to_string(j));
  for (int j = 1; j <= 4; ++j) {
    std::string a = "a" + std::to_string(j);
    std::string b = "b" + std::to_string(j);
    std::string c = "c" + std::to_string(j);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(a, c);
  }
  for (int j = 1; j <= 3; ++j) g.add_edge("R", "a" + std::to_string(j), 2);
  g.add_edge("R", "a4");
  g.add_edge("R", "b4");
  return g;
}

CurveGraph iistar_tree() {
  CurveGraph g;
  for (int i = 1; i <= 9; ++i) g.add_vertex("e" + std::to_string(i));
  g.add_edge("e1", "e4");
  for (int i = 2; i <= 8; ++i) g.add_edge("e" + std::to_string(i), "e" + std::to_string(i + 1));
  // Classes: e2..e8 are alpha_1, alpha_3..alpha_8 of the E8 summand, e1 is
  // alpha_2 and e9 the affine component 2e - highest root.
  auto alpha = [&](int i) { return DivisorClass::basis_vector(1 + i); };
  g.assign_class("e1", alpha(2));
  g.assign_class("e2", alpha(1));
  int chain[6] = {3, 4, 5, 6, 7, 8};
  for (int i = 0; i < 6; ++i)
    g.assign_class("e" + std::to_string(3 + i), alpha(chain[i]));
  VecZ high = VecZ::Zero(10);
  high(0) = 2;
  int coeff[8] = {2, 3, 4, 6, 5, 4, 3, 2};
  for (int i = 0; i < 8; ++i) high(2 + i) = -coeff[i];
  g.assign_class("e9", DivisorClass::num_s(high));
  g.validate_classes();
  return g;
}

}  // namespace models
}  // namespace enr
