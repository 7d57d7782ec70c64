#include "enr/divisor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace enr {

namespace {

GramLattice build_num_s(int scale_factor) {
  MatZ g = MatZ::Zero(10, 10);
  g(0, 1) = 1;
  g(1, 0) = 1;
  g.bottomRightCorner(8, 8) = cartan_gram_E(8);
  return GramLattice::make(g * Integer(scale_factor),
                           scale_factor == 1 ? "U+E8" : "U(2)+E8(2)");
}

}  // namespace

const GramLattice& num_s_lattice() {
  static const GramLattice l = build_num_s(1);
  return l;
}

const GramLattice& cover_num_s_lattice() {
  static const GramLattice l = build_num_s(2);
  return l;
}

DivisorClass DivisorClass::num_s(VecZ coords) {
  if (coords.size() != 10) throw std::invalid_argument("DivisorClass: need 10 coords");
  return DivisorClass{std::move(coords), Ambient::kNumS};
}

DivisorClass DivisorClass::cover(VecZ coords) {
  if (coords.size() != 10) throw std::invalid_argument("DivisorClass: need 10 coords");
  return DivisorClass{std::move(coords), Ambient::kCoverNumS};
}

DivisorClass DivisorClass::basis_vector(int i, Ambient a) {
  VecZ v = VecZ::Zero(10);
  v(i) = 1;
  return DivisorClass{std::move(v), a};
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (ambient != o.ambient) throw std::invalid_argument("DivisorClass: ambient mismatch");
  return DivisorClass{coords + o.coords, ambient};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  if (ambient != o.ambient) throw std::invalid_argument("DivisorClass: ambient mismatch");
  return DivisorClass{coords - o.coords, ambient};
}

DivisorClass DivisorClass::operator*(const Integer& n) const {
  return DivisorClass{coords * n, ambient};
}

namespace {

const GramLattice& ambient_lattice(Ambient a) {
  return a == Ambient::kNumS ? num_s_lattice() : cover_num_s_lattice();
}

}  // namespace

Integer intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("intersect: ambient mismatch");
  return ambient_lattice(a.ambient).pair(a.coords, b.coords);
}

Integer self_intersection(const DivisorClass& a) { return intersect(a, a); }

DivisorClass reflect(const DivisorClass& d, const DivisorClass& e) {
  if (self_intersection(e) != -2)
    throw std::invalid_argument("reflect: mirror class must have square -2");
  Integer m = intersect(d, e);
  return DivisorClass{d.coords + e.coords * m, d.ambient};
}

DivisorClass apply_word(const ReflectionWord& w, DivisorClass d) {
  for (const auto& e : w.steps) d = reflect(d, e);
  return d;
}

DivisorClass pullback_to_cover(const DivisorClass& d) {
  if (d.ambient != Ambient::kNumS)
    throw std::invalid_argument("pullback_to_cover: already a cover class");
  return DivisorClass{d.coords, Ambient::kCoverNumS};
}

void validate_fiber(const FiberDivisor& f, const DivisorClass& h) {
  if (static_cast<int>(f.components.size()) != component_count(f.type))
    throw std::invalid_argument("validate_fiber: wrong component count for " + f.type.str());
  if (f.multiplicities.size() != f.components.size())
    throw std::invalid_argument("validate_fiber: multiplicities size mismatch");
  if (f.type.additive() && f.half_pencil)
    throw std::invalid_argument("validate_fiber: additive fiber cannot be multiple");

  static const std::map<KodairaClass, std::multiset<int>> expected = {
      {KodairaClass::kII, {1}},
      {KodairaClass::kIII, {1, 1}},
      {KodairaClass::kIV, {1, 1, 1}},
      {KodairaClass::kIVStar, {1, 1, 1, 2, 2, 2, 3}},
      {KodairaClass::kIIIStar, {1, 1, 2, 2, 2, 3, 3, 4}},
      {KodairaClass::kIIStar, {1, 2, 2, 3, 3, 4, 4, 5, 6}},
  };
  std::multiset<int> mults(f.multiplicities.begin(), f.multiplicities.end());
  if (f.type.cls == KodairaClass::kIn) {
    for (int m : mults)
      if (m != 1) throw std::invalid_argument("validate_fiber: I_n multiplicities are 1");
  } else if (f.type.cls == KodairaClass::kInStar) {
    std::multiset<int> want;
    for (int i = 0; i < 4; ++i) want.insert(1);
    for (int i = 0; i < f.type.n + 1; ++i) want.insert(2);
    if (mults != want)
      throw std::invalid_argument("validate_fiber: bad I_n* multiplicities");
  } else if (mults != expected.at(f.type.cls)) {
    throw std::invalid_argument("validate_fiber: bad multiplicities for " + f.type.str());
  }

  DivisorClass sum = f.components[0] * Integer(f.multiplicities[0]);
  for (size_t i = 1; i < f.components.size(); ++i)
    sum = sum + f.components[i] * Integer(f.multiplicities[i]);
  DivisorClass target = h * Integer(f.half_pencil ? 1 : 2);
  if (!(sum == target))
    throw std::invalid_argument("validate_fiber: components do not sum to the fiber class");
}

FiberDecomposition fiber_decompose(const DivisorClass& d,
                                   const std::vector<FiberDivisor>& fibers,
                                   const DivisorClass& h) {
  if (intersect(d, h) != 0)
    throw std::invalid_argument("fiber_decompose: D not orthogonal to H");
  const GramLattice& amb = ambient_lattice(d.ambient);

  for (size_t v = 0; v < fibers.size(); ++v) {
    const FiberDivisor& fib = fibers[v];
    const int m = static_cast<int>(fib.components.size());
    // Solve D - n H = sum c_i Theta_i exactly; components of one fiber are
    // independent, so the solution in (n, c) is unique when it exists.
    MatQ a(10, m + 1);
    for (int i = 0; i < m; ++i)
      a.col(i) = to_rational(fib.components[i].coords);
    a.col(m) = to_rational(h.coords);
    VecQ rhs = to_rational(d.coords);
    VecQ sol;
    try {
      sol = solve_exact(a, rhs);
    } catch (const std::domain_error&) {
      continue;
    }
    bool integral = true;
    for (Eigen::Index i = 0; i < sol.size(); ++i)
      if (!is_integral(sol(i))) integral = false;
    if (!integral) continue;

    std::vector<Integer> c0(m);
    for (int i = 0; i < m; ++i) c0[i] = Integer(sol(i).get_num());
    Integer n0 = Integer(sol(m).get_num());

    // The fiber relation sum mult_i Theta_i = (1 or 2) H makes the solution
    // a line; walk the shifts until the window 0 < D_tilde < fiber divisor
    // holds (the window against the multiplicity vector encodes D_tilde < 2H,
    // or < H on a half-pencil).
    Integer h_mult = fib.half_pencil ? 1 : 2;
    Integer spread = 2;
    for (int i = 0; i < m; ++i) spread = std::max(spread, Integer(abs(c0[i]) + 1));
    for (Integer k = -spread; k <= spread; ++k) {
      bool nonzero = false, below = false, ok = true;
      std::vector<Integer> c(m);
      for (int i = 0; i < m; ++i) {
        c[i] = c0[i] + k * Integer(fib.multiplicities[i]);
        if (c[i] < 0 || c[i] > fib.multiplicities[i]) ok = false;
        if (c[i] > 0) nonzero = true;
        if (c[i] < fib.multiplicities[i]) below = true;
      }
      if (ok && nonzero && below)
        return FiberDecomposition{n0 - k * h_mult, static_cast<int>(v), c};
    }
  }
  throw std::domain_error("fiber_decompose: no admissible decomposition found");
}

F3SystemSolution h_multiplicity_system(const HMultiplicitySystem& sys) {
  return solve_f3_system(sys.coeffs, sys.rhs);
}

}  // namespace enr
