#include "enr/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace enr {

namespace {

bool lex_less(const VecZ& a, const VecZ& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

// Some integer s with s^2 >= r (loose upper bound for the search radius;
// candidates are still tested exactly).
Integer exact_isqrt_bound(const Rational& r) {
  if (r <= 0) return 0;
  Integer num = Integer(r.get_num());
  Integer den = Integer(r.get_den());
  Integer q = num / den + 1;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  return s + 1;
}

}  // namespace

std::vector<VecZ> vectors_of_square(const GramLattice& l, const Integer& square) {
  if (!is_negative_definite(l))
    throw std::domain_error("vectors_of_square: lattice not negative definite");
  if (square >= 0) throw std::invalid_argument("vectors_of_square: need negative square");
  const Eigen::Index n = l.rank();
  const Rational target(-square);

  // Decompose -G = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 with d_i > 0.
  MatQ a = -to_rational(l.gram());
  MatQ u = MatQ::Zero(n, n);
  VecQ d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i) = a(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) u(i, j) = a(i, j) / a(i, i);
    for (Eigen::Index r = i + 1; r < n; ++r)
      for (Eigen::Index c = i + 1; c < n; ++c)
        a(r, c) -= a(i, r) * a(i, c) / a(i, i);
  }

  std::vector<VecZ> found;
  VecZ x = VecZ::Zero(n);
  // Enumerate coordinates from the last one down; remaining budget is exact.
  std::function<void(Eigen::Index, Rational)> descend = [&](Eigen::Index i,
                                                            Rational budget) {
    if (i < 0) {
      if (budget == 0) found.push_back(x);
      return;
    }
    Rational center = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) center += u(i, j) * Rational(x(j));
    // d_i (x_i + center)^2 <= budget.
    Rational radius2 = budget / d(i);
    Integer lo = ceil_rational(-center) - exact_isqrt_bound(radius2);
    Integer hi = floor_rational(-center) + exact_isqrt_bound(radius2);
    for (Integer v = lo; v <= hi; ++v) {
      Rational term = (Rational(v) + center);
      Rational used = d(i) * term * term;
      if (used > budget) continue;
      x(i) = v;
      descend(i - 1, budget - used);
    }
    x(i) = 0;
  };
  descend(n - 1, target);

  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

RootSystem roots_of(const GramLattice& l) {
  return RootSystem{l, vectors_of_square(l, Integer(-2))};
}

std::optional<A2Witness> admits_orthogonal_A2s(const RootSystem& r, int k) {
  if (k < 1) throw std::invalid_argument("admits_orthogonal_A2s: k must be >= 1");
  const auto& roots = r.roots;
  const MatZ& g = r.lattice.gram();

  auto pairing = [&](const VecZ& a, const VecZ& b) {
    return Integer((a.transpose() * g * b)(0));
  };

  // Collect the distinct A2 sublattices, keyed by their six roots.
  struct A2 { VecZ r, s; };
  std::vector<A2> configs;
  std::map<std::string, bool> seen;
  auto root_key = [&](const VecZ& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) { s += v(i).get_str(); s += ','; }
    return s;
  };
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (pairing(roots[i], roots[j]) != 1) continue;
      VecZ third = -(roots[i] + roots[j]);
      std::vector<std::string> keys = {root_key(roots[i]),  root_key(roots[j]),
                                       root_key(third),     root_key(-roots[i]),
                                       root_key(-roots[j]), root_key(-third)};
      std::sort(keys.begin(), keys.end());
      std::string key;
      for (auto& s : keys) key += s + "|";
      if (seen.emplace(key, true).second)
        configs.push_back(A2{roots[i], roots[j]});
    }

  std::vector<int> chosen;
  auto orthogonal = [&](int a, int b) {
    return pairing(configs[a].r, configs[b].r) == 0 &&
           pairing(configs[a].r, configs[b].s) == 0 &&
           pairing(configs[a].s, configs[b].r) == 0 &&
           pairing(configs[a].s, configs[b].s) == 0;
  };
  std::function<bool(int, int)> pick = [&](int start, int remaining) -> bool {
    if (remaining == 0) return true;
    for (int c = start; c + remaining <= static_cast<int>(configs.size()); ++c) {
      bool ok = true;
      for (int prev : chosen)
        if (!orthogonal(prev, c)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(c);
      if (pick(c + 1, remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (!pick(0, k)) return std::nullopt;
  A2Witness w;
  for (int c : chosen) w.pairs.emplace_back(configs[c].r, configs[c].s);
  return w;
}

}  // namespace enr
