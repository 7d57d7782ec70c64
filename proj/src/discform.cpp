#include "enr/discform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace enr {

FiniteQuadraticForm::FiniteQuadraticForm(FiniteAbelianGroup group, VecQ q_gen,
                                         MatQ b_gen)
    : group_(std::move(group)), q_gen_(std::move(q_gen)), b_gen_(std::move(b_gen)) {
  const int k = group_.num_generators();
  if (q_gen_.size() != k || b_gen_.rows() != k || b_gen_.cols() != k)
    throw std::invalid_argument("FiniteQuadraticForm: size mismatch");
  for (int i = 0; i < k; ++i) {
    q_gen_(i) = reduce_mod2(q_gen_(i));
    for (int j = 0; j < k; ++j) b_gen_(i, j) = reduce_mod1(b_gen_(i, j));
  }
  // Compatibility with the group relations: d_i g_i = 0 forces
  // d_i^2 q(g_i) = 0 mod 2 and d_i b(g_i, g_j) = 0 mod 1; polarization gives
  // b(x,x) = q(x) mod 1.
  for (int i = 0; i < k; ++i) {
    const Integer& d = group_.invariant_factors[i];
    if (reduce_mod2(q_gen_(i) * d * d) != 0)
      throw std::invalid_argument("FiniteQuadraticForm: q incompatible with group order");
    for (int j = 0; j < k; ++j)
      if (reduce_mod1(b_gen_(i, j) * d) != 0)
        throw std::invalid_argument("FiniteQuadraticForm: b incompatible with group order");
    if (reduce_mod1(b_gen_(i, i) - q_gen_(i)) != 0)
      throw std::invalid_argument("FiniteQuadraticForm: q and b incompatible");
  }
}

VecZ FiniteQuadraticForm::reduce(const VecZ& x) const {
  const int k = group_.num_generators();
  VecZ r(k);
  for (int i = 0; i < k; ++i) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), x(i).get_mpz_t(),
               group_.invariant_factors[i].get_mpz_t());
    r(i) = m;
  }
  return r;
}

VecZ FiniteQuadraticForm::add(const VecZ& x, const VecZ& y) const {
  return reduce(x + y);
}

VecZ FiniteQuadraticForm::negate(const VecZ& x) const { return reduce(-x); }

VecZ FiniteQuadraticForm::zero() const {
  return VecZ::Zero(group_.num_generators());
}

Integer FiniteQuadraticForm::element_order(const VecZ& x) const {
  Integer ord = 1;
  const int k = group_.num_generators();
  for (int i = 0; i < k; ++i) {
    const Integer& d = group_.invariant_factors[i];
    Integer g;
    mpz_gcd(g.get_mpz_t(), x(i).get_mpz_t(), d.get_mpz_t());
    Integer o = d / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

Rational FiniteQuadraticForm::q(const VecZ& x) const {
  const int k = group_.num_generators();
  Rational v = 0;
  for (int i = 0; i < k; ++i) {
    v += q_gen_(i) * Rational(x(i) * x(i));
    for (int j = i + 1; j < k; ++j) v += 2 * b_gen_(i, j) * Rational(x(i) * x(j));
  }
  return reduce_mod2(v);
}

Rational FiniteQuadraticForm::b(const VecZ& x, const VecZ& y) const {
  const int k = group_.num_generators();
  Rational v = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) v += b_gen_(i, j) * Rational(x(i) * y(j));
  return reduce_mod1(v);
}

std::vector<VecZ> FiniteQuadraticForm::elements() const {
  const int k = group_.num_generators();
  std::vector<VecZ> out;
  VecZ cur = VecZ::Zero(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) { out.push_back(cur); return; }
    for (Integer v = 0; v < group_.invariant_factors[i]; ++v) {
      cur(i) = v;
      rec(i + 1);
    }
    cur(i) = 0;
  };
  rec(0);
  return out;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  return FiniteQuadraticForm(group_, -q_gen_, -b_gen_);
}

FiniteAbelianGroup discriminant_group(const GramLattice& l) {
  if (l.rank() == 0) return FiniteAbelianGroup{{}, MatQ(0, 0)};
  if (det_exact(l.gram()) == 0)
    throw std::domain_error("discriminant_group: degenerate lattice");
  SmithForm snf = smith_normal_form(l.gram());
  // With U G V = D, the class of column V e_i / d_i generates a Z/d_i summand
  // of L^vee / L.
  MatQ v = to_rational(snf.right);
  FiniteAbelianGroup g;
  std::vector<VecQ> lifts;
  for (Eigen::Index i = 0; i < snf.d.rows(); ++i) {
    Integer d = snf.d(i, i);
    if (d <= 1) continue;
    g.invariant_factors.push_back(d);
    lifts.push_back(v.col(i) / Rational(d));
  }
  g.generator_lifts = MatQ(static_cast<Eigen::Index>(lifts.size()), l.rank());
  for (size_t i = 0; i < lifts.size(); ++i)
    g.generator_lifts.row(static_cast<Eigen::Index>(i)) = lifts[i].transpose();
  return g;
}

FiniteQuadraticForm discriminant_form(const GramLattice& l) {
  FiniteAbelianGroup g = discriminant_group(l);
  const int k = g.num_generators();
  MatQ gram = to_rational(l.gram());
  VecQ qv(k);
  MatQ bv(k, k);
  for (int i = 0; i < k; ++i) {
    VecQ gi = g.generator_lifts.row(i).transpose();
    qv(i) = reduce_mod2((gi.transpose() * gram * gi)(0));
    for (int j = 0; j < k; ++j) {
      VecQ gj = g.generator_lifts.row(j).transpose();
      bv(i, j) = reduce_mod1((gi.transpose() * gram * gj)(0));
    }
  }
  return FiniteQuadraticForm(std::move(g), std::move(qv), std::move(bv));
}

int p_length(const FiniteAbelianGroup& g, const Integer& p) {
  int count = 0;
  for (const auto& d : g.invariant_factors)
    if (d % p == 0) ++count;
  return count;
}

namespace {

std::string key_of(const VecZ& x) {
  std::string s;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += x(i).get_str();
    s += ',';
  }
  return s;
}

// Multiset of (order, q-value) pairs over the full group; used to rule forms
// out when the explicit search is out of reach.
std::map<std::pair<std::string, std::string>, int> value_profile(
    const FiniteQuadraticForm& f) {
  std::map<std::pair<std::string, std::string>, int> prof;
  for (const auto& x : f.elements())
    ++prof[{f.element_order(x).get_str(), f.q(x).get_str()}];
  return prof;
}

}  // namespace

IsometryResult qforms_isometric(const FiniteQuadraticForm& a,
                                const FiniteQuadraticForm& b,
                                const Integer& search_bound) {
  IsometryResult res;
  if (a.group().order() != b.group().order()) {
    res.verdict = IsoVerdict::kNotIsometric;
    res.detail = "group orders differ";
    return res;
  }
  if (a.group().invariant_factors != b.group().invariant_factors) {
    res.verdict = IsoVerdict::kNotIsometric;
    res.detail = "invariant factors differ";
    return res;
  }
  if (a.group().order() > search_bound) {
    if (value_profile(a) != value_profile(b)) {
      res.verdict = IsoVerdict::kNotIsometric;
      res.detail = "q-value profiles differ";
    } else {
      res.verdict = IsoVerdict::kUndecided;
      res.detail = "group order exceeds explicit search bound";
    }
    return res;
  }

  const int k = a.group().num_generators();
  if (k == 0) {
    res.verdict = IsoVerdict::kIsometric;
    res.generator_images = MatZ(0, 0);
    res.detail = "trivial groups";
    return res;
  }

  std::vector<VecZ> elems = b.elements();
  std::vector<VecZ> images(k, VecZ());
  MatZ found(k, b.group().num_generators());

  // Backtracking over generator images; q, b and element orders prune hard.
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == k) {
      // Surjectivity: the images must generate all of B. Additive closure.
      std::set<std::string> closure;
      std::vector<VecZ> frontier{b.zero()};
      closure.insert(key_of(b.zero()));
      while (!frontier.empty()) {
        VecZ x = frontier.back();
        frontier.pop_back();
        for (int j = 0; j < k; ++j) {
          VecZ y = b.add(x, images[j]);
          if (closure.insert(key_of(y)).second) frontier.push_back(y);
        }
      }
      return Integer(closure.size()) == b.group().order();
    }
    const Integer& d = a.group().invariant_factors[i];
    VecZ gi = VecZ::Zero(k);
    gi(i) = 1;
    for (const auto& h : elems) {
      Integer ord = b.element_order(h);
      if (d % ord != 0) continue;
      if (b.q(h) != a.q(gi)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        VecZ gj = VecZ::Zero(k);
        gj(j) = 1;
        if (b.b(h, images[j]) != a.b(gi, gj)) ok = false;
      }
      if (!ok) continue;
      images[i] = h;
      if (assign(i + 1)) return true;
    }
    return false;
  };

  if (assign(0)) {
    res.verdict = IsoVerdict::kIsometric;
    res.generator_images = MatZ(k, b.group().num_generators());
    for (int i = 0; i < k; ++i) res.generator_images.row(i) = images[i].transpose();
    res.detail = "explicit generator images found";
  } else {
    res.verdict = IsoVerdict::kNotIsometric;
    res.detail = "explicit search exhausted";
  }
  return res;
}

std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& q,
                                                   const Integer& enumeration_bound) {
  if (q.group().order() > enumeration_bound)
    throw BoundExceeded("isotropic_subgroups: enumeration bound exceeded");

  std::vector<VecZ> all = q.elements();
  std::vector<VecZ> isotropic_elems;
  for (const auto& x : all)
    if (q.q(x) == 0) isotropic_elems.push_back(x);

  auto closure = [&](const std::vector<VecZ>& gens) {
    std::map<std::string, VecZ> elems;
    elems[key_of(q.zero())] = q.zero();
    std::vector<VecZ> frontier{q.zero()};
    while (!frontier.empty()) {
      VecZ x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        VecZ y = q.add(x, g);
        if (elems.emplace(key_of(y), y).second) frontier.push_back(y);
      }
    }
    std::vector<VecZ> sorted;
    sorted.reserve(elems.size());
    for (auto& kv : elems) sorted.push_back(kv.second);
    return sorted;
  };

  auto subgroup_key = [&](const std::vector<VecZ>& elems) {
    std::string s;
    for (const auto& e : elems) s += key_of(e) + ";";
    return s;
  };

  // BFS over isotropic subgroups only: every subgroup of an isotropic
  // subgroup is isotropic, so extending by one isotropic element at a time
  // reaches the complete list.
  std::vector<IsotropicSubgroup> out;
  std::set<std::string> seen;
  IsotropicSubgroup trivial;
  trivial.elements = {q.zero()};
  seen.insert(subgroup_key(trivial.elements));
  out.push_back(trivial);

  for (size_t idx = 0; idx < out.size(); ++idx) {
    IsotropicSubgroup cur = out[idx];
    for (const auto& g : isotropic_elems) {
      bool inside = false;
      for (const auto& e : cur.elements)
        if (e == g) { inside = true; break; }
      if (inside) continue;
      bool compatible = true;
      for (const auto& e : cur.elements)
        if (q.b(g, e) != 0 || q.q(q.add(g, e)) != 0) { compatible = false; break; }
      if (!compatible) continue;
      std::vector<VecZ> gens = cur.generators;
      gens.push_back(g);
      IsotropicSubgroup next;
      next.generators = gens;
      next.elements = closure(gens);
      std::string key = subgroup_key(next.elements);
      if (seen.insert(key).second) out.push_back(next);
    }
  }
  return out;
}

}  // namespace enr
