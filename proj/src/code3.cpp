#include "enr/code3.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace enr {

namespace {

// Reduced row echelon form over F_3, in place; returns pivot columns.
std::vector<int> rref3(std::vector<std::vector<int>>& rows, int length) {
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < length && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % 3 != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    int inv = rows[r][c] == 2 ? 2 : 1;  // 2*2 = 4 = 1 mod 3
    for (int j = 0; j < length; ++j) rows[r][j] = (rows[r][j] * inv) % 3;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      int f = rows[i][c];
      for (int j = 0; j < length; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[r][j]) % 3 + 3) % 3;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

TernaryCode TernaryCode::from_generators(const std::vector<std::vector<int>>& rows,
                                         int length) {
  std::vector<std::vector<int>> work;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != length)
      throw std::invalid_argument("TernaryCode: row length mismatch");
    std::vector<int> r(length);
    for (int j = 0; j < length; ++j) r[j] = ((row[j] % 3) + 3) % 3;
    work.push_back(std::move(r));
  }
  rref3(work, length);
  TernaryCode c;
  c.length_ = length;
  c.basis_ = std::move(work);
  return c;
}

std::vector<std::vector<int>> TernaryCode::codewords() const {
  std::vector<std::vector<int>> words;
  const int k = dim();
  std::vector<int> word(length_, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) { words.push_back(word); return; }
    for (int v = 0; v < 3; ++v) {
      std::vector<int> saved = word;
      for (int j = 0; j < length_; ++j)
        word[j] = (word[j] + v * basis_[i][j]) % 3;
      rec(i + 1);
      word = saved;
    }
  };
  rec(0);
  return words;
}

TernaryCode kernel_f3(const MatZ& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = mod_p(m(i, j), 3);
  std::vector<int> pivots = rref3(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<int>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<int> v(cols, 0);
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (3 - a[r][fc] % 3) % 3;
    basis.push_back(std::move(v));
  }
  return TernaryCode::from_generators(basis, cols);
}

TernaryCode divisibility_kernel(const MatZ& vectors, int p) {
  if (p != 3)
    throw std::invalid_argument("divisibility_kernel: only p = 3 is wired to TernaryCode");
  // sum lambda_i v_i in p L  <=>  the tuple lies in the kernel of the
  // coordinate matrix mod p (vectors as columns).
  return kernel_f3(vectors.transpose());
}

std::multiset<int> weight_distribution(const TernaryCode& c) {
  if (c.dim() > 12)
    throw BoundExceeded("weight_distribution: enumeration bound exceeded");
  std::multiset<int> weights;
  for (const auto& w : c.codewords()) {
    int weight = 0;
    bool zero = true;
    for (int x : w)
      if (x != 0) { ++weight; zero = false; }
    if (!zero) weights.insert(weight);
  }
  return weights;
}

int griesmer_max_dim(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("griesmer_max_dim: need 1 <= d <= n");
  int k = 0;
  long long sum = 0;
  long long power = 1;
  while (true) {
    long long term = (d + power - 1) / power;  // ceil(d / 3^k)
    if (sum + term > n) break;
    sum += term;
    power *= 3;
    ++k;
  }
  return k;
}

Integer lines_count(const TernaryCode& c) {
  Integer n = 1;
  for (int i = 0; i < c.dim(); ++i) n *= 3;
  return (n - 1) / 2;
}

CodeSearchResult exhaustive_no_code(int n, int k, const std::set<int>& weights) {
  if (n < 1 || n > 10 || k < 0 || k > 3)
    throw BoundExceeded("exhaustive_no_code: enumeration bound exceeded");

  CodeSearchResult result;
  result.subspaces_examined = 0;

  std::vector<int> pivot_cols(k);
  std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));

  // True iff every nonzero combination of the current rows has a weight in
  // the allowed set; bails out on the first bad word.
  std::function<bool()> all_weights_ok = [&]() {
    std::vector<int> word(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == k) {
        bool zero = true;
        int weight = 0;
        for (int x : word)
          if (x) { ++weight; zero = false; }
        if (zero) return true;
        return weights.count(weight) > 0;
      }
      for (int v = 0; v < 3; ++v) {
        if (v != 0)
          for (int j = 0; j < n; ++j) word[j] = (word[j] + rows[i][j]) % 3;
        if (!rec(i + 1)) return false;
      }
      for (int j = 0; j < n; ++j) word[j] = (word[j] + rows[i][j]) % 3;
      return true;
    };
    return rec(0);
  };

  // Recursions below return false exactly when a witness was found, which
  // aborts the scan with `rows` holding the witness basis.
  std::vector<int> free_cols;
  std::function<bool(int)> fill = [&](int idx) -> bool {
    if (idx == static_cast<int>(free_cols.size())) {
      result.subspaces_examined += 1;
      return !all_weights_ok();
    }
    int row = free_cols[idx] / n;
    int col = free_cols[idx] % n;
    for (int v = 0; v < 3; ++v) {
      rows[row][col] = v;
      if (!fill(idx + 1)) return false;
    }
    rows[row][col] = 0;
    return true;
  };

  // Enumerate pivot column choices.
  std::function<bool(int, int)> choose = [&](int i, int from) -> bool {
    if (i == k) {
      for (auto& r : rows) std::fill(r.begin(), r.end(), 0);
      for (int j = 0; j < k; ++j) rows[j][pivot_cols[j]] = 1;
      free_cols.clear();
      for (int r = 0; r < k; ++r)
        for (int c = pivot_cols[r] + 1; c < n; ++c) {
          bool pivot = false;
          for (int j = 0; j < k; ++j)
            if (pivot_cols[j] == c) pivot = true;
          if (!pivot) free_cols.push_back(r * n + c);
        }
      return fill(0);
    }
    for (int c = from; c <= n - (k - i); ++c) {
      pivot_cols[i] = c;
      if (!choose(i + 1, c + 1)) return false;
    }
    return true;
  };

  if (k == 0) {
    result.subspaces_examined = 1;
    result.witness = TernaryCode::from_generators({}, n);
    return result;
  }
  if (!choose(0, 0)) {
    // check() returned false is "keep searching"; a witness stops the scan.
    std::vector<std::vector<int>> gens(rows.begin(), rows.end());
    result.witness = TernaryCode::from_generators(gens, n);
  }
  return result;
}

F3SystemSolution solve_f3_system(const MatZ& a, const VecZ& rhs) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (rhs.size() != rows) throw std::invalid_argument("solve_f3_system: size mismatch");
  if (cols > 12) throw BoundExceeded("solve_f3_system: too many unknowns");

  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = mod_p(a(i, j), 3);
  std::vector<std::vector<int>> coeff_only = m;
  int rank = static_cast<int>(rref3(coeff_only, cols).size());

  F3SystemSolution out;
  out.rank = rank;
  std::vector<int> x(cols, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == cols) {
      for (int r = 0; r < rows; ++r) {
        int s = 0;
        for (int j = 0; j < cols; ++j) s += m[r][j] * x[j];
        if (((s - mod_p(rhs(r), 3)) % 3 + 3) % 3 != 0) return;
      }
      out.solutions.push_back(x);
      return;
    }
    for (int v = 0; v < 3; ++v) { x[i] = v; rec(i + 1); }
    x[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace enr
