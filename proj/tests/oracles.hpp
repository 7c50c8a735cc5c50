#pragma once

// Reference computations used as test oracles. They share no code with the
// library: roots come from reflections in all roots under an explicit
// symmetrized form, and Weyl groups are matrix groups on the simple-root basis.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
using Vec = std::vector<int>;

/// (alpha_i, alpha_i) for a symmetrizable Cartan matrix a[i][j] = 2(a_i,a_j)/(a_j,a_j).
inline std::vector<std::int64_t> root_lengths(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::int64_t> len(n, 0);
  for (int s = 0; s < n; ++s) {
    if (len[s]) continue;
    len[s] = 12;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0 || len[j]) continue;
        // a_ij len_j = a_ji len_i
        len[j] = a[j][i] * len[i] / a[i][j];
        stack.push_back(j);
      }
    }
  }
  return len;
}

/// Gram matrix of the simple roots.
inline std::vector<std::vector<std::int64_t>> gram(const Matrix& a) {
  const auto len = root_lengths(a);
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = a[i][j] * len[j] / 2;
  return g;
}

inline std::int64_t form(const std::vector<std::vector<std::int64_t>>& g, const Vec& x, const Vec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

/// All roots: orbit of the simple roots under reflections in every root found so far.
inline std::set<Vec> roots_by_closure(const Matrix& a, std::size_t cap = 2000) {
  const int n = static_cast<int>(a.size());
  const auto g = gram(a);
  std::set<Vec> roots;
  std::vector<Vec> todo;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    todo.push_back(e);
  }
  bool grew = true;
  while (grew && roots.size() < cap) {
    grew = false;
    std::vector<Vec> current(roots.begin(), roots.end());
    for (const auto& b : current) {
      const auto bb = form(g, b, b);
      for (const auto& c : current) {
        const auto k = 2 * form(g, c, b) / bb;
        Vec r = c;
        for (int i = 0; i < n; ++i) r[i] -= static_cast<int>(k * b[i]);
        if (roots.insert(r).second) grew = true;
      }
    }
  }
  return roots;
}

/// Classical root counts.
inline int classical_root_count(char type, int n) {
  switch (type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

/// Degrees of the basic invariants.
inline std::vector<int> degrees(char type, int n) {
  std::vector<int> d;
  switch (type) {
    case 'A':
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

inline std::uint64_t order_from_degrees(const std::vector<int>& d) {
  std::uint64_t p = 1;
  for (int x : d) p *= static_cast<std::uint64_t>(x);
  return p;
}

/// prod_i (1 + t + ... + t^(d_i - 1))
inline std::vector<std::int64_t> poincare_from_degrees(const std::vector<int>& d) {
  std::vector<std::int64_t> p{1};
  for (int x : d) {
    std::vector<std::int64_t> q(p.size() + x - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int k = 0; k < x; ++k) q[i + k] += p[i];
    p = q;
  }
  return p;
}

/// Weyl group as integer matrices acting on simple-root coordinates
/// (column j of an element is the image of alpha_j).
class MatrixGroup {
 public:
  explicit MatrixGroup(const Matrix& a) : n_(static_cast<int>(a.size())) {
    for (int j = 0; j < n_; ++j) {
      Matrix s(n_, Vec(n_, 0));
      for (int i = 0; i < n_; ++i) {
        // s_j(alpha_i) = alpha_i - a_ij alpha_j; column i
        s[i][i] += 1;
        s[j][i] -= a[i][j];
      }
      gens_.push_back(s);
    }
    Matrix id(n_, Vec(n_, 0));
    for (int i = 0; i < n_; ++i) id[i][i] = 1;
    index_[id] = 0;
    elems_.push_back(id);
    length_.push_back(0);
    words_.push_back({});
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      for (int j = 0; j < n_; ++j) {
        Matrix m = mul(gens_[j], elems_[k]);
        if (index_.emplace(m, static_cast<int>(elems_.size())).second) {
          elems_.push_back(m);
          length_.push_back(length_[k] + 1);
          auto w = words_[k];
          w.insert(w.begin(), j);
          words_.push_back(w);
        }
      }
    }
  }

  std::size_t order() const { return elems_.size(); }
  const Matrix& gen(int j) const { return gens_[j]; }
  const Matrix& element(int k) const { return elems_[k]; }
  int length(int k) const { return length_[k]; }
  /// A reduced word: element = s_w0 s_w1 ...
  const std::vector<int>& word(int k) const { return words_[k]; }
  int index(const Matrix& m) const { return index_.at(m); }
  Matrix product(const std::vector<int>& word) const {
    Matrix m = elems_[0];
    for (int j : word) m = mul(m, gens_[j]);
    return m;
  }

  Matrix mul(const Matrix& x, const Matrix& y) const {
    Matrix z(n_, Vec(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (x[i][k])
          for (int j = 0; j < n_; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  }

  Matrix inverse(const Matrix& x) const {
    auto w = words_[index(x)];
    std::reverse(w.begin(), w.end());
    return product(w);
  }

  /// Classical subword property: y <= x iff y is a subword product of a reduced word of x.
  std::set<int> bruhat_lower(int x) const {
    const auto& w = words_[x];
    std::set<int> out;
    const int l = static_cast<int>(w.size());
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < l; ++i)
        if (mask >> i & 1) sub.push_back(w[i]);
      out.insert(index(product(sub)));
    }
    return out;
  }

  /// Number of left cosets x*K of the subgroup generated by `gens`.
  std::size_t count_cosets(const std::vector<Matrix>& gens, std::size_t* subgroup_order = nullptr) const {
    std::set<Matrix> k{elems_[0]};
    std::vector<Matrix> todo{elems_[0]};
    while (!todo.empty()) {
      const Matrix m = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        Matrix p = mul(g, m);
        if (k.insert(p).second) todo.push_back(p);
      }
    }
    if (subgroup_order) *subgroup_order = k.size();
    std::vector<bool> seen(elems_.size(), false);
    std::size_t cosets = 0;
    for (std::size_t x = 0; x < elems_.size(); ++x) {
      if (seen[x]) continue;
      ++cosets;
      for (const auto& h : k) seen[index(mul(elems_[x], h))] = true;
    }
    return cosets;
  }

  /// Minimal length in each left coset x*K.
  std::multiset<int> coset_min_lengths(const std::vector<Matrix>& gens) const {
    std::set<Matrix> k{elems_[0]};
    std::vector<Matrix> todo{elems_[0]};
    while (!todo.empty()) {
      const Matrix m = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        Matrix p = mul(g, m);
        if (k.insert(p).second) todo.push_back(p);
      }
    }
    std::vector<bool> seen(elems_.size(), false);
    std::multiset<int> out;
    for (std::size_t x = 0; x < elems_.size(); ++x) {
      if (seen[x]) continue;
      int best = length_[x];
      for (const auto& h : k) {
        const int y = index(mul(elems_[x], h));
        seen[y] = true;
        best = std::min(best, length_[y]);
      }
      out.insert(best);
    }
    return out;
  }

 private:
  int n_;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elems_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
  std::map<Matrix, int> index_;
};

}  // namespace oracle
