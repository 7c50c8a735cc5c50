#include "minrank/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

constexpr int kMaxRank = 16;

std::vector<std::string> default_names(int n, int offset = 0) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(offset + i + 1));
  return names;
}

bool has_default_names(const DynkinDiagram& d) { return d.vertices() == default_names(d.rank()); }

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices.
std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool all_principal_minors_positive(const CartanMatrix& a, const std::vector<int>& vs) {
  const int n = static_cast<int>(vs.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(vs[i]);
    }
    std::vector<std::vector<std::int64_t>> m(sub.size(), std::vector<std::int64_t>(sub.size()));
    for (std::size_t i = 0; i < sub.size(); ++i) {
      for (std::size_t j = 0; j < sub.size(); ++j) m[i][j] = a[sub[i]][sub[j]];
    }
    if (determinant(std::move(m)) <= 0) return false;
  }
  return true;
}

void add_edge(CartanMatrix& a, int i, int j) { a[i][j] = a[j][i] = -1; }

CartanMatrix identity_block(int n) {
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

// Standard connected types in identification-preference order for a given rank.
std::vector<CartanType> standard_types(int n) {
  std::vector<CartanType> out{{'A', n}};
  if (n == 2) out.push_back({'C', 2});
  if (n >= 3) out.push_back({'B', n});
  if (n >= 3) out.push_back({'C', n});
  if (n >= 4) out.push_back({'D', n});
  if (n >= 6 && n <= 8) out.push_back({'E', n});
  if (n == 4) out.push_back({'F', 4});
  if (n == 2) out.push_back({'G', 2});
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t order_of_type(const CartanType& t) {
  const int n = t.rank;
  switch (t.series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw InvalidInput("unknown Cartan series");
}

// Backtracking search for vertex bijections preserving every Cartan entry.
void search_isomorphisms(const DynkinDiagram& a, const DynkinDiagram& b, std::vector<int>& map,
                         std::vector<bool>& used, int pos, bool all,
                         std::vector<std::vector<int>>& found) {
  const int n = a.rank();
  if (pos == n) {
    found.push_back(map);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < pos && ok; ++prev) {
      ok = a(pos, prev) == b(cand, map[prev]) && a(prev, pos) == b(map[prev], cand);
    }
    if (!ok) continue;
    map[pos] = cand;
    used[cand] = true;
    search_isomorphisms(a, b, map, used, pos + 1, all, found);
    used[cand] = false;
    if (!all && !found.empty()) return;
  }
}

std::vector<int> degree_signature(const DynkinDiagram& d) {
  std::vector<int> sig;
  for (int i = 0; i < d.rank(); ++i) {
    std::vector<int> edges;
    for (int j = 0; j < d.rank(); ++j) {
      if (i != j && d(i, j) != 0) edges.push_back(-d(i, j) * 4 - d(j, i));
    }
    std::sort(edges.begin(), edges.end());
    int s = 0;
    for (int e : edges) s = s * 16 + e;
    sig.push_back(s);
  }
  return sig;
}

}  // namespace

// ---------------------------------------------------------------------------
// DynkinDiagram

DynkinDiagram::DynkinDiagram(CartanMatrix cartan, std::vector<std::string> vertices)
    : cartan_(std::move(cartan)), vertices_(std::move(vertices)) {
  const int n = rank();
  if (n == 0) throw InvalidInput("Dynkin diagram must have at least one vertex");
  if (n > kMaxRank) throw InvalidInput("Dynkin diagram rank above " + std::to_string(kMaxRank));
  for (const auto& row : cartan_) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int v = cartan_[i][j];
      if (v > 0 || v < -3) throw InvalidInput("Cartan off-diagonal entry outside {0,-1,-2,-3}");
      if ((v == 0) != (cartan_[j][i] == 0)) throw InvalidInput("Cartan zero pattern is not symmetric");
    }
  }
  if (vertices_.empty()) vertices_ = default_names(n);
  if (static_cast<int>(vertices_.size()) != n) throw InvalidInput("vertex name count does not match rank");
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw InvalidInput("duplicate vertex names");
  }

  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(components_.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        if (comp[j] < 0 && cartan_[members[k]][j] != 0) {
          comp[j] = comp[s];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

bool DynkinDiagram::is_finite_type() const {
  return std::all_of(components_.begin(), components_.end(),
                     [&](const auto& c) { return all_principal_minors_positive(cartan_, c); });
}

std::string DynkinDiagram::type_label() const {
  std::string out;
  for (const auto& t : identify_components(*this)) {
    if (!out.empty()) out += "+";
    out += t.label();
  }
  return out;
}

DynkinDiagram DynkinDiagram::induced(std::span<const int> vertex_subset) const {
  const int m = static_cast<int>(vertex_subset.size());
  CartanMatrix sub(m, std::vector<int>(m));
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(vertices_.at(vertex_subset[i]));
    for (int j = 0; j < m; ++j) sub[i][j] = cartan_[vertex_subset[i]][vertex_subset[j]];
  }
  return DynkinDiagram(std::move(sub), std::move(names));
}

DynkinDiagram DynkinDiagram::with_vertex_names(std::vector<std::string> names) const {
  return DynkinDiagram(cartan_, std::move(names));
}

// ---------------------------------------------------------------------------
// Standard diagrams

DynkinDiagram build_dynkin(char type, int n) {
  auto bad = [&] {
    return InvalidInput("invalid Dynkin type " + std::string(1, type) + std::to_string(n));
  };
  if (n < 1) throw bad();
  CartanMatrix a = identity_block(n);
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) add_edge(a, i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) add_edge(a, i, i + 1);
      // B: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2.  C: the transpose.
      if (type == 'B') a[n - 2][n - 1] = -2;
      else a[n - 1][n - 2] = -2;
      break;
    case 'D':
      if (n < 3) throw bad();
      for (int i = 0; i + 2 < n; ++i) add_edge(a, i, i + 1);
      add_edge(a, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      add_edge(a, 0, 2);
      add_edge(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) add_edge(a, i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      add_edge(a, 0, 1);
      add_edge(a, 1, 2);
      add_edge(a, 2, 3);
      a[1][2] = -2;
      break;
    case 'G':
      if (n != 2) throw bad();
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw bad();
  }
  return DynkinDiagram(std::move(a));
}

DynkinDiagram build_dynkin(const CartanType& t) { return build_dynkin(t.series, t.rank); }

DynkinDiagram diagram_from_label(const std::string& label) {
  std::optional<DynkinDiagram> out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    const std::size_t end = std::min(label.find('+', pos), label.size());
    const std::string part = label.substr(pos, end - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])) ||
        !std::all_of(part.begin() + 1, part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidInput("malformed type label '" + label + "'");
    }
    const auto d = build_dynkin(part[0], std::stoi(part.substr(1)));
    out = out ? disjoint_union(*out, d) : d;
    pos = end + 1;
  }
  return *out;
}

DynkinDiagram disjoint_union(const DynkinDiagram& d1, const DynkinDiagram& d2) {
  const int n1 = d1.rank(), n2 = d2.rank();
  CartanMatrix a(n1 + n2, std::vector<int>(n1 + n2, 0));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) a[i][j] = d1(i, j);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) a[n1 + i][n1 + j] = d2(i, j);
  std::vector<std::string> names;
  if (has_default_names(d1) && has_default_names(d2)) {
    names = default_names(n1 + n2);
  } else {
    names = d1.vertices();
    names.insert(names.end(), d2.vertices().begin(), d2.vertices().end());
  }
  return DynkinDiagram(std::move(a), std::move(names));
}

std::vector<CartanType> identify_components(const DynkinDiagram& d) {
  std::vector<CartanType> out;
  for (const auto& comp : d.components()) {
    const auto sub = d.induced(comp);
    bool matched = false;
    for (const auto& t : standard_types(sub.rank())) {
      if (find_isomorphism(sub, build_dynkin(t))) {
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (!matched) throw InvalidInput("diagram component is not of finite type");
  }
  return out;
}

std::uint64_t weyl_group_order(const DynkinDiagram& d) {
  std::uint64_t order = 1;
  for (const auto& t : identify_components(d)) order *= order_of_type(t);
  return order;
}

std::optional<std::vector<int>> find_isomorphism(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  auto sa = degree_signature(a), sb = degree_signature(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> map(a.rank(), -1);
  std::vector<bool> used(a.rank(), false);
  std::vector<std::vector<int>> found;
  search_isomorphisms(a, b, map, used, 0, false, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<int>> automorphisms(const DynkinDiagram& d) {
  std::vector<int> map(d.rank(), -1);
  std::vector<bool> used(d.rank(), false);
  std::vector<std::vector<int>> found;
  search_isomorphisms(d, d, map, used, 0, true, found);
  // The search visits candidates in increasing order, so the identity comes first.
  return found;
}

int coxeter_m(const DynkinDiagram& d, int i, int j) {
  if (i == j) return 1;
  switch (d(i, j) * d(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InvalidInput("Cartan product outside finite range");
}

// ---------------------------------------------------------------------------
// Roots

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::uint64_t RootSystem::key_of(std::span<const int> coords) {
  std::uint64_t key = 0;
  for (int c : coords) {
    if (c < -7 || c > 7) return ~std::uint64_t{0};
    key = (key << 4) | static_cast<std::uint64_t>(c + 8);
  }
  return key;
}

RootSystem::RootSystem(DynkinDiagram diagram, std::size_t max_roots_per_component)
    : diagram_(std::move(diagram)) {
  const int n = rank();
  const std::size_t bound = max_roots_per_component * diagram_.components().size();

  // Closure of the simple roots under simple reflections.
  std::vector<std::vector<int>> found;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    found.push_back(e);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> r = found[k];
      int p = 0;
      for (int i = 0; i < n; ++i) p += r[i] * diagram_(i, j);
      r[j] -= p;
      if (seen.insert(r).second) {
        found.push_back(std::move(r));
        if (found.size() > bound) {
          throw InvalidInput("root closure exceeded " + std::to_string(bound) +
                             " roots: diagram is not of finite type");
        }
      }
    }
  }

  std::vector<Root> positives;
  for (auto& c : found) {
    Root r{std::move(c)};
    if (r.is_positive()) positives.push_back(std::move(r));
  }
  if (positives.size() * 2 != found.size()) {
    throw InvalidInput("root closure is not a finite root system");
  }
  std::sort(positives.begin(), positives.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  num_positive_ = static_cast<int>(positives.size());
  roots_ = positives;
  for (const auto& r : positives) roots_.push_back(-r);

  for (int idx = 0; idx < size(); ++idx) index_.emplace(key_of(roots_[idx].coords), idx);

  reflection_table_.resize(static_cast<std::size_t>(n) * size());
  for (int j = 0; j < n; ++j) {
    for (int idx = 0; idx < size(); ++idx) {
      std::vector<int> r = roots_[idx].coords;
      int p = 0;
      for (int i = 0; i < n; ++i) p += r[i] * diagram_(i, j);
      r[j] -= p;
      reflection_table_[j * size() + idx] = index_.at(key_of(r));
    }
  }
}

std::optional<int> RootSystem::index_of(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != rank()) return std::nullopt;
  auto it = index_.find(key_of(coords));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::index_of(const Root& r) const { return index_of(std::span<const int>(r.coords)); }

int RootSystem::pairing(int beta, int alpha) const {
  if (beta == alpha) return 2;
  if (beta == negate(alpha)) return -2;
  const auto& a = roots_[alpha].coords;
  std::vector<int> c = roots_[beta].coords;
  auto step = [&](int dir) {
    int k = 0;
    for (;;) {
      for (int i = 0; i < rank(); ++i) c[i] += dir * a[i];
      if (!index_of(c)) break;
      ++k;
    }
    c = roots_[beta].coords;
    return k;
  };
  const int p = step(-1);
  const int q = step(+1);
  return p - q;
}

bool RootSystem::is_orthogonal(int alpha, int beta) const {
  return pairing(beta, alpha) == 0 && pairing(alpha, beta) == 0;
}

int RootSystem::reflect(int alpha, int beta) const {
  if (!is_simple(alpha)) throw InvalidInput("reflect: alpha is not a simple root");
  return reflect_simple(alpha, beta);
}

std::optional<int> RootSystem::combine(std::span<const int> coeffs, std::span<const std::uint8_t> images) const {
  std::vector<int> sum(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto& c = roots_[images[i]].coords;
    for (int k = 0; k < rank(); ++k) sum[k] += coeffs[i] * c[k];
  }
  return index_of(sum);
}

RootSystem build_root_system(const DynkinDiagram& diagram, std::size_t max_roots_per_component) {
  return RootSystem(diagram, max_roots_per_component);
}

namespace {
int require_index(const RootSystem& rs, const Root& r) {
  auto idx = rs.index_of(r);
  if (!idx) throw InvalidInput("vector is not a root of this root system");
  return *idx;
}
}  // namespace

int pairing(const RootSystem& rs, const Root& beta, const Root& alpha) {
  return rs.pairing(require_index(rs, beta), require_index(rs, alpha));
}

bool is_orthogonal(const RootSystem& rs, const Root& alpha, const Root& beta) {
  return rs.is_orthogonal(require_index(rs, alpha), require_index(rs, beta));
}

Root reflect(const RootSystem& rs, const Root& alpha, const Root& beta) {
  return rs.root(rs.reflect(require_index(rs, alpha), require_index(rs, beta)));
}

}  // namespace minrank
