#include "minrank/folding.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "minrank/errors.hpp"

namespace minrank {

// ---------------------------------------------------------------------------
// FoldingInvolution

FoldingInvolution::FoldingInvolution(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  for (int v = 0; v < n; ++v) {
    if (image_[v] < 0 || image_[v] >= n) throw InvalidInput("involution maps outside the vertex set");
    if (image_[image_[v]] != v) throw InvalidInput("map is not an involution");
  }
}

FoldingInvolution FoldingInvolution::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return FoldingInvolution(std::move(id));
}

FoldingInvolution FoldingInvolution::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidInput("involution pair outside the vertex set");
    if (i == j) throw InvalidInput("involution pair repeats a vertex");
    if (img[i] != i || img[j] != j) throw InvalidInput("involution pairs overlap");
    img[i] = j;
    img[j] = i;
  }
  return FoldingInvolution(std::move(img));
}

bool FoldingInvolution::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

std::vector<std::pair<int, int>> FoldingInvolution::two_cycles() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v)
    if (v < image_[v]) out.emplace_back(v, image_[v]);
  return out;
}

std::vector<std::vector<int>> FoldingInvolution::orbits() const {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < size(); ++v) {
    if (image_[v] == v) out.push_back({v});
    else if (v < image_[v]) out.push_back({v, image_[v]});
  }
  return out;
}

FoldingInvolution FoldingInvolution::conjugated(std::span<const int> p) const {
  std::vector<int> img(size());
  for (int v = 0; v < size(); ++v) img[p[v]] = p[image_[v]];
  return FoldingInvolution(std::move(img));
}

// ---------------------------------------------------------------------------
// Restriction

Root RestrictionData::project(const Root& r) const {
  Root out{std::vector<int>(orbits.size(), 0)};
  for (std::size_t i = 0; i < r.coords.size(); ++i) out.coords[coordinate_of[i]] += r.coords[i];
  return out;
}

std::optional<int> RestrictionData::find(const Root& r) const {
  auto it = std::lower_bound(image.begin(), image.begin() + num_positive, r, [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  if (it != image.begin() + num_positive && *it == r) return static_cast<int>(it - image.begin());
  if (r.is_positive()) return std::nullopt;
  auto pos = find(-r);
  if (!pos) return std::nullopt;
  return *pos + num_positive;
}

RestrictionData restriction_map(const RootSystem& g, const FoldingInvolution& sigma) {
  if (sigma.size() != g.rank()) throw InvalidInput("involution size does not match the rank of D_g");
  for (auto [i, j] : sigma.two_cycles()) {
    if (!g.is_orthogonal(i, j)) {
      throw CandidateRejected('a', "2-cycle (" + g.diagram().vertices()[i] + " " + g.diagram().vertices()[j] +
                                       ") joins non-orthogonal simple roots");
    }
  }

  RestrictionData rho;
  rho.orbits = sigma.orbits();
  rho.coordinate_of.assign(g.rank(), 0);
  for (std::size_t k = 0; k < rho.orbits.size(); ++k)
    for (int v : rho.orbits[k]) rho.coordinate_of[v] = static_cast<int>(k);

  std::map<Root, std::vector<int>> groups;
  for (int r = 0; r < g.size(); ++r) {
    if (g.is_positive(r)) groups[rho.project(g.root(r))].push_back(r);
  }
  std::vector<std::pair<Root, std::vector<int>>> positives(groups.begin(), groups.end());
  std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
    if (a.first.height() != b.first.height()) return a.first.height() < b.first.height();
    return a.first.coords > b.first.coords;
  });
  rho.num_positive = static_cast<int>(positives.size());
  for (auto& [root, fiber] : positives) {
    rho.image.push_back(root);
    rho.fibers.push_back(fiber);
  }
  for (auto& [root, fiber] : positives) {
    rho.image.push_back(-root);
    std::vector<int> neg;
    for (int r : fiber) neg.push_back(g.negate(r));
    rho.fibers.push_back(std::move(neg));
  }

  rho.image_of.assign(g.size(), -1);
  for (std::size_t k = 0; k < rho.fibers.size(); ++k) {
    const auto& fiber = rho.fibers[k];
    if (fiber.size() >= 3) {
      throw CandidateRejected('b', std::to_string(fiber.size()) + " roots of g restrict to one root");
    }
    if (fiber.size() == 2 && !g.is_orthogonal(fiber[0], fiber[1])) {
      throw CandidateRejected('b', "a 2-element fiber contains non-orthogonal roots");
    }
    for (int r : fiber) rho.image_of[r] = static_cast<int>(k);
  }
  return rho;
}

// ---------------------------------------------------------------------------
// Folded simple system

std::vector<int> ColoredDynkin::black_vertices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < black.size(); ++i)
    if (black[i]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

std::vector<std::string> orbit_names(const RestrictionData& rho, const DynkinDiagram& g) {
  std::vector<std::string> names;
  for (const auto& orbit : rho.orbits) {
    std::string name;
    for (int v : orbit) {
      if (!name.empty()) name += "~";
      name += g.vertices()[v];
    }
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

ColoredDynkin folded_simple_system(const RestrictionData& rho, const DynkinDiagram& g) {
  const int m = static_cast<int>(rho.orbits.size());
  CartanMatrix a(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    a[i][i] = 2;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      // e_i - e_j is never in the image, so the e_j-string through e_i starts at e_i.
      int q = 0;
      Root r = rho.image[i];
      for (;;) {
        r.coords[j] += 1;
        if (!rho.find(r)) break;
        ++q;
      }
      if (q > 3) throw CandidateRejected('c', "root string of length above 4 in the image");
      a[i][j] = -q;
    }
  }

  std::optional<DynkinDiagram> h;
  try {
    h.emplace(std::move(a), orbit_names(rho, g));
  } catch (const InvalidInput& e) {
    throw CandidateRejected('c', std::string("recovered Cartan matrix is invalid: ") + e.what());
  }
  if (!h->is_finite_type()) throw CandidateRejected('c', "recovered Cartan matrix is not of finite type");
  std::optional<RootSystem> rs;
  try {
    rs.emplace(*h);
  } catch (const InvalidInput& e) {
    throw CandidateRejected('c', e.what());
  }
  if (rs->roots() != rho.image) {
    throw CandidateRejected('c', "image has " + std::to_string(rho.image.size()) + " roots but the recovered " +
                                     h->type_label() + " system has " + std::to_string(rs->size()));
  }

  ColoredDynkin out{*h, std::vector<bool>(m, false)};
  for (int k = 0; k < m; ++k) out.black[k] = rho.fibers[k].size() == 2;
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::identity: return "identity";
    case PairKind::diagonal: return "diagonal";
    case PairKind::general: return "general";
  }
  return "general";
}

bool ValidationReport::passed() const {
  return checks.size() == 7 && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<char> ValidationReport::failed_tags() const {
  std::vector<char> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.tag);
  return out;
}

std::optional<char> ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.tag;
  return std::nullopt;
}

namespace {

const char* check_name(char tag) {
  switch (tag) {
    case 'a': return "two_cycles_orthogonal";
    case 'b': return "fibers_orthogonal_at_most_two";
    case 'c': return "folded_root_system";
    case 'd': return "root_count";
    case 'e': return "wh_stable_fibers";
    case 'f': return "simple_root_preimages";
    case 'g': return "nonredundant_coloring";
  }
  return "?";
}

CheckOutcome outcome(char tag, bool ok, std::string detail = {}) { return {tag, check_name(tag), ok, std::move(detail)}; }

PairKind classify_kind(const DynkinDiagram& g, const FoldingInvolution& sigma) {
  if (sigma.is_identity()) return PairKind::identity;
  const auto& comps = g.components();
  if (comps.size() != 2 || comps[0].size() != comps[1].size()) return PairKind::general;
  std::set<int> second(comps[1].begin(), comps[1].end());
  for (int v : comps[0])
    if (!second.count(sigma(v))) return PairKind::general;
  for (int i : comps[0])
    for (int j : comps[0])
      if (g(i, j) != g(sigma(i), sigma(j))) return PairKind::general;
  return PairKind::diagonal;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> orbit_generator(const RootSystem& g, const std::vector<int>& orbit) {
  std::vector<int> perm = simple_reflection_permutation(g, orbit[0]);
  for (std::size_t k = 1; k < orbit.size(); ++k) perm = compose(simple_reflection_permutation(g, orbit[k]), perm);
  return perm;
}

// Root-count and stability checks over a set of "tested" h-roots partitioned
// into W_H-orbits, with the coloring of the simple roots and the fiber size of
// every tested root.
void count_and_stability(const std::vector<int>& orbit_of, int num_simple, const std::vector<bool>& black,
                         const std::vector<int>& fiber_size, int g_roots, ValidationReport& report) {
  const int t = static_cast<int>(orbit_of.size());
  std::map<int, std::vector<int>> members;
  for (int r = 0; r < t; ++r) members[orbit_of[r]].push_back(r);

  std::string d_detail;
  bool d_ok = true;
  int phi1 = 0, phi2 = 0;
  std::map<int, int> expected;
  for (const auto& [o, roots] : members) {
    std::set<bool> colors;
    for (int r : roots)
      if (r < num_simple) colors.insert(black[r]);
    if (colors.empty()) {
      d_ok = false;
      d_detail = "a W_H-orbit of roots contains no simple root";
      continue;
    }
    if (colors.size() > 1) {
      d_ok = false;
      d_detail = "a W_H-orbit contains both black and white simple roots";
      continue;
    }
    const bool b = *colors.begin();
    expected[o] = b ? 2 : 1;
    (b ? phi2 : phi1) += static_cast<int>(roots.size());
  }
  if (d_ok && g_roots != phi1 + 2 * phi2) {
    d_ok = false;
    d_detail = "|phi_g| = " + std::to_string(g_roots) + " but |phi1| + 2|phi2| = " + std::to_string(phi1) +
               " + 2*" + std::to_string(phi2);
  }
  if (d_ok) d_detail = std::to_string(g_roots) + " = " + std::to_string(phi1) + " + 2*" + std::to_string(phi2);
  report.checks.push_back(outcome('d', d_ok, d_detail));

  bool e_ok = true;
  std::string e_detail;
  for (const auto& [o, roots] : members) {
    const int f0 = fiber_size[roots.front()];
    for (int r : roots) {
      if (fiber_size[r] != f0) {
        e_ok = false;
        e_detail = "fiber size varies along a W_H-orbit (" + std::to_string(f0) + " vs " +
                   std::to_string(fiber_size[r]) + ")";
        break;
      }
    }
    if (!e_ok) break;
    auto it = expected.find(o);
    if (it != expected.end() && it->second != f0) {
      e_ok = false;
      e_detail = "fiber size " + std::to_string(f0) + " on an orbit colored " + (it->second == 2 ? "black" : "white");
      break;
    }
  }
  report.checks.push_back(outcome('e', e_ok, e_detail));
}

}  // namespace

ValidationReport validate_candidate(const DynkinDiagram& g, const FoldingInvolution& sigma,
                                    const std::optional<ColoredDynkin>& claim) {
  ValidationReport report;
  report.kind = classify_kind(g, sigma);
  const RootSystem rs(g);

  std::optional<RestrictionData> rho;
  try {
    rho = restriction_map(rs, sigma);
    report.checks.push_back(outcome('a', true));
    report.checks.push_back(outcome('b', true));
  } catch (const CandidateRejected& e) {
    if (e.check() == 'b') report.checks.push_back(outcome('a', true));
    report.checks.push_back(outcome(e.check(), false, e.what()));
    return report;
  }

  std::optional<ColoredDynkin> folded;
  try {
    folded = folded_simple_system(*rho, g);
    report.checks.push_back(outcome('c', true, folded->diagram.type_label()));
  } catch (const CandidateRejected& e) {
    report.checks.push_back(outcome('c', false, e.what()));
    return report;
  }

  const int m = static_cast<int>(rho->orbits.size());
  if (claim) {
    if (claim->diagram.rank() != m || static_cast<int>(claim->black.size()) != m) {
      throw InvalidInput("claimed diagram must have one vertex per sigma-orbit");
    }
    const RootSystem hrs(claim->diagram);
    UnionFind uf(hrs.size());
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < hrs.size(); ++r) uf.unite(r, hrs.reflect_simple(j, r));
    std::vector<int> orbit_of(hrs.size()), fiber_size(hrs.size());
    for (int r = 0; r < hrs.size(); ++r) {
      orbit_of[r] = uf.find(r);
      auto idx = rho->find(hrs.root(r));
      fiber_size[r] = idx ? static_cast<int>(rho->fibers[*idx].size()) : 0;
    }
    count_and_stability(orbit_of, m, claim->black, fiber_size, rs.size(), report);
  } else {
    const int t = static_cast<int>(rho->image.size());
    UnionFind uf(t);
    for (const auto& orbit : rho->orbits) {
      const auto perm = orbit_generator(rs, orbit);
      for (int r = 0; r < rs.size(); ++r) uf.unite(rho->image_of[r], rho->image_of[perm[r]]);
    }
    std::vector<int> orbit_of(t), fiber_size(t);
    for (int k = 0; k < t; ++k) {
      orbit_of[k] = uf.find(k);
      fiber_size[k] = static_cast<int>(rho->fibers[k].size());
    }
    count_and_stability(orbit_of, m, folded->black, fiber_size, rs.size(), report);
  }

  bool f_ok = true;
  std::string f_detail;
  for (int k = 0; k < m; ++k) {
    auto fiber = rho->fibers[k];
    std::sort(fiber.begin(), fiber.end());
    if (fiber != rho->orbits[k]) {
      f_ok = false;
      f_detail = "preimage of folded simple root " + folded->diagram.vertices()[k] + " is not a sigma-orbit";
      break;
    }
  }
  report.checks.push_back(outcome('f', f_ok, f_detail));
  report.checks.push_back(outcome('g', true, to_string(report.kind)));
  return report;
}

// ---------------------------------------------------------------------------
// Pairs

MinimalRankPair make_pair(const DynkinDiagram& g, const FoldingInvolution& sigma, std::size_t budget) {
  const auto report = validate_candidate(g, sigma);
  if (!report.passed()) {
    std::string msg = "candidate rejected at check";
    for (const auto& c : report.checks) {
      if (!c.passed) msg += " (" + std::string(1, c.tag) + ") " + c.name + ": " + c.detail + ";";
    }
    msg.pop_back();
    throw InvalidInput(msg);
  }

  MinimalRankPair p;
  p.g_ = g;
  p.sigma_ = sigma;
  p.g_roots_ = std::make_shared<const RootSystem>(g);
  p.rho_ = restriction_map(*p.g_roots_, sigma);
  p.h_ = folded_simple_system(p.rho_, g);
  p.h_roots_ = std::make_shared<const RootSystem>(p.h_.diagram);
  p.wh_embedding_ = p.rho_.orbits;
  p.kind_ = report.kind;

  const auto perms = wh_generator_permutations(p);
  p.wh_order_ = permutation_group_order(*p.g_roots_, perms, budget);
  const auto expected = weyl_group_order(p.h_.diagram);
  if (p.wh_order_ != expected) {
    throw ModelInconsistency("embedded W_H has order " + std::to_string(p.wh_order_) + ", expected |W(" +
                             p.h_.diagram.type_label() + ")| = " + std::to_string(expected));
  }
  return p;
}

std::vector<std::vector<int>> wh_generator_permutations(const MinimalRankPair& pair) {
  std::vector<std::vector<int>> out;
  for (const auto& orbit : pair.wh_embedding()) out.push_back(orbit_generator(pair.g_roots(), orbit));
  return out;
}

std::string MinimalRankPair::family() const {
  if (kind_ == PairKind::identity) return "identity";
  if (kind_ == PairKind::diagonal) return "diagonal";
  if (!h_.diagram.is_connected() || !g_.is_connected()) return "product";
  const auto gt = identify_components(g_).front();
  const auto ht = identify_components(h_.diagram).front();
  if (gt.series == 'A' && gt.rank % 2 == 1 && ht == CartanType{'C', (gt.rank + 1) / 2}) return "A2n-1_Cn";
  if (ht.series == 'C' && ht.rank == 2 && gt == CartanType{'A', 3}) return "A2n-1_Cn";
  if (gt.series == 'D' && ht == CartanType{'B', gt.rank - 1}) return "Dn_Bn-1";
  if (gt == CartanType{'B', 3} && ht == CartanType{'G', 2}) return "B3_G2";
  if (gt == CartanType{'E', 6} && ht == CartanType{'F', 4}) return "E6_F4";
  return "other";
}

std::string MinimalRankPair::name() const {
  const auto f = family();
  if (f == "identity") return "identity:" + g_.type_label();
  if (f == "diagonal") return "diag:" + h_.diagram.type_label();
  if (f == "product") return "product:" + g_.type_label() + "/" + h_.diagram.type_label();
  return g_.type_label() + "_" + h_.diagram.type_label();
}

EmbeddedWeyl embed_weyl(const MinimalRankPair& pair, const WeylGroup& w, std::size_t budget) {
  if (w.root_system().diagram().cartan() != pair.g().cartan()) {
    throw InvalidInput("Weyl group does not belong to D_g of this pair");
  }
  std::vector<ElementId> gens;
  for (const auto& orbit : pair.wh_embedding()) {
    ElementId e = w.identity();
    for (int v : orbit) e = w.left_multiply(v, e);
    gens.push_back(e);
  }
  auto sub = subgroup_closure(w, gens, budget);
  const auto expected = weyl_group_order(pair.h().diagram);
  if (sub.order() != expected) {
    throw ModelInconsistency("embedded W_H has order " + std::to_string(sub.order()) + ", expected " +
                             std::to_string(expected));
  }
  return {std::move(sub), std::move(gens)};
}

std::vector<MinimalRankPair> decompose(const MinimalRankPair& pair, std::size_t budget) {
  const auto& hd = pair.h().diagram;
  if (hd.is_connected()) return {pair};
  std::vector<MinimalRankPair> out;
  for (const auto& comp : hd.components()) {
    std::vector<int> verts;
    for (int k : comp)
      for (int v : pair.wh_embedding()[k]) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(pair.g().rank(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<int> img(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) img[i] = local[pair.sigma()(verts[i])];
    out.push_back(make_pair(pair.g().induced(verts), FoldingInvolution(std::move(img)), budget));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::vector<FoldingInvolution> enumerate_involutions(const DynkinDiagram& g) {
  const int n = g.rank();
  std::vector<std::pair<int, int>> orth;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g(i, j) == 0) orth.emplace_back(i, j);

  const auto autos = automorphisms(g);
  std::set<std::vector<int>> canonical;
  std::vector<std::pair<int, int>> chosen;
  std::vector<bool> used(n, false);

  auto record = [&] {
    const auto s = FoldingInvolution::from_pairs(n, chosen);
    std::vector<int> best = s.image();
    for (const auto& p : autos) best = std::min(best, s.conjugated(p).image());
    canonical.insert(best);
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    record();
    for (std::size_t k = start; k < orth.size(); ++k) {
      auto [i, j] = orth[k];
      if (used[i] || used[j]) continue;
      used[i] = used[j] = true;
      chosen.emplace_back(i, j);
      self(self, k + 1);
      chosen.pop_back();
      used[i] = used[j] = false;
    }
  };
  rec(rec, 0);

  std::vector<FoldingInvolution> out;
  for (const auto& img : canonical) out.emplace_back(img);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto ca = a.two_cycles().size(), cb = b.two_cycles().size();
    if (ca != cb) return ca < cb;
    return a.image() < b.image();
  });
  return out;
}

namespace {

std::vector<CartanType> connected_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({'A', n});
    if (n == 2) out.push_back({'C', 2});
    if (n >= 3) out.push_back({'B', n});
    if (n >= 3) out.push_back({'C', n});
    if (n >= 4) out.push_back({'D', n});
    if (n >= 6 && n <= 8) out.push_back({'E', n});
    if (n == 4) out.push_back({'F', 4});
    if (n == 2) out.push_back({'G', 2});
  }
  return out;
}

int family_rank(const std::string& f) {
  if (f == "identity") return 0;
  if (f == "diagonal") return 1;
  return 2;
}

struct Job {
  DynkinDiagram g;
  FoldingInvolution sigma;
};

}  // namespace

ClassificationResult classify(int max_rank, const ClassifyOptions& options) {
  if (max_rank < 1 || max_rank > options.rank_cap) {
    throw InvalidInput("max_rank must lie in [1, " + std::to_string(options.rank_cap) + "]");
  }

  std::vector<Job> jobs;
  for (const auto& t : connected_types(max_rank)) {
    const auto g = build_dynkin(t);
    for (auto& s : enumerate_involutions(g)) jobs.push_back({g, std::move(s)});
  }
  for (const auto& t : connected_types(max_rank)) {
    const auto h = build_dynkin(t);
    const int n = h.rank();
    std::vector<std::pair<int, int>> swap;
    for (int i = 0; i < n; ++i) swap.emplace_back(i, n + i);
    jobs.push_back({disjoint_union(h, h), FoldingInvolution::from_pairs(2 * n, swap)});
  }

  ClassificationResult result;
  result.candidates_examined = jobs.size();
  std::vector<std::optional<MinimalRankPair>> found(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const auto report = validate_candidate(jobs[k].g, jobs[k].sigma);
        if (!report.passed()) continue;
        auto pair = make_pair(jobs[k].g, jobs[k].sigma, options.budget);
        if (pair.h().diagram.is_connected()) found[k] = std::move(pair);
      } catch (const BudgetExceeded& e) {
        errors[k] = jobs[k].g.type_label() + ": " + e.what();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (found[k]) result.pairs.push_back(std::move(*found[k]));
    if (!errors[k].empty()) {
      result.partial = true;
      if (!result.diagnostic.empty()) result.diagnostic += "; ";
      result.diagnostic += errors[k];
    }
  }
  auto key = [](const MinimalRankPair& p) {
    return std::make_tuple(family_rank(p.family()), p.h().diagram.rank(), p.g().rank(), p.g().type_label(),
                           p.sigma().image());
  };
  std::sort(result.pairs.begin(), result.pairs.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return result;
}

// ---------------------------------------------------------------------------
// Rank-two table

std::string to_string(Rank2Verdict v) {
  switch (v) {
    case Rank2Verdict::accepted: return "accepted";
    case Rank2Verdict::rejected: return "rejected";
    case Rank2Verdict::merged_diagonal: return "merged_diagonal";
  }
  return "rejected";
}

std::vector<Rank2Row> rank2_table() {
  struct Layout {
    DynkinDiagram g;
    std::vector<std::pair<int, int>> pairs;
    CartanMatrix h;
    std::vector<bool> black;
  };
  const auto c2 = build_dynkin('C', 2);
  const auto a1 = build_dynkin('A', 1);
  const std::vector<Layout> layouts = {
      {disjoint_union(disjoint_union(c2, a1), a1), {{0, 2}, {1, 3}}, {{2, -1}, {-1, 2}}, {true, true}},
      {disjoint_union(c2, c2), {{0, 2}, {1, 3}}, {{2, -1}, {-2, 2}}, {true, true}},
      {build_dynkin('A', 3), {{0, 2}}, {{2, -2}, {-1, 2}}, {true, false}},
      {build_dynkin('A', 3), {{0, 2}}, {{2, -1}, {-2, 2}}, {true, false}},
      {build_dynkin('C', 4), {{0, 2}, {1, 3}}, {{2, -1}, {-3, 2}}, {true, true}},
      {build_dynkin('B', 3), {{0, 2}}, {{2, -3}, {-1, 2}}, {true, false}},
      {build_dynkin('B', 3), {{0, 2}}, {{2, -1}, {-3, 2}}, {true, false}},
  };

  std::vector<Rank2Row> rows;
  int number = 1;
  for (const auto& l : layouts) {
    const auto sigma = FoldingInvolution::from_pairs(l.g.rank(), l.pairs);
    std::vector<std::string> names;
    for (const auto& orbit : sigma.orbits()) {
      std::string name;
      for (int v : orbit) name += (name.empty() ? "" : "~") + l.g.vertices()[v];
      names.push_back(name);
    }
    ColoredDynkin claim{DynkinDiagram(l.h, names), l.black};
    auto report = validate_candidate(l.g, sigma, claim);
    Rank2Verdict verdict = Rank2Verdict::rejected;
    if (report.passed()) {
      verdict = report.kind == PairKind::diagonal ? Rank2Verdict::merged_diagonal : Rank2Verdict::accepted;
    }
    rows.push_back({number++, l.g.type_label(), l.g, sigma, std::move(claim), std::move(report), verdict});
  }
  return rows;
}

}  // namespace minrank
