#include "minrank/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "minrank/errors.hpp"

namespace minrank {

OrbitGraph OrbitGraph::build(const MinimalRankPair& pair, std::size_t budget, bool check_grading) {
  OrbitGraph g;
  g.pair_ = std::make_shared<const MinimalRankPair>(pair);
  g.w_ = std::make_shared<const WeylGroup>(pair.g_roots_ptr(), budget);
  g.embedded_ = std::make_shared<const EmbeddedWeyl>(embed_weyl(pair, *g.w_, budget));
  g.cosets_ = min_coset_reps(*g.w_, g.embedded_->subgroup);
  g.rank_ = pair.g().rank();
  g.d_g_ = pair.g_roots().num_positive();
  g.d_h_ = pair.h_roots().num_positive();

  const auto& w = *g.w_;
  for (const auto& rep : g.cosets_.reps) {
    g.vertices_.push_back({rep.coset_id, rep.rep, w.reduced_word(rep.rep), g.d_h_ + rep.min_length});
  }

  const int n = g.size();
  g.action_.resize(static_cast<std::size_t>(n) * g.rank_);
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < g.rank_; ++a) {
      g.action_[static_cast<std::size_t>(v) * g.rank_ + a] =
          g.cosets_.coset_of[w.left_multiply(a, g.vertices_[v].min_rep)];
    }
  }

  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < g.rank_; ++a) {
      const int u = g.act(a, v);
      if (u == v) continue;
      const int dv = g.vertices_[v].dim, du = g.vertices_[u].dim;
      if (check_grading && std::abs(du - dv) != 1) {
        throw ModelInconsistency("edge between c" + std::to_string(v) + " and c" + std::to_string(u) +
                                 " has dimension gap " + std::to_string(std::abs(du - dv)));
      }
      if (std::pair(dv, v) < std::pair(du, u)) g.edges_.push_back({v, u, a});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  g.below_.resize(n);
  for (int v = 0; v < n; ++v) g.below_[v] = g.lower_set(g.reference_path(v));
  return g;
}

std::vector<int> OrbitGraph::lower_neighbors(int v) const {
  std::vector<int> out;
  for (int a = 0; a < rank_; ++a) {
    const int u = act(a, v);
    if (vertices_[u].dim < vertices_[v].dim) out.push_back(u);
  }
  return out;
}

int OrbitGraph::closed_orbit() const {
  std::vector<bool> has_in(size(), false);
  for (const auto& e : edges_) has_in[e.hi] = true;
  int found = -1;
  for (int v = 0; v < size(); ++v) {
    if (has_in[v]) continue;
    if (found >= 0) throw ModelInconsistency("orbit graph has several minimal vertices");
    found = v;
  }
  if (found < 0) throw ModelInconsistency("orbit graph has no minimal vertex");
  return found;
}

int OrbitGraph::open_orbit() const {
  std::vector<bool> has_out(size(), false);
  for (const auto& e : edges_) has_out[e.lo] = true;
  int found = -1;
  for (int v = 0; v < size(); ++v) {
    if (has_out[v]) continue;
    if (found >= 0) throw ModelInconsistency("orbit graph has several maximal vertices");
    found = v;
  }
  if (found < 0) throw ModelInconsistency("orbit graph has no maximal vertex");
  return found;
}

std::vector<int> OrbitGraph::reference_path(int v) const {
  std::vector<int> labels;
  for (;;) {
    int step = -1;
    for (int a = 0; a < rank_ && step < 0; ++a) {
      if (vertices_[act(a, v)].dim == vertices_[v].dim - 1) step = a;
    }
    if (step < 0) break;
    labels.push_back(step);
    v = act(step, v);
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

std::vector<bool> OrbitGraph::lower_set(std::span<const int> labels) const {
  std::vector<bool> reach(size(), false);
  std::vector<int> frontier;
  for (int v = 0; v < size(); ++v) {
    if (vertices_[v].dim == d_h_) {
      reach[v] = true;
      frontier.push_back(v);
    }
  }
  for (int a : labels) {
    const std::size_t count = frontier.size();
    for (std::size_t k = 0; k < count; ++k) {
      const int x = frontier[k];
      const int y = act(a, x);
      if (!reach[y] && vertices_[y].dim == vertices_[x].dim + 1) {
        reach[y] = true;
        frontier.push_back(y);
      }
    }
  }
  return reach;
}

bool OrbitGraph::leq(int vp, int v) const { return below_[v][vp]; }

std::vector<OrbitVertex> orbit_set(const MinimalRankPair& pair, std::size_t budget) {
  return OrbitGraph::build(pair, budget).vertices();
}

OrbitGraph build_graph(const MinimalRankPair& pair, std::size_t budget) { return OrbitGraph::build(pair, budget); }

int knop_action(const OrbitGraph& graph, int alpha, int v) {
  if (alpha < 0 || alpha >= graph.pair().g().rank()) throw InvalidInput("simple root index out of range");
  return graph.act(alpha, v);
}

int closed_orbit(const OrbitGraph& graph) { return graph.closed_orbit(); }

bool bruhat_leq(const OrbitGraph& graph, int vp, int v) { return graph.leq(vp, v); }

OrbitPolynomial orbit_poincare(const OrbitGraph& graph) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(graph.d_g() - graph.d_h()) + 1, 0);
  for (const auto& v : graph.vertices()) {
    const int k = v.dim - graph.d_h();
    if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, 0);
    ++coeffs[k];
  }
  return Polynomial(std::move(coeffs));
}

OrbitPolynomial orbit_poincare(const MinimalRankPair& pair, std::size_t budget) {
  return orbit_poincare(OrbitGraph::build(pair, budget));
}

// ---------------------------------------------------------------------------
// Verification

bool PairReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ReportLine* PairReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<bool>& v) {
  Bits b((v.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) b[i / 64] |= std::uint64_t{1} << (i % 64);
  return b;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::string coeff_list(const Polynomial& p) { return p.to_string(); }

}  // namespace

PairReport verify_graph(const OrbitGraph& graph, const VerifyOptions& options) {
  PairReport rep;
  const auto& pair = graph.pair();
  const auto& w = graph.weyl();
  const int n = graph.size();
  rep.pair_name = pair.name();
  rep.orbit_count = static_cast<std::size_t>(n);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const std::size_t wh_order = weyl_group_order(pair.h().diagram);
  add("orbit_count", rep.orbit_count * wh_order == w.order(),
      std::to_string(n) + " orbits, |W| = " + std::to_string(w.order()) + ", |W_H| = " + std::to_string(wh_order));

  rep.p_g = length_poincare(w);
  rep.p_h = length_poincare(WeylGroup(std::make_shared<const RootSystem>(pair.h_roots()), options.budget));
  rep.q = orbit_poincare(graph);
  add("q_times_ph_equals_pg", rep.q * rep.p_h == rep.p_g, "Q = " + coeff_list(rep.q));
  add("q_palindromic", rep.q.is_palindromic() && rep.q.degree() == graph.d_g() - graph.d_h(),
      "degree " + std::to_string(rep.q.degree()) + ", d_G - d_H = " + std::to_string(graph.d_g() - graph.d_h()));

  int closed = -1, open = -1;
  std::string min_detail, max_detail;
  try {
    closed = graph.closed_orbit();
  } catch (const ModelInconsistency& e) {
    min_detail = e.what();
  }
  try {
    open = graph.open_orbit();
  } catch (const ModelInconsistency& e) {
    max_detail = e.what();
  }

  {
    std::vector<bool> seen(n, false);
    std::vector<int> queue{closed >= 0 ? closed : 0};
    seen[queue[0]] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int a = 0; a < pair.g().rank(); ++a) {
        const int u = graph.act(a, queue[k]);
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    add("w_action_transitive", static_cast<int>(queue.size()) == n,
        std::to_string(queue.size()) + " of " + std::to_string(n) + " vertices reached");
  }
  {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : graph.edges()) {
      adj[e.lo].push_back(e.hi);
      adj[e.hi].push_back(e.lo);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int u : adj[queue[k]])
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    add("connected", static_cast<int>(queue.size()) == n);
  }
  {
    std::size_t stab = 0;
    if (open >= 0) {
      const ElementId rep_top = graph.vertex(open).min_rep;
      const int target = graph.cosets().coset_of[rep_top];
      for (ElementId x = 0; x < w.order(); ++x)
        if (graph.cosets().coset_of[w.multiply(x, rep_top)] == target) ++stab;
    }
    add("top_stabilizer_order", stab == wh_order,
        "stabilizer order " + std::to_string(stab) + ", |W_H| = " + std::to_string(wh_order));
  }

  auto count_dim = [&](int d) {
    return std::count_if(graph.vertices().begin(), graph.vertices().end(), [&](const auto& v) { return v.dim == d; });
  };
  add("unique_minimum", closed >= 0 && count_dim(graph.d_h()) == 1 && graph.vertex(closed).dim == graph.d_h(),
      closed >= 0 ? "c" + std::to_string(closed) + " at dim " + std::to_string(graph.vertex(closed).dim) : min_detail);
  add("unique_maximum", open >= 0 && count_dim(graph.d_g()) == 1 && graph.vertex(open).dim == graph.d_g(),
      open >= 0 ? "c" + std::to_string(open) + " at dim " + std::to_string(graph.vertex(open).dim) : max_detail);

  {
    int bad = 0;
    for (const auto& e : graph.edges())
      if (graph.vertex(e.hi).dim - graph.vertex(e.lo).dim != 1) ++bad;
    add("edges_dim_gap_one", bad == 0,
        std::to_string(graph.edges().size()) + " edges, " + std::to_string(bad) + " with gap != 1");
  }

  std::vector<Bits> below(n);
  for (int v = 0; v < n; ++v) {
    std::vector<bool> row(n);
    for (int u = 0; u < n; ++u) row[u] = graph.leq(u, v);
    below[v] = to_bits(row);
  }
  auto in = [&](int u, int v) { return (below[v][u / 64] >> (u % 64)) & 1; };

  bool reflexive = true, antisym = true, transitive = true, refines = true;
  for (int v = 0; v < n; ++v) reflexive = reflexive && in(v, v);
  for (int v = 0; v < n && antisym; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && in(u, v) && in(v, u)) {
        antisym = false;
        break;
      }
  for (int v = 0; v < n && transitive; ++v)
    for (int u = 0; u < n; ++u)
      if (in(u, v) && !subset(below[u], below[v])) {
        transitive = false;
        break;
      }
  for (const auto& e : graph.edges()) refines = refines && in(e.lo, e.hi);
  add("order_reflexive", reflexive);
  add("order_antisymmetric", antisym);
  add("order_transitive", transitive);
  add("order_refines_edges", refines);

  {
    std::mt19937_64 rng(options.seed);
    bool same = true;
    std::string detail;
    for (int v = 0; v < n && same; ++v) {
      for (int t = 0; t < options.random_paths; ++t) {
        std::vector<int> labels;
        int x = v;
        for (;;) {
          std::vector<int> steps;
          for (int a = 0; a < pair.g().rank(); ++a)
            if (graph.vertex(graph.act(a, x)).dim == graph.vertex(x).dim - 1) steps.push_back(a);
          if (steps.empty()) break;
          const int a = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
          labels.push_back(a);
          x = graph.act(a, x);
        }
        std::reverse(labels.begin(), labels.end());
        if (to_bits(graph.lower_set(labels)) != below[v]) {
          same = false;
          detail = "lower set of c" + std::to_string(v) + " depends on the reference path";
          break;
        }
      }
    }
    add("order_path_independent", same,
        same ? std::to_string(options.random_paths) + " random paths per vertex" : detail);
  }
  return rep;
}

PairReport verify_pair(const MinimalRankPair& pair, const VerifyOptions& options) {
  return verify_graph(OrbitGraph::build(pair, options.budget, false), options);
}

}  // namespace minrank
