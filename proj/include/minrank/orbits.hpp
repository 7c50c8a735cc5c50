#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minrank/folding.hpp"
#include "minrank/polynomial.hpp"
#include "minrank/weyl.hpp"

namespace minrank {

/// An H-orbit closure in the flag variety, modeled as a left coset w*W_H.
struct OrbitVertex {
  int coset_id = 0;
  ElementId min_rep = 0;
  std::vector<int> rep_word;
  /// d_H + length of the minimal representative.
  int dim = 0;
};

/// Edge lo -> hi raised by the simple reflection `label` of D_g.
struct OrbitEdge {
  int lo = 0;
  int hi = 0;
  int label = 0;
  auto operator<=>(const OrbitEdge&) const = default;
};

class OrbitGraph {
 public:
  /// Enumerates W(D_g), embeds W_H and builds the graph. With check_grading, an
  /// edge whose endpoints do not differ in dimension by exactly one throws
  /// ModelInconsistency.
  static OrbitGraph build(const MinimalRankPair& pair, std::size_t budget = kDefaultBudget,
                          bool check_grading = true);

  const MinimalRankPair& pair() const { return *pair_; }
  const WeylGroup& weyl() const { return *w_; }
  const Subgroup& wh() const { return embedded_->subgroup; }
  const std::vector<ElementId>& wh_generators() const { return embedded_->generators; }
  const CosetDecomposition& cosets() const { return cosets_; }

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<OrbitVertex>& vertices() const { return vertices_; }
  const OrbitVertex& vertex(int v) const { return vertices_[v]; }
  /// Sorted by (lo, hi, label).
  const std::vector<OrbitEdge>& edges() const { return edges_; }
  int d_g() const { return d_g_; }
  int d_h() const { return d_h_; }

  /// Vertex of the coset s_alpha * V.
  int act(int alpha, int v) const { return action_[static_cast<std::size_t>(v) * rank_ + alpha]; }
  /// Vertices joined to v by an edge going down.
  std::vector<int> lower_neighbors(int v) const;

  /// Unique vertex without incoming edges; throws ModelInconsistency otherwise.
  int closed_orbit() const;
  /// Unique vertex without outgoing edges; throws ModelInconsistency otherwise.
  int open_orbit() const;

  /// Labels of an increasing path from the closed orbit to v, obtained by
  /// repeatedly descending along the smallest label.
  std::vector<int> reference_path(int v) const;
  /// Vertices reachable from the closed orbit by increasing paths whose labels
  /// form a subsequence of `labels`.
  std::vector<bool> lower_set(std::span<const int> labels) const;
  /// Cancellation order: vp <= v, using the reference path of v.
  bool leq(int vp, int v) const;

 private:
  std::shared_ptr<const MinimalRankPair> pair_;
  std::shared_ptr<const WeylGroup> w_;
  std::shared_ptr<const EmbeddedWeyl> embedded_;
  CosetDecomposition cosets_;
  std::vector<OrbitVertex> vertices_;
  std::vector<OrbitEdge> edges_;
  std::vector<int> action_;
  std::vector<std::vector<bool>> below_;
  int rank_ = 0;
  int d_g_ = 0;
  int d_h_ = 0;
};

std::vector<OrbitVertex> orbit_set(const MinimalRankPair& pair, std::size_t budget = kDefaultBudget);
OrbitGraph build_graph(const MinimalRankPair& pair, std::size_t budget = kDefaultBudget);
int knop_action(const OrbitGraph& graph, int alpha, int v);
int closed_orbit(const OrbitGraph& graph);
bool bruhat_leq(const OrbitGraph& graph, int vp, int v);

/// coeffs[k] = number of vertices with dim - d_H = k.
OrbitPolynomial orbit_poincare(const OrbitGraph& graph);
OrbitPolynomial orbit_poincare(const MinimalRankPair& pair, std::size_t budget = kDefaultBudget);

struct ReportLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PairReport {
  std::string pair_name;
  std::size_t orbit_count = 0;
  LengthPolynomial p_g;
  LengthPolynomial p_h;
  OrbitPolynomial q;
  std::vector<ReportLine> checks;

  bool passed() const;
  const ReportLine* find(const std::string& name) const;
};

struct VerifyOptions {
  std::size_t budget = kDefaultBudget;
  /// Randomized reference paths per vertex for the path-independence check.
  int random_paths = 10;
  std::uint64_t seed = 0x5eed;
};

/// Poincare identity, palindromy, transitivity, stabilizer order, extremal
/// vertices, grading and order axioms, as report lines.
PairReport verify_pair(const MinimalRankPair& pair, const VerifyOptions& options = {});
PairReport verify_graph(const OrbitGraph& graph, const VerifyOptions& options = {});

}  // namespace minrank
