#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minrank/root_system.hpp"
#include "minrank/weyl.hpp"

namespace minrank {

/// Involution on the vertices of D_g. Each 2-cycle names the two simple roots
/// of g lying over one black simple root of h.
class FoldingInvolution {
 public:
  FoldingInvolution() = default;
  explicit FoldingInvolution(std::vector<int> image);
  static FoldingInvolution identity(int n);
  /// Pairs are 0-based vertex indices.
  static FoldingInvolution from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  /// (i, sigma(i)) with i < sigma(i), sorted.
  std::vector<std::pair<int, int>> two_cycles() const;
  /// Orbits sorted internally and ordered by smallest vertex.
  std::vector<std::vector<int>> orbits() const;
  /// p o sigma o p^-1 for a vertex relabeling p.
  FoldingInvolution conjugated(std::span<const int> p) const;

  auto operator<=>(const FoldingInvolution&) const = default;

 private:
  std::vector<int> image_;
};

/// A candidate failed one of the lettered validation checks.
class CandidateRejected : public std::runtime_error {
 public:
  CandidateRejected(char check, const std::string& what) : std::runtime_error(what), check_(check) {}
  char check() const noexcept { return check_; }

 private:
  char check_;
};

/// The restriction map rho: merges the coordinates of sigma-paired simple roots.
struct RestrictionData {
  /// sigma-orbits of the simple roots of g; orbit k is coordinate k of the image lattice.
  std::vector<std::vector<int>> orbits;
  std::vector<int> coordinate_of;
  /// Distinct restricted roots, indexed like a root system: positives by height
  /// (unit vector e_k at index k), then negatives.
  std::vector<Root> image;
  int num_positive = 0;
  /// g-root indices over each image root.
  std::vector<std::vector<int>> fibers;
  /// g-root index -> image index
  std::vector<int> image_of;

  Root project(const Root& r) const;
  std::optional<int> find(const Root& r) const;
};

/// Throws CandidateRejected('a') for a non-orthogonal 2-cycle and
/// CandidateRejected('b') for a fiber of size >= 3 or a non-orthogonal 2-fiber.
RestrictionData restriction_map(const RootSystem& g, const FoldingInvolution& sigma);

/// Dynkin diagram of h with its black vertices (simple roots with a 2-element fiber).
struct ColoredDynkin {
  DynkinDiagram diagram;
  std::vector<bool> black;

  std::vector<int> black_vertices() const;
  bool operator==(const ColoredDynkin&) const = default;
};

/// Folded diagram on the sigma-orbits. Cartan integers come from root strings in
/// the restricted image; throws CandidateRejected('c') if they do not describe a
/// finite root system equal to the image.
ColoredDynkin folded_simple_system(const RestrictionData& rho, const DynkinDiagram& g);

enum class PairKind { general, identity, diagonal };
std::string to_string(PairKind k);

struct CheckOutcome {
  char tag;
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  /// Checks in evaluation order (a)..(g); evaluation stops after a failing
  /// (a), (b) or (c).
  std::vector<CheckOutcome> checks;
  PairKind kind = PairKind::general;

  bool passed() const;
  std::vector<char> failed_tags() const;
  std::optional<char> first_failure() const;
};

/// Checks a candidate (D_g, sigma). A claimed colored h-diagram (Cartan matrix
/// over the sigma-orbits plus coloring) may be supplied; the root-count and
/// W_H-stability checks are then evaluated against the claim.
ValidationReport validate_candidate(const DynkinDiagram& g, const FoldingInvolution& sigma,
                                    const std::optional<ColoredDynkin>& claim = std::nullopt);

/// A validated pair (D_g, sigma) with its folded colored diagram and the
/// embedding of W_H into W(D_g).
class MinimalRankPair {
 public:
  const DynkinDiagram& g() const { return g_; }
  const FoldingInvolution& sigma() const { return sigma_; }
  const ColoredDynkin& h() const { return h_; }
  const RestrictionData& rho() const { return rho_; }
  const RootSystem& g_roots() const { return *g_roots_; }
  std::shared_ptr<const RootSystem> g_roots_ptr() const { return g_roots_; }
  const RootSystem& h_roots() const { return *h_roots_; }
  /// For each vertex of D_h, the simple reflections of g whose (commuting)
  /// product is the image of the folded simple reflection.
  const std::vector<std::vector<int>>& wh_embedding() const { return wh_embedding_; }
  std::size_t wh_order() const { return wh_order_; }
  PairKind kind() const { return kind_; }

  /// identity | diagonal | A2n-1_Cn | Dn_Bn-1 | B3_G2 | E6_F4 | product
  std::string family() const;
  /// Stable selector, e.g. "A5_C3", "identity:A2", "diag:G2".
  std::string name() const;

 private:
  friend MinimalRankPair make_pair(const DynkinDiagram&, const FoldingInvolution&, std::size_t);
  DynkinDiagram g_;
  FoldingInvolution sigma_;
  ColoredDynkin h_;
  RestrictionData rho_;
  std::shared_ptr<const RootSystem> g_roots_;
  std::shared_ptr<const RootSystem> h_roots_;
  std::vector<std::vector<int>> wh_embedding_;
  std::size_t wh_order_ = 0;
  PairKind kind_ = PairKind::general;
};

/// Validates and builds a pair. Throws InvalidInput naming the failed checks,
/// ModelInconsistency if the embedded W_H has the wrong order, BudgetExceeded
/// if W_H outgrows the budget.
MinimalRankPair make_pair(const DynkinDiagram& g, const FoldingInvolution& sigma,
                          std::size_t budget = kDefaultBudget);

/// Root permutations of the W_H generators (one per vertex of D_h).
std::vector<std::vector<int>> wh_generator_permutations(const MinimalRankPair& pair);

struct EmbeddedWeyl {
  Subgroup subgroup;
  std::vector<ElementId> generators;
};

/// W_H as a subgroup of an enumerated W(D_g). Throws ModelInconsistency when the
/// generated order differs from |W(D_h)|.
EmbeddedWeyl embed_weyl(const MinimalRankPair& pair, const WeylGroup& w, std::size_t budget = kDefaultBudget);

/// Splits a pair with disconnected D_h into irreducible factors.
std::vector<MinimalRankPair> decompose(const MinimalRankPair& pair, std::size_t budget = kDefaultBudget);

struct ClassifyOptions {
  std::size_t budget = kDefaultBudget;
  int rank_cap = kDefaultRankCap;
  /// 0 = hardware concurrency
  unsigned threads = 0;
};

struct ClassificationResult {
  std::vector<MinimalRankPair> pairs;
  std::size_t candidates_examined = 0;
  bool partial = false;
  std::string diagnostic;
};

/// Orthogonal-2-cycle involutions of D_g, one per Aut(D_g)-class, identity first.
std::vector<FoldingInvolution> enumerate_involutions(const DynkinDiagram& g);

/// Spherical pairs of minimal rank with D_h connected: connected D_g of rank
/// <= max_rank, plus the diagonal pairs D_h + D_h with rank(D_h) <= max_rank.
/// Sorted canonically. Throws InvalidInput if max_rank is outside [1, rank_cap].
ClassificationResult classify(int max_rank, const ClassifyOptions& options = {});

enum class Rank2Verdict { accepted, rejected, merged_diagonal };
std::string to_string(Rank2Verdict v);

struct Rank2Row {
  int case_number;
  std::string g_algebra;
  DynkinDiagram g;
  FoldingInvolution sigma;
  ColoredDynkin claim;
  ValidationReport report;
  Rank2Verdict verdict;
};

/// The seven (D_g, colored D_h, rho) layouts for rank(H) = 2, each run through
/// validate_candidate.
std::vector<Rank2Row> rank2_table();

}  // namespace minrank
