#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "minrank/polynomial.hpp"
#include "minrank/root_system.hpp"

namespace minrank {

inline constexpr std::size_t kDefaultBudget = 3'000'000;
inline constexpr int kDefaultRankCap = 7;

using ElementId = std::uint32_t;

/// Materialized group element: permutation of root indices plus one reduced word.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> word;
};

/// Number of positive roots sent to negative roots (positive roots are the
/// first half of the root indexing).
int length(const WeylElement& w);

namespace detail {

// An element is determined by the images of the simple roots; rank <= 16 and
// fewer than 256 roots let the images pack into two machine words.
using PackedKey = std::array<std::uint64_t, 2>;

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::uint64_t h = k[0] * 0x9E3779B97F4A7C15ull;
    h ^= k[1] + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

PackedKey pack(std::span<const std::uint8_t> images);

}  // namespace detail

/// Weyl group of a root system, enumerated as permutations of the roots.
///
/// Elements are numbered in breadth-first order from the identity under left
/// multiplication by simple reflections, so ids are sorted by length.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t budget = kDefaultBudget);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  std::size_t order() const { return lengths_.size(); }

  ElementId identity() const { return 0; }
  ElementId generator(int j) const { return left_mul_[j]; }
  /// s_j * w
  ElementId left_multiply(int j, ElementId w) const { return left_mul_[static_cast<std::size_t>(w) * rank() + j]; }
  /// a * b (apply b first)
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const;
  ElementId from_word(std::span<const int> word) const;
  ElementId longest() const { return static_cast<ElementId>(order() - 1); }

  int length(ElementId w) const { return lengths_[w]; }
  /// Lexicographically least reduced word: repeatedly strip the smallest left descent.
  std::vector<int> reduced_word(ElementId w) const;
  int apply(ElementId w, int root) const;
  std::vector<int> permutation(ElementId w) const;
  WeylElement element(ElementId w) const { return {permutation(w), reduced_word(w)}; }
  /// Element with the given root permutation, if it belongs to the group.
  std::optional<ElementId> find(std::span<const int> perm) const;

 private:
  std::span<const std::uint8_t> images(ElementId w) const {
    return {images_.data() + static_cast<std::size_t>(w) * rank(), static_cast<std::size_t>(rank())};
  }
  std::optional<ElementId> lookup(std::span<const std::uint8_t> imgs) const;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::uint8_t> images_;
  std::vector<int> lengths_;
  std::vector<ElementId> left_mul_;
  std::unordered_map<detail::PackedKey, ElementId, detail::PackedKeyHash> index_;
};

WeylGroup generate_weyl(const RootSystem& rs, std::size_t budget = kDefaultBudget);

/// coeffs[k] = number of elements of length k.
LengthPolynomial length_poincare(const WeylGroup& w);

/// Subgroup of an enumerated Weyl group, stored as an explicit element set.
class Subgroup {
 public:
  Subgroup(const WeylGroup& parent, std::vector<ElementId> elements);

  const WeylGroup& parent() const { return *parent_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(ElementId w) const { return member_[w]; }
  const std::vector<ElementId>& elements() const { return elements_; }

 private:
  const WeylGroup* parent_;
  std::vector<ElementId> elements_;
  std::vector<bool> member_;
};

Subgroup subgroup_closure(const WeylGroup& w, std::span<const ElementId> gens,
                          std::size_t budget = kDefaultBudget);

struct CosetRep {
  int coset_id = 0;
  ElementId rep = 0;
  int min_length = 0;
};

struct CosetDecomposition {
  /// Sorted by (min_length, reduced word of rep); coset_id equals position.
  std::vector<CosetRep> reps;
  /// Coset id of every group element (left cosets w * W0).
  std::vector<int> coset_of;
};

/// One minimal-length representative per left coset w*W0, ties broken by the
/// lexicographically smallest reduced word.
CosetDecomposition min_coset_reps(const WeylGroup& w, const Subgroup& w0);

/// Order of the group generated by root permutations, without enumerating the
/// ambient Weyl group. Throws BudgetExceeded.
std::size_t permutation_group_order(const RootSystem& rs, std::span<const std::vector<int>> generators,
                                    std::size_t budget = kDefaultBudget);

/// Multiplicative order of a root permutation.
int permutation_order(std::span<const int> perm);

/// Root permutation induced by the simple reflection s_j.
std::vector<int> simple_reflection_permutation(const RootSystem& rs, int j);
/// p * q as root permutations (apply q first).
std::vector<int> compose(std::span<const int> p, std::span<const int> q);

}  // namespace minrank
