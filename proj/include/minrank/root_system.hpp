#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace minrank {

/// cartan[i][j] = <alpha_i, alpha_j^vee>, so s_j(alpha_i) = alpha_i - cartan[i][j] alpha_j.
using CartanMatrix = std::vector<std::vector<int>>;

/// Dynkin diagram given by a generalized Cartan matrix with named vertices.
///
/// The constructor checks the generalized-Cartan shape (diagonal 2, off-diagonal
/// entries in {0,-1,-2,-3}, symmetric zero pattern); finiteness is a separate
/// query so that non-finite input can be rejected where it is used.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  /// Vertex names default to "a1".."an".
  explicit DynkinDiagram(CartanMatrix cartan, std::vector<std::string> vertices = {});

  int rank() const { return static_cast<int>(cartan_.size()); }
  int operator()(int i, int j) const { return cartan_[i][j]; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Connectivity classes of the nonzero off-diagonal entries, each sorted,
  /// ordered by smallest vertex.
  const std::vector<std::vector<int>>& components() const { return components_; }
  bool is_connected() const { return components_.size() == 1; }

  /// Every principal minor of every component is positive.
  bool is_finite_type() const;
  /// "A3", "C2+A1+A1", ... in component order. Throws InvalidInput if not finite.
  std::string type_label() const;

  /// Sub-diagram on the given vertices (in the given order), names preserved.
  DynkinDiagram induced(std::span<const int> vertex_subset) const;
  DynkinDiagram with_vertex_names(std::vector<std::string> names) const;

  bool operator==(const DynkinDiagram& other) const = default;

 private:
  CartanMatrix cartan_;
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> components_;
};

/// Cartan type of a connected finite-type diagram, e.g. {'E', 6}.
struct CartanType {
  char series = 'A';
  int rank = 1;
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
  auto operator<=>(const CartanType&) const = default;
};

/// Standard Cartan matrix, Bourbaki numbering. Rejects invalid (type, rank).
DynkinDiagram build_dynkin(char type_label, int rank);
DynkinDiagram build_dynkin(const CartanType& t);
/// Parses "A3" or "A3+B3" into the standard (union) diagram.
DynkinDiagram diagram_from_label(const std::string& label);
/// Block-diagonal union; vertices of d2 are renamed to continue the "a<k>" numbering
/// when both inputs use default names.
DynkinDiagram disjoint_union(const DynkinDiagram& d1, const DynkinDiagram& d2);

/// Type of each component (aligned with components()). Coincidences resolve to
/// A3 (not D3) and C2 (not B2). Throws InvalidInput for non-finite components.
std::vector<CartanType> identify_components(const DynkinDiagram& d);
/// Order of the Weyl group from the classical formula for the identified type.
std::uint64_t weyl_group_order(const DynkinDiagram& d);

/// Vertex bijection p with a(i,j) == b(p[i],p[j]), if any.
std::optional<std::vector<int>> find_isomorphism(const DynkinDiagram& a, const DynkinDiagram& b);
/// All diagram automorphisms, identity first.
std::vector<std::vector<int>> automorphisms(const DynkinDiagram& d);

/// Coxeter number m_ij from the Cartan product a_ij * a_ji (0,1,2,3 -> 2,3,4,6).
int coxeter_m(const DynkinDiagram& d, int i, int j);

struct Root {
  std::vector<int> coords;  // simple-root basis

  bool is_positive() const;
  int height() const;
  Root operator-() const;
  auto operator<=>(const Root&) const = default;
};

/// Finite root system generated from a diagram by closing the simple roots under
/// simple reflections. Roots are indexed: positive roots 0..N-1 sorted by height
/// (simple root i has index i), then their negatives N..2N-1 in the same order.
class RootSystem {
 public:
  static constexpr std::size_t kDefaultMaxRootsPerComponent = 300;

  explicit RootSystem(DynkinDiagram diagram,
                      std::size_t max_roots_per_component = kDefaultMaxRootsPerComponent);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }

  std::optional<int> index_of(const Root& r) const;
  std::optional<int> index_of(std::span<const int> coords) const;
  int negate(int idx) const { return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_; }
  bool is_positive(int idx) const { return idx < num_positive_; }
  bool is_simple(int idx) const { return idx < rank(); }

  /// s_j applied to root idx, via the precomputed table.
  int reflect_simple(int j, int idx) const { return reflection_table_[j * size() + idx]; }
  /// <beta, alpha^vee> read off the alpha-string through beta.
  int pairing(int beta, int alpha) const;
  bool is_orthogonal(int alpha, int beta) const;
  /// s_alpha(beta); alpha must be simple.
  int reflect(int alpha, int beta) const;

  /// Root index of sum_i coeff[i] * root(images[i]), if it is a root.
  std::optional<int> combine(std::span<const int> coeffs, std::span<const std::uint8_t> images) const;

 private:
  static std::uint64_t key_of(std::span<const int> coords);

  DynkinDiagram diagram_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> reflection_table_;
};

RootSystem build_root_system(const DynkinDiagram& diagram,
                             std::size_t max_roots_per_component = RootSystem::kDefaultMaxRootsPerComponent);

// Value-level wrappers; throw InvalidInput if a root is not in rs.
int pairing(const RootSystem& rs, const Root& beta, const Root& alpha);
bool is_orthogonal(const RootSystem& rs, const Root& alpha, const Root& beta);
Root reflect(const RootSystem& rs, const Root& alpha, const Root& beta);

}  // namespace minrank
