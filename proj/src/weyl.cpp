#include "minrank/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "minrank/errors.hpp"

namespace minrank {

namespace detail {

PackedKey pack(std::span<const std::uint8_t> images) {
  PackedKey key{0, 0};
  for (std::size_t i = 0; i < images.size(); ++i) {
    key[i / 8] |= static_cast<std::uint64_t>(images[i]) << (8 * (i % 8));
  }
  return key;
}

}  // namespace detail

namespace {

void check_packable(const RootSystem& rs) {
  if (rs.rank() > 16) throw InvalidInput("Weyl group enumeration supports rank <= 16");
  if (rs.size() > 255) throw InvalidInput("Weyl group enumeration supports at most 255 roots");
}

}  // namespace

int length(const WeylElement& w) {
  const int n = static_cast<int>(w.perm.size()) / 2;
  int l = 0;
  for (int i = 0; i < n; ++i) l += w.perm[i] >= n ? 1 : 0;
  return l;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t budget) : rs_(std::move(rs)) {
  check_packable(*rs_);
  const int n = rank();

  std::vector<std::uint8_t> id(n);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  images_ = id;
  lengths_.push_back(0);
  index_.emplace(detail::pack(id), 0);

  std::vector<std::uint8_t> next(n);
  for (std::size_t w = 0; w < lengths_.size(); ++w) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) next[i] = static_cast<std::uint8_t>(rs_->reflect_simple(j, images_[w * n + i]));
      auto [it, inserted] = index_.emplace(detail::pack(next), static_cast<ElementId>(lengths_.size()));
      if (inserted) {
        if (lengths_.size() >= budget) {
          throw BudgetExceeded("Weyl group exceeds budget of " + std::to_string(budget) + " elements",
                               lengths_.size());
        }
        images_.insert(images_.end(), next.begin(), next.end());
        lengths_.push_back(lengths_[w] + 1);
      }
      left_mul_.push_back(it->second);
    }
  }
}

std::optional<ElementId> WeylGroup::lookup(std::span<const std::uint8_t> imgs) const {
  auto it = index_.find(detail::pack(imgs));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeylGroup::apply(ElementId w, int root) const {
  const auto& coords = rs_->root(root).coords;
  auto r = rs_->combine(coords, images(w));
  if (!r) throw ModelInconsistency("Weyl element maps a root outside the root system");
  return *r;
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  const int n = rank();
  std::vector<std::uint8_t> out(n);
  const auto bi = images(b);
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(apply(a, bi[i]));
  return *lookup(out);
}

ElementId WeylGroup::inverse(ElementId w) const {
  auto word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(word);
}

ElementId WeylGroup::from_word(std::span<const int> word) const {
  ElementId w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_multiply(*it, w);
  return w;
}

std::vector<int> WeylGroup::reduced_word(ElementId w) const {
  std::vector<int> word;
  while (lengths_[w] > 0) {
    for (int j = 0; j < rank(); ++j) {
      const ElementId v = left_multiply(j, w);
      if (lengths_[v] < lengths_[w]) {
        word.push_back(j);
        w = v;
        break;
      }
    }
  }
  return word;
}

std::vector<int> WeylGroup::permutation(ElementId w) const {
  std::vector<int> perm(rs_->size());
  for (int r = 0; r < rs_->size(); ++r) perm[r] = apply(w, r);
  return perm;
}

std::optional<ElementId> WeylGroup::find(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != rs_->size()) return std::nullopt;
  std::vector<std::uint8_t> imgs(rank());
  for (int i = 0; i < rank(); ++i) imgs[i] = static_cast<std::uint8_t>(perm[i]);
  auto id = lookup(imgs);
  if (!id || permutation(*id) != std::vector<int>(perm.begin(), perm.end())) return std::nullopt;
  return id;
}

WeylGroup generate_weyl(const RootSystem& rs, std::size_t budget) {
  return WeylGroup(std::make_shared<const RootSystem>(rs), budget);
}

LengthPolynomial length_poincare(const WeylGroup& w) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(w.length(w.longest())) + 1, 0);
  for (ElementId e = 0; e < w.order(); ++e) ++coeffs[w.length(e)];
  return Polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

Subgroup::Subgroup(const WeylGroup& parent, std::vector<ElementId> elements)
    : parent_(&parent), elements_(std::move(elements)), member_(parent.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  for (auto e : elements_) member_[e] = true;
}

Subgroup subgroup_closure(const WeylGroup& w, std::span<const ElementId> gens, std::size_t budget) {
  std::vector<bool> seen(w.order(), false);
  std::vector<ElementId> elems{w.identity()};
  seen[w.identity()] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (auto g : gens) {
      const ElementId x = w.multiply(g, elems[k]);
      if (seen[x]) continue;
      if (elems.size() >= budget) throw BudgetExceeded("subgroup closure exceeds budget", elems.size());
      seen[x] = true;
      elems.push_back(x);
    }
  }
  return Subgroup(w, std::move(elems));
}

CosetDecomposition min_coset_reps(const WeylGroup& w, const Subgroup& w0) {
  if (&w0.parent() != &w) throw InvalidInput("subgroup belongs to a different group");
  std::vector<int> coset_of(w.order(), -1);
  std::vector<CosetRep> reps;
  std::vector<std::vector<int>> words;

  // Ids are in breadth-first (length) order, so the first unassigned element
  // of a coset has minimal length.
  for (ElementId x = 0; x < w.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    const int min_len = w.length(x);
    ElementId best = x;
    std::vector<int> best_word = w.reduced_word(x);
    for (auto h : w0.elements()) {
      const ElementId y = w.multiply(x, h);
      coset_of[y] = id;
      if (y != x && w.length(y) == min_len) {
        auto word = w.reduced_word(y);
        if (word < best_word) {
          best = y;
          best_word = std::move(word);
        }
      }
    }
    reps.push_back({id, best, min_len});
    words.push_back(std::move(best_word));
  }

  std::vector<int> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (reps[a].min_length != reps[b].min_length) return reps[a].min_length < reps[b].min_length;
    return words[a] < words[b];
  });
  std::vector<int> renumber(reps.size());
  CosetDecomposition out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    renumber[order[k]] = static_cast<int>(k);
    auto rep = reps[order[k]];
    rep.coset_id = static_cast<int>(k);
    out.reps.push_back(rep);
  }
  out.coset_of.resize(coset_of.size());
  for (std::size_t e = 0; e < coset_of.size(); ++e) out.coset_of[e] = renumber[coset_of[e]];
  return out;
}

// ---------------------------------------------------------------------------
// Permutation helpers

std::size_t permutation_group_order(const RootSystem& rs, std::span<const std::vector<int>> generators,
                                    std::size_t budget) {
  check_packable(rs);
  const int n = rs.rank();
  std::vector<std::uint8_t> elems(n);
  std::iota(elems.begin(), elems.end(), std::uint8_t{0});
  std::unordered_map<detail::PackedKey, std::uint32_t, detail::PackedKeyHash> seen;
  seen.emplace(detail::pack(elems), 0);
  std::vector<std::uint8_t> next(n);
  std::size_t count = 1;
  for (std::size_t k = 0; k < count; ++k) {
    for (const auto& g : generators) {
      for (int i = 0; i < n; ++i) next[i] = static_cast<std::uint8_t>(g[elems[k * n + i]]);
      if (seen.emplace(detail::pack(next), static_cast<std::uint32_t>(count)).second) {
        if (count >= budget) throw BudgetExceeded("generated group exceeds budget", count);
        elems.insert(elems.end(), next.begin(), next.end());
        ++count;
      }
    }
  }
  return count;
}

int permutation_order(std::span<const int> perm) {
  std::vector<int> p(perm.begin(), perm.end());
  const std::vector<int> start = p;
  int k = 1;
  std::vector<int> id(perm.size());
  std::iota(id.begin(), id.end(), 0);
  while (p != id) {
    p = compose(start, p);
    ++k;
  }
  return k;
}

std::vector<int> simple_reflection_permutation(const RootSystem& rs, int j) {
  std::vector<int> perm(rs.size());
  for (int r = 0; r < rs.size(); ++r) perm[r] = rs.reflect_simple(j, r);
  return perm;
}

std::vector<int> compose(std::span<const int> p, std::span<const int> q) {
  std::vector<int> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

}  // namespace minrank
