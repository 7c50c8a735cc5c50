#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "minrank/errors.hpp"
#include "minrank/weyl.hpp"
#include "oracles.hpp"

using namespace minrank;

namespace {

std::vector<CartanType> types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({'A', n});
    if (n >= 2) out.push_back({'B', n});
    if (n >= 3) out.push_back({'C', n});
    if (n >= 4) out.push_back({'D', n});
    if (n == 6) out.push_back({'E', 6});
    if (n == 4) out.push_back({'F', 4});
    if (n == 2) out.push_back({'G', 2});
  }
  return out;
}

WeylGroup weyl_of(char t, int n) { return generate_weyl(RootSystem(build_dynkin(t, n))); }

}  // namespace

TEST(WeylGroup, OrderExamples) {
  EXPECT_EQ(weyl_of('A', 1).order(), 2u);
  EXPECT_EQ(weyl_of('A', 3).order(), 24u);
  EXPECT_EQ(weyl_of('E', 6).order(), 51840u);
}

TEST(WeylGroup, OrdersMatchDegreeProduct) {
  for (const auto& t : types_up_to(6)) {
    EXPECT_EQ(generate_weyl(RootSystem(build_dynkin(t))).order(),
              oracle::order_from_degrees(oracle::degrees(t.series, t.rank)))
        << t.label();
  }
}

TEST(WeylGroup, OrdersMatchMatrixGroupOracle) {
  for (const auto& t : types_up_to(4)) {
    const auto d = build_dynkin(t);
    EXPECT_EQ(generate_weyl(RootSystem(d)).order(), oracle::MatrixGroup(d.cartan()).order()) << t.label();
  }
}

TEST(WeylGroup, BudgetExceeded) {
  RootSystem e7(build_dynkin('E', 7));
  try {
    generate_weyl(e7, 100000);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.partial(), 100000u);
  }
}

TEST(WeylGroup, LengthExamples) {
  auto w = weyl_of('A', 2);
  EXPECT_EQ(w.length(w.identity()), 0);
  EXPECT_EQ(w.length(w.longest()), 3);
  for (int j = 0; j < w.rank(); ++j) EXPECT_EQ(w.length(w.generator(j)), 1);
  EXPECT_EQ(length(w.element(w.longest())), 3);
}

TEST(WeylGroup, ElementsAreSignedRootPermutations) {
  auto w = weyl_of('B', 3);
  const auto& rs = w.root_system();
  for (ElementId e = 0; e < w.order(); ++e) {
    const auto el = w.element(e);
    std::vector<int> sorted = el.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < rs.size(); ++k) {
      EXPECT_EQ(sorted[k], k);
      EXPECT_EQ(el.perm[rs.negate(k)], rs.negate(el.perm[k]));
    }
    EXPECT_EQ(static_cast<int>(el.word.size()), length(el));
    EXPECT_EQ(w.length(e), length(el));
    EXPECT_EQ(w.from_word(el.word), e);
    EXPECT_EQ(w.find(el.perm), std::optional<ElementId>(e));
  }
}

TEST(WeylGroup, ActionMatchesMatrixOracle) {
  const auto d = build_dynkin('C', 3);
  auto w = generate_weyl(RootSystem(d));
  oracle::MatrixGroup m(d.cartan());
  const auto& rs = w.root_system();
  for (ElementId e = 0; e < w.order(); ++e) {
    const auto mat = m.product(w.reduced_word(e));
    for (int r = 0; r < rs.size(); ++r) {
      std::vector<int> img(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) img[i] += mat[i][j] * rs.root(r).coords[j];
      EXPECT_EQ(rs.root(w.apply(e, r)).coords, img);
    }
  }
}

TEST(WeylGroup, ClosedUnderProductAndInverse) {
  auto w = weyl_of('G', 2);
  for (ElementId a = 0; a < w.order(); ++a) {
    EXPECT_EQ(w.multiply(a, w.inverse(a)), w.identity());
    EXPECT_EQ(w.length(w.inverse(a)), w.length(a));
    for (ElementId b = 0; b < w.order(); ++b) {
      const ElementId ab = w.multiply(a, b);
      EXPECT_EQ(w.permutation(ab), compose(w.permutation(a), w.permutation(b)));
    }
  }
}

TEST(WeylGroup, ReducedWordIsLexLeast) {
  auto w = weyl_of('A', 3);
  for (ElementId e = 1; e < w.order(); ++e) {
    const auto word = w.reduced_word(e);
    int first_descent = -1;
    for (int j = 0; j < w.rank() && first_descent < 0; ++j)
      if (w.length(w.left_multiply(j, e)) < w.length(e)) first_descent = j;
    EXPECT_EQ(word.front(), first_descent);
  }
}

TEST(WeylGroup, CoxeterRelations) {
  for (const auto& t : types_up_to(5)) {
    const auto d = build_dynkin(t);
    RootSystem rs(d);
    for (int i = 0; i < d.rank(); ++i) {
      for (int j = 0; j < d.rank(); ++j) {
        auto p = compose(simple_reflection_permutation(rs, i), simple_reflection_permutation(rs, j));
        EXPECT_EQ(permutation_order(p), coxeter_m(d, i, j)) << t.label() << " " << i << "," << j;
      }
    }
  }
}

TEST(WeylGroup, TypeAIsSymmetricGroup) {
  std::uint64_t fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= static_cast<std::uint64_t>(n + 1);
    EXPECT_EQ(weyl_of('A', n).order(), fact);
  }
}

TEST(LengthPoincare, Examples) {
  EXPECT_EQ(length_poincare(weyl_of('A', 1)).coeffs(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(length_poincare(weyl_of('A', 2)).coeffs(), (std::vector<std::int64_t>{1, 2, 2, 1}));
  EXPECT_EQ(length_poincare(weyl_of('C', 2)).coeffs(), (std::vector<std::int64_t>{1, 2, 2, 2, 1}));
}

TEST(LengthPoincare, MatchesDegreeProductAndIsPalindromic) {
  for (const auto& t : types_up_to(6)) {
    auto w = generate_weyl(RootSystem(build_dynkin(t)));
    auto p = length_poincare(w);
    EXPECT_EQ(p.at_one(), static_cast<std::int64_t>(w.order())) << t.label();
    EXPECT_TRUE(p.is_palindromic()) << t.label();
    if (t.rank <= 4) {
      EXPECT_EQ(p.coeffs(), oracle::poincare_from_degrees(oracle::degrees(t.series, t.rank))) << t.label();
    }
  }
}

TEST(Subgroup, ClosureExamples) {
  auto a3 = weyl_of('A', 3);
  EXPECT_EQ(subgroup_closure(a3, {}).order(), 1u);
  const std::vector<ElementId> c2{a3.multiply(a3.generator(0), a3.generator(2)), a3.generator(1)};
  EXPECT_EQ(subgroup_closure(a3, c2).order(), 8u);

  auto a1a1 = generate_weyl(RootSystem(diagram_from_label("A1+A1")));
  const std::vector<ElementId> diag{a1a1.multiply(a1a1.generator(0), a1a1.generator(1))};
  EXPECT_EQ(subgroup_closure(a1a1, diag).order(), 2u);

  EXPECT_THROW(subgroup_closure(a3, c2, 4), BudgetExceeded);
}

TEST(Subgroup, PermutationGroupOrder) {
  RootSystem rs(build_dynkin('B', 3));
  std::vector<std::vector<int>> gens{compose(simple_reflection_permutation(rs, 0), simple_reflection_permutation(rs, 2)),
                                     simple_reflection_permutation(rs, 1)};
  EXPECT_EQ(permutation_group_order(rs, gens), 12u);
  gens.push_back(simple_reflection_permutation(rs, 0));
  EXPECT_EQ(permutation_group_order(rs, gens), 48u);
}

TEST(Cosets, WholeGroupIsOneCoset) {
  auto w = weyl_of('B', 2);
  std::vector<ElementId> all(w.order());
  for (ElementId e = 0; e < w.order(); ++e) all[e] = e;
  auto dec = min_coset_reps(w, Subgroup(w, all));
  ASSERT_EQ(dec.reps.size(), 1u);
  EXPECT_EQ(dec.reps[0].rep, w.identity());
  EXPECT_EQ(dec.reps[0].min_length, 0);
}

TEST(Cosets, EmbeddedSubgroupExamples) {
  for (char t : {'A', 'B'}) {
    const auto d = build_dynkin(t, 3);
    auto w = generate_weyl(RootSystem(d));
    const std::vector<ElementId> gens{w.multiply(w.generator(0), w.generator(2)), w.generator(1)};
    auto dec = min_coset_reps(w, subgroup_closure(w, gens));
    std::vector<int> lengths;
    for (const auto& r : dec.reps) lengths.push_back(r.min_length);
    if (t == 'A') EXPECT_EQ(lengths, (std::vector<int>{0, 1, 2}));
    else EXPECT_EQ(lengths, (std::vector<int>{0, 1, 2, 3}));

    oracle::MatrixGroup m(d.cartan());
    const auto ref = m.coset_min_lengths({m.mul(m.gen(0), m.gen(2)), m.gen(1)});
    EXPECT_EQ(std::multiset<int>(lengths.begin(), lengths.end()), ref);
  }
}

TEST(Cosets, MinLengthIsMinimal) {
  for (const auto& t : types_up_to(4)) {
    auto w = generate_weyl(RootSystem(build_dynkin(t)));
    if (w.rank() < 2) continue;
    const std::vector<ElementId> gens{w.generator(0), w.generator(w.rank() - 1)};
    auto dec = min_coset_reps(w, subgroup_closure(w, gens));
    for (ElementId x = 0; x < w.order(); ++x) {
      const auto& rep = dec.reps[dec.coset_of[x]];
      EXPECT_GE(w.length(x), rep.min_length);
      EXPECT_EQ(dec.coset_of[rep.rep], rep.coset_id);
      EXPECT_EQ(w.length(rep.rep), rep.min_length);
    }
  }
}
