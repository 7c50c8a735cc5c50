#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "minrank/errors.hpp"
#include "minrank/root_system.hpp"
#include "oracles.hpp"

using namespace minrank;

namespace {

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({'A', n});
    if (n >= 2) out.push_back({'B', n});
    if (n >= 3) out.push_back({'C', n});
    if (n >= 4) out.push_back({'D', n});
    if (n >= 6 && n <= 8) out.push_back({'E', n});
    if (n == 4) out.push_back({'F', 4});
    if (n == 2) out.push_back({'G', 2});
  }
  return out;
}

Root simple(int n, int i) {
  Root r{std::vector<int>(n, 0)};
  r.coords[i] = 1;
  return r;
}

}  // namespace

TEST(BuildDynkin, RankOne) {
  auto d = build_dynkin('A', 1);
  EXPECT_EQ(d.cartan(), (CartanMatrix{{2}}));
  EXPECT_EQ(d.vertices(), (std::vector<std::string>{"a1"}));
}

TEST(BuildDynkin, G2Matrix) {
  EXPECT_EQ(build_dynkin('G', 2).cartan(), (CartanMatrix{{2, -1}, {-3, 2}}));
  EXPECT_EQ(RootSystem(build_dynkin('G', 2)).size(), 12);
}

TEST(BuildDynkin, B3HasOneMinusTwo) {
  auto d = build_dynkin('B', 3);
  int count = 0;
  for (const auto& row : d.cartan()) count += static_cast<int>(std::count(row.begin(), row.end(), -2));
  EXPECT_EQ(count, 1);
  EXPECT_EQ(d(1, 2), -2);  // alpha_3 short
  EXPECT_EQ(RootSystem(d).size(), 18);
}

TEST(BuildDynkin, RejectsInvalidTypes) {
  EXPECT_THROW(build_dynkin('A', 0), InvalidInput);
  EXPECT_THROW(build_dynkin('E', 5), InvalidInput);
  EXPECT_THROW(build_dynkin('E', 9), InvalidInput);
  EXPECT_THROW(build_dynkin('F', 3), InvalidInput);
  EXPECT_THROW(build_dynkin('G', 3), InvalidInput);
  EXPECT_THROW(build_dynkin('D', 2), InvalidInput);
  EXPECT_THROW(build_dynkin('X', 2), InvalidInput);
}

TEST(DynkinDiagram, RejectsMalformedCartan) {
  EXPECT_THROW(DynkinDiagram(CartanMatrix{{2, -1}, {0, 2}}), InvalidInput);
  EXPECT_THROW(DynkinDiagram(CartanMatrix{{2, 1}, {1, 2}}), InvalidInput);
  EXPECT_THROW(DynkinDiagram(CartanMatrix{{1}}), InvalidInput);
  EXPECT_THROW(DynkinDiagram(CartanMatrix{{2, -1}}), InvalidInput);
  EXPECT_THROW(DynkinDiagram(CartanMatrix{{2, 0}, {0, 2}}, {"x", "x"}), InvalidInput);
  EXPECT_THROW(DynkinDiagram(CartanMatrix{}), InvalidInput);
}

TEST(DynkinDiagram, AffineIsNotFinite) {
  DynkinDiagram affine(CartanMatrix{{2, -2}, {-2, 2}});
  EXPECT_FALSE(affine.is_finite_type());
  EXPECT_THROW(affine.type_label(), InvalidInput);
  EXPECT_THROW(RootSystem{affine}, InvalidInput);
}

TEST(DisjointUnion, Examples) {
  auto aa = disjoint_union(build_dynkin('A', 1), build_dynkin('A', 1));
  EXPECT_EQ(aa.cartan(), (CartanMatrix{{2, 0}, {0, 2}}));
  EXPECT_EQ(aa.vertices(), (std::vector<std::string>{"a1", "a2"}));

  auto a3a3 = disjoint_union(build_dynkin('A', 3), build_dynkin('A', 3));
  EXPECT_EQ(a3a3.rank(), 6);
  EXPECT_EQ(a3a3.components(), (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(a3a3.type_label(), "A3+A3");

  auto c2a1 = disjoint_union(build_dynkin('C', 2), build_dynkin('A', 1));
  EXPECT_EQ(c2a1.components(), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_EQ(c2a1.type_label(), "C2+A1");
}

TEST(DynkinDiagram, LabelRoundTrip) {
  auto d = diagram_from_label("A3+B3");
  EXPECT_EQ(d.rank(), 6);
  EXPECT_EQ(d.type_label(), "A3+B3");
  EXPECT_THROW(diagram_from_label("Q3"), InvalidInput);
  EXPECT_THROW(diagram_from_label(""), InvalidInput);
}

TEST(DynkinDiagram, CoincidencesPreferAAndC) {
  EXPECT_EQ(build_dynkin('D', 3).type_label(), "A3");
  EXPECT_EQ(build_dynkin('B', 2).type_label(), "C2");
}

TEST(DynkinDiagram, IdentificationIgnoresVertexOrder) {
  std::mt19937 rng(7);
  for (const auto& t : all_types(7)) {
    const auto d = build_dynkin(t);
    std::vector<int> perm(d.rank());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(d.induced(perm).type_label(), d.type_label()) << t.label();
    }
  }
}

TEST(DynkinDiagram, Automorphisms) {
  EXPECT_EQ(automorphisms(build_dynkin('A', 1)).size(), 1u);
  EXPECT_EQ(automorphisms(build_dynkin('A', 5)).size(), 2u);
  EXPECT_EQ(automorphisms(build_dynkin('D', 4)).size(), 6u);
  EXPECT_EQ(automorphisms(build_dynkin('D', 5)).size(), 2u);
  EXPECT_EQ(automorphisms(build_dynkin('E', 6)).size(), 2u);
  EXPECT_EQ(automorphisms(build_dynkin('B', 4)).size(), 1u);
  EXPECT_EQ(automorphisms(build_dynkin('G', 2)).size(), 1u);
  EXPECT_EQ(automorphisms(diagram_from_label("A1+A1")).size(), 2u);
  auto autos = automorphisms(build_dynkin('A', 4));
  EXPECT_EQ(autos.front(), (std::vector<int>{0, 1, 2, 3}));
}

TEST(RootSystem, Examples) {
  EXPECT_EQ(RootSystem(build_dynkin('A', 3)).size(), 12);
  EXPECT_EQ(RootSystem(build_dynkin('C', 4)).size(), 32);
  RootSystem a1(build_dynkin('A', 1));
  ASSERT_EQ(a1.size(), 2);
  EXPECT_EQ(a1.root(0).coords, (std::vector<int>{1}));
  EXPECT_EQ(a1.root(1).coords, (std::vector<int>{-1}));
}

TEST(RootSystem, SimpleRootsComeFirst) {
  RootSystem rs(build_dynkin('E', 6));
  for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.root(i), simple(6, i));
  for (int k = 0; k < rs.size(); ++k) EXPECT_EQ(rs.root(rs.negate(k)), -rs.root(k));
}

TEST(RootSystem, CountsMatchClassicalAndClosureOracles) {
  for (const auto& t : all_types(8)) {
    const auto d = build_dynkin(t);
    RootSystem rs(d);
    EXPECT_EQ(rs.size(), oracle::classical_root_count(t.series, t.rank)) << t.label();
    std::set<std::vector<int>> mine;
    for (const auto& r : rs.roots()) mine.insert(r.coords);
    auto reference = oracle::roots_by_closure(d.cartan());
    EXPECT_EQ(mine, reference) << t.label();
  }
}

TEST(RootSystem, ReflectionInvolutiveAndDichotomy) {
  for (const auto& t : all_types(6)) {
    RootSystem rs(build_dynkin(t));
    for (int k = 0; k < rs.size(); ++k) {
      const auto& c = rs.root(k).coords;
      const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      EXPECT_TRUE(nonneg != nonpos) << t.label();
      EXPECT_EQ(rs.is_positive(k), nonneg);
      for (int j = 0; j < rs.rank(); ++j) EXPECT_EQ(rs.reflect(j, rs.reflect(j, k)), k);
    }
  }
}

TEST(RootSystem, PairingRangesAndSymmetricForm) {
  for (const auto& t : all_types(4)) {
    const auto d = build_dynkin(t);
    RootSystem rs(d);
    const auto g = oracle::gram(d.cartan());
    for (int a = 0; a < rs.size(); ++a) {
      for (int b = 0; b < rs.size(); ++b) {
        const int p = rs.pairing(b, a);
        const int q = rs.pairing(a, b);
        EXPECT_GE(p, -3);
        EXPECT_LE(p, 3);
        if (a != b && a != rs.negate(b)) EXPECT_LE(std::abs(p * q), 3);
        // <b, a^vee> = 2 (b, a) / (a, a)
        const auto ab = oracle::form(g, rs.root(b).coords, rs.root(a).coords);
        const auto aa = oracle::form(g, rs.root(a).coords, rs.root(a).coords);
        EXPECT_EQ(p * aa, 2 * ab) << t.label();
      }
    }
  }
}

TEST(RootSystem, PairingExamples) {
  RootSystem a2(build_dynkin('A', 2));
  EXPECT_EQ(pairing(a2, simple(2, 0), simple(2, 0)), 2);
  EXPECT_EQ(pairing(a2, simple(2, 0), simple(2, 1)), -1);
  RootSystem a1a1(diagram_from_label("A1+A1"));
  EXPECT_EQ(pairing(a1a1, simple(2, 0), simple(2, 1)), 0);
  EXPECT_THROW(pairing(a2, Root{{2, 0}}, simple(2, 0)), InvalidInput);
}

TEST(RootSystem, OrthogonalityExamples) {
  RootSystem a3(build_dynkin('A', 3));
  EXPECT_TRUE(is_orthogonal(a3, simple(3, 0), simple(3, 2)));
  EXPECT_FALSE(is_orthogonal(a3, simple(3, 0), simple(3, 0)));
  RootSystem a2(build_dynkin('A', 2));
  EXPECT_FALSE(is_orthogonal(a2, simple(2, 0), simple(2, 1)));
  for (int k = 0; k < a3.size(); ++k) EXPECT_FALSE(a3.is_orthogonal(k, k));
}

TEST(RootSystem, ReflectExamples) {
  RootSystem a1(build_dynkin('A', 1));
  EXPECT_EQ(reflect(a1, simple(1, 0), simple(1, 0)), (Root{{-1}}));
  RootSystem a2(build_dynkin('A', 2));
  EXPECT_EQ(reflect(a2, simple(2, 0), simple(2, 1)), (Root{{1, 1}}));
  RootSystem g2(build_dynkin('G', 2));
  // alpha_1 short, alpha_2 long
  EXPECT_EQ(reflect(g2, simple(2, 0), simple(2, 1)), (Root{{3, 1}}));
  EXPECT_THROW(reflect(a2, Root{{1, 1}}, simple(2, 0)), InvalidInput);
}

TEST(RootSystem, WeylOrderFormulaMatchesDegrees) {
  for (const auto& t : all_types(8)) {
    EXPECT_EQ(weyl_group_order(build_dynkin(t)), oracle::order_from_degrees(oracle::degrees(t.series, t.rank)))
        << t.label();
  }
  EXPECT_EQ(weyl_group_order(diagram_from_label("C2+A1+A1")), 32u);
}

TEST(RootSystem, CoxeterNumbers) {
  auto g2 = build_dynkin('G', 2);
  EXPECT_EQ(coxeter_m(g2, 0, 1), 6);
  EXPECT_EQ(coxeter_m(build_dynkin('C', 2), 0, 1), 4);
  EXPECT_EQ(coxeter_m(build_dynkin('A', 3), 0, 1), 3);
  EXPECT_EQ(coxeter_m(build_dynkin('A', 3), 0, 2), 2);
  EXPECT_EQ(coxeter_m(g2, 1, 1), 1);
}
