#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace nexakt;
using namespace nexakt::testing;

namespace {

std::vector<std::string> labels(const std::vector<LabeledModule>& l) {
  std::vector<std::string> out;
  for (const auto& x : l) out.push_back(x.label);
  return out;
}

std::vector<Module> modules(const std::vector<LabeledModule>& l) {
  std::vector<Module> out;
  for (const auto& x : l) out.push_back(x.module);
  return out;
}

/// The hit as a set of isomorphism classes matches `expected`.
bool same_classes(const std::vector<Module>& hit, const std::vector<Module>& expected) {
  if (hit.size() != expected.size()) return false;
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& h : hit) found = found || isomorphic(h, e);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST(LinearAnJ2, Examples) {
  auto l3 = gen_linear_An_J2(2, 1);
  EXPECT_EQ(l3.algebra->vertex_count(), 3u);
  EXPECT_EQ(l3.algebra->dimension(), 5u);
  EXPECT_EQ(labels(l3.expected), (std::vector<std::string>{"P0", "P1", "P2", "S2"}));
  EXPECT_TRUE(isomorphic(projective_module(l3.algebra, 0), simple_module(l3.algebra, 0)));

  auto one = gen_linear_An_J2(1, 0);
  EXPECT_EQ(one.algebra->dimension(), 1u);
  EXPECT_EQ(labels(one.expected), (std::vector<std::string>{"P0"}));

  auto a5 = gen_linear_An_J2(2, 2);
  EXPECT_EQ(a5.algebra->vertex_count(), 5u);
  EXPECT_EQ(labels(a5.expected), (std::vector<std::string>{"P0", "P1", "P2", "P3", "P4", "S2", "S4"}));

  auto rev = gen_linear_An_J2(2, 1, 101, true);
  EXPECT_EQ(labels(rev.expected), (std::vector<std::string>{"P0", "P1", "P2", "S0"}));
  EXPECT_THROW(gen_linear_An_J2(0, 1), PreconditionError);
  EXPECT_THROW(gen_linear_An_J2(4, 3), PreconditionError);
}

TEST(LinearAnJ2, ExpectedModuleIsClusterTilting) {
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    for (bool reverse : {false, true}) {
      auto ex = gen_linear_An_J2(n, m, 5, reverse);
      auto list = modules(nakayama_indecomposables(ex.algebra));
      AddCat cat(ex.algebra, modules(ex.expected));
      EXPECT_TRUE(check_n_cluster_tilting(cat, n, list, true).pass()) << n << "," << m << " reverse=" << reverse;
    }
  }
}

TEST(Preprojective, Examples) {
  auto pi2 = gen_preprojective_A(2);
  EXPECT_EQ(pi2->dimension(), 4u);
  for (std::size_t v = 0; v < 2; ++v) {
    bool matched = false;
    for (std::size_t w = 0; w < 2; ++w)
      matched = matched || isomorphic(injective_module(pi2, v), projective_module(pi2, w));
    EXPECT_TRUE(matched);
  }
  EXPECT_TRUE(presented_isomorphic(*pi2, *opposite_algebra(*pi2)));

  auto pi3 = gen_preprojective_A(3);
  EXPECT_EQ(pi3->nilpotency_bound(), 3u);
  EXPECT_EQ(pi3->dimension(), 10u);  // n(n+1)(n+2)/6
  EXPECT_THROW(gen_preprojective_A(4), PreconditionError);
}

TEST(Nakayama, Examples) {
  auto L = make_lambda3();
  auto l3 = nakayama_indecomposables(L.alg);
  EXPECT_EQ(labels(l3), (std::vector<std::string>{"S0", "S1", "P1", "S2", "P2"}));
  EXPECT_TRUE(same_classes(modules(l3), L.indecs));

  auto one = nakayama_indecomposables(gen_linear_An_J2(1, 0).algebra);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].module.total_dim(), 1u);

  auto P = make_pi2();
  auto pi = nakayama_indecomposables(P.alg);
  EXPECT_EQ(pi.size(), 4u);
  EXPECT_TRUE(same_classes(modules(pi), P.indecs));
  for (const auto& x : pi) EXPECT_TRUE(is_indecomposable(x.module));

  EXPECT_THROW(nakayama_indecomposables(gen_preprojective_A(3)), PreconditionError);
}

TEST(Auslander, Examples) {
  auto a1 = gen_auslander_linear_A(1);
  EXPECT_EQ(a1->vertex_count(), 1u);
  EXPECT_EQ(a1->dimension(), 1u);

  auto a2 = gen_auslander_linear_A(2);
  EXPECT_EQ(a2->vertex_count(), 3u);
  EXPECT_TRUE(presented_isomorphic(*a2, *gen_linear_An_J2(2, 1).algebra));
  EXPECT_FALSE(presented_isomorphic(*a2, *gen_preprojective_A(2)));

  EXPECT_EQ(gen_auslander_linear_A(3)->vertex_count(), 6u);
  // dim of the Auslander algebra of linear A_m is C(m + 3, 4)
  const std::size_t expected[] = {1, 5, 15, 35};
  for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(gen_auslander_linear_A(m)->dimension(), expected[m - 1]) << m;
  EXPECT_THROW(gen_auslander_linear_A(5), PreconditionError);
}

TEST(BruteForceSearch, Examples) {
  auto L = make_lambda3();
  auto list = modules(nakayama_indecomposables(L.alg));
  NctSearchResult r = brute_force_nct_search(L.alg, 2, list, true);
  EXPECT_EQ(r.tested, 4u);
  ASSERT_EQ(r.hits.size(), 1u);
  std::vector<Module> hit;
  for (auto i : r.hits[0]) hit.push_back(list[i]);
  EXPECT_TRUE(same_classes(hit, {L.P0, L.P1, L.P2, L.S2}));

  NctSearchResult one = brute_force_nct_search(L.alg, 1, list, true);
  ASSERT_EQ(one.hits.size(), 1u);
  EXPECT_EQ(one.hits[0].size(), list.size());

  auto P = make_pi2();
  NctSearchResult pi = brute_force_nct_search(P.alg, 2, P.indecs, true);
  EXPECT_EQ(pi.tested, 4u);
  ASSERT_EQ(pi.hits.size(), 2u);
  std::set<std::vector<std::size_t>> got(pi.hits.begin(), pi.hits.end());
  // indecs = S1, S2, P1, P2
  EXPECT_EQ(got, (std::set<std::vector<std::size_t>>{{0, 2, 3}, {1, 2, 3}}));
}

TEST(BruteForceSearch, UniqueHitEqualsExpected) {
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    auto ex = gen_linear_An_J2(n, m, 3);
    auto list = modules(nakayama_indecomposables(ex.algebra));
    NctSearchResult r = brute_force_nct_search(ex.algebra, n, list, true);
    ASSERT_EQ(r.hits.size(), 1u) << n << "," << m;
    std::vector<Module> hit;
    for (auto i : r.hits[0]) hit.push_back(list[i]);
    EXPECT_TRUE(same_classes(hit, modules(ex.expected))) << n << "," << m;
  }
}
