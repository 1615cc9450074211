#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace nexakt;
using namespace nexakt::testing;

namespace {

// Number of natural transformations m -> n found by enumerating every tuple of
// component matrices; only for tiny modules over tiny fields.
std::size_t brute_force_hom_count(const Module& m, const Module& n) {
  const Field& f = m.field();
  const Quiver& q = m.algebra().quiver();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) entries += m.dim(v) * n.dim(v);
  std::vector<Residue> x(entries, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<Mat> comps;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Mat c(f, n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t col = 0; col < c.cols(); ++col) c(r, col) = x[pos++];
      comps.push_back(c);
    }
    bool natural = true;
    for (std::size_t a = 0; a < q.arrow_count() && natural; ++a) {
      const auto& arr = q.arrows()[a];
      natural = n.action(a) * comps[arr.source] == comps[arr.target] * m.action(a);
    }
    count += natural;
    std::size_t i = 0;
    while (i < entries && ++x[i] == f.p()) x[i++] = 0;
    if (i == entries) break;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

AlgebraPtr hereditary_a3(std::uint32_t p = 101) {
  AlgebraPresentation pres;
  pres.p = p;
  pres.quiver = Quiver::from_names({"0", "1", "2"}, {{"a", "1", "0"}, {"b", "2", "1"}});
  pres.nilpotency_bound = 3;
  return build_algebra(pres);
}

// Indecomposables of K(0 <- 1 <- 2): the six interval modules, as quotients of projectives.
std::vector<Module> hereditary_indecs(const AlgebraPtr& alg) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < 3; ++v) {
    Module p = projective_module(alg, v);
    out.push_back(p);
    Module cur = p;
    while (true) {
      // quotient by the socle: the socle of a uniserial module lives at its lowest vertex
      std::size_t low = 0;
      while (cur.dim(low) == 0) ++low;
      if (cur.total_dim() == 1) break;
      Module s = simple_module(alg, low);
      auto hs = hom_basis(s, cur);
      cur = cokernel_morphism(hs.front()).object;
      out.push_back(cur);
    }
  }
  std::vector<Module> unique;
  for (auto& m : out)
    if (std::none_of(unique.begin(), unique.end(), [&](const Module& u) { return isomorphic(u, m); }))
      unique.push_back(m);
  return unique;
}

}  // namespace

TEST(Module, RejectsRelationViolations) {
  auto L = make_lambda3();
  std::vector<Mat> action = {Mat::identity(L.alg->field(), 1), Mat::identity(L.alg->field(), 1)};
  EXPECT_THROW(Module(L.alg, {1, 1, 1}, action), Error);
  EXPECT_THROW(Module(L.alg, {1, 1}, action), Error);
}

TEST(HomBasis, Lambda3Examples) {
  auto L = make_lambda3();
  EXPECT_EQ(hom_dim(L.P1, L.P2), 1u);
  EXPECT_EQ(hom_dim(L.P2, L.P1), 0u);
  for (const auto& x : L.indecs) {
    auto basis = hom_basis(x, x);
    Mat span = flattened(x.field(), basis, Morphism::identity(x).flatten().rows());
    EXPECT_TRUE(in_column_space(span, Morphism::identity(x).flatten()));
  }
}

TEST(HomBasis, MatchesBruteForceOverSmallFields) {
  for (std::uint32_t p : {2u, 3u}) {
    auto L = make_lambda3(p);
    auto P = make_pi2(p);
    for (const auto* list : {&L.indecs, &P.indecs}) {
      for (const auto& a : *list)
        for (const auto& b : *list) EXPECT_EQ(brute_force_hom_count(a, b), ipow(p, hom_dim(a, b)));
    }
    Module big = direct_sum(L.P1, L.S2);
    EXPECT_EQ(brute_force_hom_count(big, L.P2), ipow(p, hom_dim(big, L.P2)));
  }
}

TEST(HomBasis, ContextMismatch) {
  auto L = make_lambda3();
  auto P = make_pi2();
  EXPECT_THROW(hom_basis(L.S0, P.S1), ContextError);
}

TEST(Kernels, Examples) {
  auto L = make_lambda3();
  Morphism f = hom_basis(L.P1, L.P2).front();
  auto k = kernel_morphism(f);
  EXPECT_TRUE(isomorphic(k.object, L.S0));
  EXPECT_TRUE(k.inclusion.is_mono());
  EXPECT_TRUE(then(k.inclusion, f).is_zero());
  EXPECT_TRUE(kernel_morphism(Morphism::identity(L.P2)).object.is_zero());
  EXPECT_EQ(kernel_morphism(Morphism::zero(L.P1, L.P2)).object, L.P1);

  auto c = cokernel_morphism(f);
  EXPECT_TRUE(isomorphic(c.object, L.S2));
  EXPECT_TRUE(c.projection.is_epi());
  EXPECT_TRUE(then(f, c.projection).is_zero());
  EXPECT_TRUE(cokernel_morphism(Morphism::identity(L.P2)).object.is_zero());
  Module zero = Module::zero(L.alg);
  EXPECT_EQ(cokernel_morphism(Morphism::zero(zero, L.P1)).object, L.P1);
}

TEST(Kernels, RankNullityAndImageFactorization) {
  Rng rng(3);
  auto L = make_lambda3();
  std::vector<Module> objs = {L.P1, L.P2, direct_sum(L.P1, L.S1), direct_sum(L.P2, L.P1), L.S0};
  for (int t = 0; t < 40; ++t) {
    const Module& a = objs[rng() % objs.size()];
    const Module& b = objs[rng() % objs.size()];
    Morphism f = random_morphism(a, b, rng);
    auto k = kernel_morphism(f);
    for (std::size_t v = 0; v < L.alg->vertex_count(); ++v) {
      EXPECT_EQ(k.object.dim(v) + rank(f.component(v)), a.dim(v));
    }
    // coker of the kernel inclusion is the image; f factors through it.
    auto im = cokernel_morphism(k.inclusion);
    EXPECT_TRUE(factor_through_source(im.projection, f).has_value());
  }
}

TEST(InAdd, Examples) {
  auto L = make_lambda3();
  EXPECT_TRUE(in_add(L.S2, {direct_sum(L.S2, L.P1)}).member);
  EXPECT_FALSE(in_add(L.S1, {L.P0, L.P1, L.P2}).member);
  EXPECT_TRUE(in_add(Module::zero(L.alg), {L.S1}).member);
  EXPECT_TRUE(in_add(direct_sum(L.P1, L.P1), {L.P1}).member);
}

TEST(Decompose, Examples) {
  auto L = make_lambda3();
  Module x = direct_sum(direct_sum(L.P1, L.P1), L.S2);
  auto parts = split_indecomposables(x, 7);
  ASSERT_EQ(parts.size(), 2u);
  std::size_t p1 = 0, s2 = 0;
  for (const auto& s : parts) {
    if (isomorphic(s.module, L.P1)) p1 = s.multiplicity;
    if (isomorphic(s.module, L.S2)) s2 = s.multiplicity;
  }
  EXPECT_EQ(p1, 2u);
  EXPECT_EQ(s2, 1u);
  EXPECT_TRUE(split_indecomposables(Module::zero(L.alg), 1).empty());
  auto single = split_indecomposables(L.P1, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].multiplicity, 1u);
}

TEST(Decompose, ReassemblyIsIsomorphic) {
  Rng rng(17);
  auto P = make_pi2();
  auto L = make_lambda3();
  for (int t = 0; t < 12; ++t) {
    const auto& list = t % 2 ? P.indecs : L.indecs;
    Module x = list[rng() % list.size()];
    for (int j = 0; j < 2; ++j) x = direct_sum(x, list[rng() % list.size()]);
    auto parts = split_indecomposables(x, t);
    std::size_t total = 0;
    std::vector<Module> pieces;
    for (const auto& s : parts) {
      total += s.multiplicity * s.module.total_dim();
      for (std::size_t i = 0; i < s.multiplicity; ++i) pieces.push_back(s.module);
      EXPECT_TRUE(is_indecomposable(s.module));
    }
    EXPECT_EQ(total, x.total_dim());
    EXPECT_TRUE(isomorphic(direct_sum(x.algebra_ptr(), pieces).object, x));
  }
}

TEST(Isomorphism, Examples) {
  auto L = make_lambda3();
  EXPECT_TRUE(isomorphic(L.P1, L.P1));
  auto r = are_isomorphic(L.P1, L.P2);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_FALSE(r.undecided);
  // base-changed copy of P1: conjugate by diag(3, 5)
  const Field& f = L.alg->field();
  Mat s0 = Mat::from_rows(f, {{3}}), s1 = Mat::from_rows(f, {{5}});
  std::vector<Mat> action = L.P1.action();
  action[0] = s0 * action[0] * Mat::from_rows(f, {{f.inv(5)}});
  Module copy(L.alg, L.P1.dims(), action);
  EXPECT_NE(copy, L.P1);
  auto iso = are_isomorphic(L.P1, copy);
  ASSERT_TRUE(iso.isomorphic);
  ASSERT_TRUE(iso.witness);
  EXPECT_TRUE(iso.witness->is_iso());
  EXPECT_FALSE(isomorphic(L.S1, L.S0));
}

TEST(Resolutions, ProjectiveExamples) {
  auto L = make_lambda3();
  auto r = min_projective_resolution(L.S2, 3);
  ASSERT_EQ(r.complex.size(), 3u);
  EXPECT_TRUE(isomorphic(r.complex.term(0), L.P2));
  EXPECT_TRUE(isomorphic(r.complex.term(-1), L.P1));
  EXPECT_TRUE(isomorphic(r.complex.term(-2), L.P0));
  EXPECT_TRUE(r.syzygy_inclusion.source().is_zero());
  EXPECT_TRUE(r.augmentation.is_epi());

  auto proj = min_projective_resolution(L.P1, 1);
  EXPECT_TRUE(proj.augmentation.is_iso());
  EXPECT_TRUE(proj.syzygy_inclusion.source().is_zero());

  auto P = make_pi2();
  auto per = min_projective_resolution(P.S1, 4);
  EXPECT_TRUE(isomorphic(per.complex.term(0), P.P1));
  EXPECT_TRUE(isomorphic(per.complex.term(-1), P.P2));
  EXPECT_TRUE(isomorphic(per.complex.term(-2), P.P1));
  EXPECT_TRUE(isomorphic(per.complex.term(-3), P.P2));
}

TEST(Resolutions, InjectiveExamples) {
  auto P = make_pi2();
  auto c = min_injective_coresolution(P.S1, 2);
  EXPECT_TRUE(isomorphic(c.complex.term(0), P.P2));
  EXPECT_TRUE(isomorphic(c.complex.term(1), P.P1));
  EXPECT_TRUE(isomorphic(c.cosyzygy_projection.target(), P.S1));
  EXPECT_TRUE(c.coaugmentation.is_mono());

  auto L = make_lambda3();
  auto inj = min_injective_coresolution(injective_module(L.alg, 1), 1);
  EXPECT_TRUE(inj.coaugmentation.is_iso());
  EXPECT_TRUE(inj.cosyzygy_projection.target().is_zero());

  auto s0 = min_injective_coresolution(L.S0, 1);
  EXPECT_EQ(s0.complex.term(0).dims(), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_TRUE(isomorphic(s0.cosyzygy_projection.target(), L.S1));
}

TEST(Ext, Lambda3Examples) {
  auto L = make_lambda3();
  EXPECT_EQ(ext_dim(L.S1, L.S0, 1), 1u);
  EXPECT_EQ(ext_dim(L.S2, L.S0, 1), 0u);
  for (const auto& x : L.indecs) {
    EXPECT_EQ(ext_dim(L.P1, x, 1), 0u);
    EXPECT_EQ(ext_dim(L.P2, x, 2), 0u);
    EXPECT_EQ(ext_dim(x, x, 0), hom_dim(x, x));
  }
  EXPECT_EQ(ext_dim(L.S2, L.S0, 2), 1u);
}

TEST(Ext, EulerFormOnHereditaryA3) {
  // For hereditary algebras dim Hom - dim Ext^1 = <dim a, dim b>.
  auto alg = hereditary_a3();
  auto indecs = hereditary_indecs(alg);
  ASSERT_EQ(indecs.size(), 6u);
  for (const auto& a : indecs)
    for (const auto& b : indecs) {
      long euler = 0;
      for (std::size_t v = 0; v < 3; ++v) euler += static_cast<long>(a.dim(v) * b.dim(v));
      for (const auto& arr : alg->quiver().arrows())
        euler -= static_cast<long>(a.dim(arr.source) * b.dim(arr.target));
      EXPECT_EQ(static_cast<long>(hom_dim(a, b)) - static_cast<long>(ext_dim(a, b, 1)), euler);
      EXPECT_EQ(ext_dim(a, b, 2), 0u);
      ExtCalculator calc(a, 2);
      EXPECT_EQ(calc.dim(b, 1), ext_dim(a, b, 1));
    }
}

TEST(Complexes, ConeOfIdentityIsContractible) {
  auto L = make_lambda3();
  ComplexSeq x = contractible(L.alg, L.P1, 0, 2, 0);
  ComplexSeq cone = mapping_cone(ComplexMorphism::identity(x));
  EXPECT_TRUE(is_exact_complex(cone, true, true));
}

TEST(Complexes, ConeOfZeroIsBlockDiagonal) {
  auto L = make_lambda3();
  ComplexSeq x = ComplexSeq::from_maps(0, {hom_basis(L.S0, L.P1).front()});
  ComplexSeq y = ComplexSeq::from_maps(0, {hom_basis(L.P1, L.P2).front()});
  ComplexSeq cone = mapping_cone(ComplexMorphism::zero(x, y));
  EXPECT_EQ(cone.lo(), -1);
  EXPECT_EQ(cone.term(0).dims(), direct_sum(L.P1, L.P1).dims());
  EXPECT_EQ(cone.diff(-1).component(0).rows(), cone.term(0).dim(0));
}

TEST(Complexes, RejectsNonComplex) {
  auto L = make_lambda3();
  Morphism f = hom_basis(L.P1, L.P2).front();
  EXPECT_THROW(ComplexSeq::from_maps(0, {Morphism::identity(L.P1), f}), Error);
  EXPECT_THROW(ComplexSeq::from_maps(0, {f, f}), Error);
}

TEST(Homotopy, VerifyExamples) {
  auto L = make_lambda3();
  ComplexSeq x = ComplexSeq::from_maps(0, {hom_basis(L.S0, L.P1).front(), hom_basis(L.P1, L.P2).front()});
  ComplexMorphism id = ComplexMorphism::identity(x);
  EXPECT_TRUE(verify_homotopy(id, id, Homotopy{0, {}}));
  EXPECT_FALSE(verify_homotopy(id, ComplexMorphism::zero(x, x), Homotopy{0, {}}));
}
