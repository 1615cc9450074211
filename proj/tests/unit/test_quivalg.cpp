#include <gtest/gtest.h>

#include <nexakt/nexakt.hpp>

using namespace nexakt;

namespace {

AlgebraPresentation lambda3_presentation(std::uint32_t p = 101) {
  AlgebraPresentation pres;
  pres.p = p;
  pres.quiver = Quiver::from_names({"0", "1", "2"}, {{"a", "1", "0"}, {"b", "2", "1"}});
  pres.relations = {{{1, {"b", "a"}}}};
  pres.nilpotency_bound = 2;
  return pres;
}

AlgebraPresentation one_vertex() {
  AlgebraPresentation pres;
  pres.quiver = Quiver({"v"}, {});
  pres.nilpotency_bound = 1;
  return pres;
}

// Paths of a quiver avoiding every monomial relation as a subword, counted directly.
std::size_t monomial_dimension(const AlgebraPresentation& pres) {
  const Quiver& q = pres.quiver;
  std::vector<std::vector<std::size_t>> forbidden;
  for (const auto& r : pres.relations) {
    std::vector<std::size_t> w;
    for (const auto& a : r.front().path) w.push_back(q.arrow_index(a));
    forbidden.push_back(w);
  }
  std::size_t count = q.vertex_count();
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) layer.push_back({a});
  while (!layer.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      bool ok = true;
      for (const auto& f : forbidden)
        if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) ok = false;
      if (!ok) continue;
      ++count;
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrows()[a].source != q.arrows()[w.back()].target) continue;
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    layer = std::move(next);
  }
  return count;
}

}  // namespace

TEST(BuildAlgebra, Lambda3) {
  auto alg = build_algebra(lambda3_presentation());
  EXPECT_EQ(alg->dimension(), 5u);
  EXPECT_EQ(alg->dimension(), monomial_dimension(lambda3_presentation()));
  std::size_t trivial = 0;
  for (const auto& w : alg->basis()) trivial += w.length() == 0;
  EXPECT_EQ(trivial, 3u);
}

TEST(BuildAlgebra, OneVertex) { EXPECT_EQ(build_algebra(one_vertex())->dimension(), 1u); }

TEST(BuildAlgebra, Pi2) {
  auto alg = gen_preprojective_A(2);
  EXPECT_EQ(alg->dimension(), 4u);
  EXPECT_EQ(alg->dimension(), monomial_dimension(alg->presentation()));
}

TEST(BuildAlgebra, PreprojectiveA3MatchesTetrahedralNumber) {
  // dim Π(A_n) = n(n+1)(n+2)/6.
  auto alg = gen_preprojective_A(3);
  EXPECT_EQ(alg->dimension(), 10u);
  EXPECT_EQ(alg->nilpotency_bound(), 3u);
}

TEST(BuildAlgebra, Errors) {
  auto pres = lambda3_presentation();
  pres.relations.push_back({{1, {"a"}}});
  EXPECT_THROW(build_algebra(pres), AdmissibilityError);
  auto unbounded = lambda3_presentation();
  unbounded.relations.clear();
  EXPECT_THROW(build_algebra(unbounded), BoundError);
  auto bad_arrow = lambda3_presentation();
  bad_arrow.relations = {{{1, {"a", "b"}}}};
  EXPECT_THROW(build_algebra(bad_arrow), Error);
  EXPECT_THROW(Quiver::from_names({"0"}, {{"a", "0", "9"}}), Error);
  EXPECT_THROW(Quiver::from_names({"0", "0"}, {}), Error);
}

TEST(BuildAlgebra, MultiplicationIsAssociativeAndUnital) {
  for (auto alg : {gen_preprojective_A(3), gen_auslander_linear_A(3), build_algebra(lambda3_presentation())}) {
    const std::size_t d = alg->dimension();
    auto times = [&](const BasisVector& x, std::size_t j) {
      std::map<std::size_t, Residue> acc;
      for (auto [i, c] : x)
        for (auto [k, e] : alg->multiply(i, j)) acc[k] = alg->field().add(acc[k], alg->field().mul(c, e));
      BasisVector out;
      for (auto [k, c] : acc)
        if (c) out.emplace_back(k, c);
      return out;
    };
    for (std::size_t i = 0; i < d; ++i) {
      const auto& w = alg->basis()[i];
      PathWord es{w.source(), {}}, et{w.target(alg->quiver()), {}};
      std::size_t is = 0, it = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (alg->basis()[k] == es) is = k;
        if (alg->basis()[k] == et) it = k;
      }
      EXPECT_EQ(alg->multiply(is, i), (BasisVector{{i, 1}}));
      EXPECT_EQ(alg->multiply(i, it), (BasisVector{{i, 1}}));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          BasisVector left = times(alg->multiply(i, j), k);
          BasisVector right;
          {
            std::map<std::size_t, Residue> acc;
            for (auto [m, c] : alg->multiply(j, k))
              for (auto [r, e] : alg->multiply(i, m)) acc[r] = alg->field().add(acc[r], alg->field().mul(c, e));
            for (auto [r, c] : acc)
              if (c) right.emplace_back(r, c);
          }
          EXPECT_EQ(left, right);
        }
    }
  }
}

TEST(Projectives, Lambda3) {
  auto alg = build_algebra(lambda3_presentation());
  Module p0 = projective_module(alg, 0), p1 = projective_module(alg, 1);
  EXPECT_EQ(p0.dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(p0, simple_module(alg, 0));
  EXPECT_EQ(p1.dims(), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(p1.action(alg->quiver().arrow_index("a")), Mat::identity(alg->field(), 1));
  EXPECT_THROW(projective_module(alg, 7), Error);
}

TEST(Projectives, Pi2) {
  auto alg = gen_preprojective_A(2);
  EXPECT_EQ(projective_module(alg, 0).dims(), (std::vector<std::size_t>{1, 1}));
}

TEST(Injectives, Lambda3) {
  auto alg = build_algebra(lambda3_presentation());
  EXPECT_EQ(injective_module(alg, 2).dims(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(injective_module(alg, 2), simple_module(alg, 2));
  EXPECT_EQ(injective_module(alg, 0).dims(), (std::vector<std::size_t>{1, 1, 0}));
  auto single = build_algebra(one_vertex());
  EXPECT_EQ(injective_module(single, 0), projective_module(single, 0));
  EXPECT_EQ(injective_module(single, 0), simple_module(single, 0));
}

TEST(Projectives, DimensionsMatchBasisCounts) {
  for (auto alg : {gen_preprojective_A(3), gen_auslander_linear_A(4), gen_linear_An_J2(3, 2).algebra}) {
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      std::size_t out = 0, in = 0;
      for (std::size_t w = 0; w < alg->vertex_count(); ++w) {
        out += alg->basis_between(v, w).size();
        in += alg->basis_between(w, v).size();
      }
      EXPECT_EQ(projective_module(alg, v).total_dim(), out);
      EXPECT_EQ(injective_module(alg, v).total_dim(), in);
    }
  }
}

TEST(Opposite, Examples) {
  auto alg = build_algebra(lambda3_presentation());
  auto op = opposite_algebra(*alg);
  EXPECT_EQ(op->dimension(), 5u);
  EXPECT_EQ(op->quiver().arrows()[0].source, alg->quiver().arrows()[0].target);
  auto opop = opposite_algebra(*op);
  EXPECT_EQ(opop->basis(), alg->basis());
  EXPECT_EQ(opop->presentation(), alg->presentation());
  auto single = build_algebra(one_vertex());
  EXPECT_EQ(opposite_algebra(*single)->presentation(), single->presentation());
  auto pi2 = gen_preprojective_A(2);
  EXPECT_TRUE(presented_isomorphic(*pi2, *opposite_algebra(*pi2)));
}

TEST(PathWords, CompositionOrder) {
  // [a, b] acts as M(b) * M(a).
  auto alg = gen_auslander_linear_A(3);
  Module p = projective_module(alg, 0);
  const Quiver& q = alg->quiver();
  for (const auto& a : q.arrows()) {
    for (const auto& b : q.arrows()) {
      if (a.target != b.source) continue;
      PathWord w{a.source, {q.arrow_index(a.name), q.arrow_index(b.name)}};
      EXPECT_EQ(p.path_action(w), p.action(q.arrow_index(b.name)) * p.action(q.arrow_index(a.name)));
    }
  }
}
