#include "fixtures.hpp"

namespace nexakt::testing {

Lambda3 make_lambda3(std::uint32_t p) {
  AlgebraPtr alg = gen_linear_An_J2(2, 1, p).algebra;
  Module S0 = simple_module(alg, 0), S1 = simple_module(alg, 1), S2 = simple_module(alg, 2);
  Module P0 = projective_module(alg, 0), P1 = projective_module(alg, 1), P2 = projective_module(alg, 2);
  AddCat m3(alg, {P0, P1, P2, S2});
  return {alg, S0, S1, S2, P0, P1, P2, m3, {S0, S1, S2, P1, P2}, {"S0", "S1", "S2", "P1", "P2"}};
}

Pi2 make_pi2(std::uint32_t p) {
  AlgebraPtr alg = gen_preprojective_A(2, p);
  Module S1 = simple_module(alg, 0), S2 = simple_module(alg, 1);
  Module P1 = projective_module(alg, 0), P2 = projective_module(alg, 1);
  AddCat m(alg, {P1, P2, S1});
  return {alg, S1, S2, P1, P2, m, {S1, S2, P1, P2}, {"S1", "S2", "P1", "P2"}};
}

Morphism mor(const Module& s, const Module& t, const std::map<std::size_t, std::vector<std::vector<std::int64_t>>>& comps) {
  std::vector<Mat> out;
  for (std::size_t v = 0; v < s.algebra().vertex_count(); ++v) {
    auto it = comps.find(v);
    if (it == comps.end()) out.emplace_back(s.field(), t.dim(v), s.dim(v));
    else out.push_back(Mat::from_rows(s.field(), it->second, s.dim(v)));
  }
  return Morphism(s, t, std::move(out));
}

namespace {

std::vector<Residue> random_coeffs(const Field& f, std::size_t count, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  std::vector<Residue> c(count);
  for (auto& x : c) x = dist(rng);
  return c;
}

}  // namespace

Morphism random_morphism(const Module& a, const Module& b, Rng& rng) {
  auto basis = hom_basis(a, b);
  return combine(a, b, basis, random_coeffs(a.field(), basis.size(), rng));
}

std::optional<ComplexMorphism> random_extension(const ComplexSeq& x, const ComplexSeq& y, const Morphism& f0,
                                                Rng& rng) {
  std::vector<Morphism> comps{f0};
  for (int k = x.lo(); k < x.hi(); ++k) {
    // Unknown f^{k+1} with d_X^k f^{k+1} = f^k d_Y^k.
    const Module& src = x.term(k + 1);
    const Module& tgt = y.term(k + 1);
    auto basis = hom_basis(src, tgt);
    Morphism rhs = then(comps.back(), y.diff(k));
    const Field& f = f0.field();
    std::size_t amb = rhs.flatten().rows();
    std::vector<Morphism> images;
    for (const auto& b : basis) images.push_back(then(x.diff(k), b));
    Mat a = flattened(f, images, amb);
    auto sol = solve_linear(a, rhs.flatten());
    if (!sol) return std::nullopt;
    Mat ker = kernel_basis(a);
    std::vector<Residue> coeffs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = (*sol)(i, 0);
    auto r = random_coeffs(f, ker.cols(), rng);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = f.add(coeffs[i], f.mul(r[j], ker(i, j)));
    }
    comps.push_back(combine(src, tgt, basis, coeffs));
  }
  return ComplexMorphism(x, y, comps);
}

std::vector<ComplexSeq> exact_sequence_pool(const AddCat& m, std::size_t n, std::size_t variants, Rng& rng) {
  std::vector<ComplexSeq> pool;
  const auto& gens = m.generators();
  auto add = [&](const Morphism& d0) {
    try {
      ComplexSeq s = n_cokernel(d0, m, n);
      if (verify_n_exact(s, m, n).verdict()) pool.push_back(s);
    } catch (const HypothesisError&) {
    }
  };
  for (const auto& g : gens) add(injective_envelope(g));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (std::size_t i = 0; i < variants; ++i) {
    const Module& g = gens[pick(rng)];
    const Module& h = gens[pick(rng)];
    Morphism env = injective_envelope(g);
    DirectSum t = direct_sum(m.algebra_ptr(), {env.target(), h});
    add(column_morphism(t, {env, random_morphism(g, h, rng)}));
  }
  return pool;
}

ComplexSeq contractible(const AlgebraPtr& alg, const Module& c, int lo, std::size_t len, int k) {
  std::vector<Module> terms(len, Module::zero(alg));
  terms[k - lo] = c;
  terms[k - lo + 1] = c;
  std::vector<Morphism> diffs;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (static_cast<int>(i) == k - lo) diffs.push_back(Morphism::identity(c));
    else diffs.push_back(Morphism::zero(terms[i], terms[i + 1]));
  }
  return ComplexSeq(lo, terms, diffs);
}

}  // namespace nexakt::testing
