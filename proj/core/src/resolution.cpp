#include <algorithm>

#include "nexakt/error.hpp"
#include "nexakt/modcat.hpp"

namespace nexakt {

Morphism map_from_projective(const Module& pv, std::size_t v, const Mat& x, const Module& m) {
  const Algebra& alg = m.algebra();
  const std::size_t nv = alg.vertex_count();
  std::vector<Mat> comps;
  for (std::size_t w = 0; w < nv; ++w) {
    const auto& paths = alg.basis_between(v, w);
    Mat c(m.field(), m.dim(w), paths.size());
    for (std::size_t j = 0; j < paths.size(); ++j) c.set_block(0, j, m.path_action(alg.basis()[paths[j]]) * x);
    comps.push_back(std::move(c));
  }
  return Morphism(pv, m, std::move(comps));
}

Morphism projective_cover(const Module& m) {
  const AlgebraPtr& alg = m.algebra_ptr();
  const Quiver& q = alg->quiver();
  const Field& f = m.field();
  std::vector<Module> summands;
  std::vector<Morphism> maps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    std::vector<Mat> incoming;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrows()[a].target == v) incoming.push_back(m.action(a));
    }
    Mat rad = hstack(f, m.dim(v), incoming);
    auto top = complement_columns(rad, Mat::identity(f, m.dim(v)));
    if (top.empty()) continue;
    Module pv = projective_module(alg, v);
    for (std::size_t i : top) {
      Mat x(f, m.dim(v), 1);
      x(i, 0) = 1;
      summands.push_back(pv);
      maps.push_back(map_from_projective(pv, v, x, m));
    }
  }
  if (summands.empty()) return Morphism::zero(Module::zero(alg), m);
  return row_morphism(direct_sum(alg, summands), maps);
}

Morphism injective_envelope(const Module& m) {
  const AlgebraPtr& alg = m.algebra_ptr();
  const Quiver& q = alg->quiver();
  const Field& f = m.field();
  std::vector<Module> summands;
  std::vector<Morphism> maps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    std::vector<Mat> outgoing;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrows()[a].source == v) outgoing.push_back(m.action(a));
    }
    Mat soc = outgoing.empty() ? Mat::identity(f, m.dim(v)) : kernel_basis(vstack(f, m.dim(v), outgoing));
    if (soc.cols() == 0) continue;
    // Complete the socle basis to a basis of m_v; dual rows give the functionals.
    auto extra = complement_columns(soc, Mat::identity(f, m.dim(v)));
    Mat full(f, m.dim(v), m.dim(v));
    full.set_block(0, 0, soc);
    for (std::size_t j = 0; j < extra.size(); ++j) full(extra[j], soc.cols() + j) = 1;
    auto inv = solve_linear(full, Mat::identity(f, m.dim(v)));
    if (!inv) throw Error("socle completion is not invertible");
    Module iv = injective_module(alg, v);
    for (std::size_t i = 0; i < soc.cols(); ++i) {
      std::vector<std::size_t> row_idx{i};
      Mat phi = inv->rows_of(row_idx);  // 1 x m_v
      std::vector<Mat> comps;
      for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        const auto& paths = alg->basis_between(w, v);
        Mat c(f, paths.size(), m.dim(w));
        for (std::size_t r = 0; r < paths.size(); ++r) {
          c.set_block(r, 0, phi * m.path_action(alg->basis()[paths[r]]));
        }
        comps.push_back(std::move(c));
      }
      summands.push_back(iv);
      maps.emplace_back(m, iv, std::move(comps));
    }
  }
  if (summands.empty()) return Morphism::zero(m, Module::zero(alg));
  return column_morphism(direct_sum(alg, summands), maps);
}

ProjectiveResolution min_projective_resolution(const Module& m, std::size_t length) {
  if (length == 0) length = 1;
  Morphism cover = projective_cover(m);
  Morphism aug = cover;
  std::vector<Module> terms{cover.source()};
  std::vector<Morphism> diffs;  // in increasing degree order after reversal
  KernelResult k = kernel_morphism(cover);
  for (std::size_t i = 1; i < length; ++i) {
    Morphism c = projective_cover(k.object);
    diffs.push_back(then(c, k.inclusion));
    terms.push_back(c.source());
    k = kernel_morphism(c);
  }
  std::reverse(terms.begin(), terms.end());
  std::reverse(diffs.begin(), diffs.end());
  int lo = -static_cast<int>(length) + 1;
  return {ComplexSeq(lo, std::move(terms), std::move(diffs)), aug, k.inclusion};
}

InjectiveCoresolution min_injective_coresolution(const Module& m, std::size_t length) {
  if (length == 0) length = 1;
  Morphism env = injective_envelope(m);
  Morphism coaug = env;
  std::vector<Module> terms{env.target()};
  std::vector<Morphism> diffs;
  CokernelResult c = cokernel_morphism(env);
  for (std::size_t i = 1; i < length; ++i) {
    Morphism e = injective_envelope(c.object);
    diffs.push_back(then(c.projection, e));
    terms.push_back(e.target());
    c = cokernel_morphism(e);
  }
  return {ComplexSeq(0, std::move(terms), std::move(diffs)), coaug, c.projection};
}

namespace {

// Ext^k from a resolution with at least k + 2 terms.
std::size_t ext_from_resolution(const ProjectiveResolution& res, const Module& n, std::size_t k) {
  const ComplexSeq& q = res.complex;
  const Field& f = n.field();
  int deg = -static_cast<int>(k);
  Module qk = q.term(deg);
  auto hk = hom_basis(qk, n);
  if (hk.empty()) return 0;
  std::size_t ambient = hk.front().flatten().rows();
  // incoming: Hom(Q_{k-1}, n) -> Hom(Q_k, n)
  std::size_t rank_in = 0;
  if (k >= 1) {
    std::vector<Morphism> img;
    for (const auto& b : hom_basis(q.term(deg + 1), n)) img.push_back(then(q.diff(deg), b));
    rank_in = rank(flattened(f, img, ambient));
  }
  // outgoing: Hom(Q_k, n) -> Hom(Q_{k+1}, n)
  std::vector<Morphism> out;
  for (const auto& b : hk) out.push_back(then(q.diff(deg - 1), b));
  std::size_t amb_out = Morphism::zero(q.term(deg - 1), n).flatten().rows();
  std::size_t rank_out = rank(flattened(f, out, amb_out));
  return hk.size() - rank_out - rank_in;
}

}  // namespace

std::size_t ext_dim(const Module& m, const Module& n, std::size_t k) {
  require_same_algebra(m, n);
  if (k == 0) return hom_dim(m, n);
  return ext_from_resolution(min_projective_resolution(m, k + 2), n, k);
}

ExtCalculator::ExtCalculator(const Module& m, std::size_t max_k)
    : res_(min_projective_resolution(m, max_k + 2)), max_k_(max_k) {}

std::size_t ExtCalculator::dim(const Module& n, std::size_t k) const {
  if (k > max_k_) throw ShapeError("Ext degree beyond the precomputed resolution");
  if (k == 0) {
    // Hom(m, n) = kernel of Hom(Q_0, n) -> Hom(Q_1, n)
    return ext_from_resolution(res_, n, 0);
  }
  return ext_from_resolution(res_, n, k);
}

}  // namespace nexakt
