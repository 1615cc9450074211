#include <numeric>

#include "nexakt/error.hpp"
#include "nexakt/modcat.hpp"

namespace nexakt {

// ----- Module ---------------------------------------------------------------

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
  if (!alg_) throw ContextError("module without an algebra");
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw ShapeError("module dimension vector has wrong length");
  if (action_.size() != q.arrow_count()) throw ShapeError("module needs one matrix per arrow");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (action_[a].rows() != dims_[arrow.target] || action_[a].cols() != dims_[arrow.source]) {
      throw ShapeError("matrix of arrow '" + arrow.name + "' has the wrong shape");
    }
    if (!(action_[a].field() == alg_->field())) throw ContextError("matrix over the wrong field");
  }
  const Field& f = alg_->field();
  for (const auto& rel : alg_->relations()) {
    if (rel.empty()) continue;
    std::size_t s = rel.front().second.source();
    std::size_t t = rel.front().second.target(q);
    Mat acc(f, dims_[t], dims_[s]);
    for (const auto& [c, w] : rel) acc = acc + path_action(w).scaled(c);
    if (!acc.is_zero()) throw InputError("module does not satisfy the relations of the algebra");
  }
}

Module Module::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Mat> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) action.emplace_back(alg->field(), 0, 0);
  return Module(alg, std::vector<std::size_t>(q.vertex_count(), 0), std::move(action));
}

std::size_t Module::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Mat Module::path_action(const PathWord& w) const {
  Mat m = Mat::identity(field(), dims_.at(w.base));
  for (std::size_t a : w.arrows) m = action_[a] * m;
  return m;
}

bool Module::operator==(const Module& o) const {
  return alg_ && o.alg_ && same_algebra(*alg_, *o.alg_) && dims_ == o.dims_ && action_ == o.action_;
}

void require_same_algebra(const Module& a, const Module& b) {
  if (!a.algebra_ptr() || !b.algebra_ptr() || !same_algebra(a.algebra(), b.algebra())) {
    throw ContextError("modules over different algebras");
  }
}

// ----- Morphism -------------------------------------------------------------

Morphism::Morphism(Module source, Module target, std::vector<Mat> components, bool check)
    : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(components)) {
  require_same_algebra(src_, tgt_);
  const std::size_t nv = src_.dims().size();
  if (comps_.size() != nv) throw ShapeError("morphism needs one component per vertex");
  for (std::size_t v = 0; v < nv; ++v) {
    if (comps_[v].rows() != tgt_.dim(v) || comps_[v].cols() != src_.dim(v)) {
      throw ShapeError("morphism component has the wrong shape");
    }
  }
  if (!check) return;
  const Quiver& q = src_.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (!(tgt_.action(a) * comps_[arrow.source] == comps_[arrow.target] * src_.action(a))) {
      throw ShapeError("morphism is not natural at arrow '" + arrow.name + "'");
    }
  }
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    comps.emplace_back(source.field(), target.dim(v), source.dim(v));
  }
  return Morphism(source, target, std::move(comps), false);
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Mat> comps;
  for (std::size_t d : m.dims()) comps.push_back(Mat::identity(m.field(), d));
  return Morphism(m, m, std::move(comps), false);
}

bool Morphism::is_zero() const noexcept {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& c : comps_) r += nexakt::rank(c);
  return r;
}

bool Morphism::is_mono() const { return rank() == src_.total_dim(); }
bool Morphism::is_epi() const { return rank() == tgt_.total_dim(); }
bool Morphism::is_iso() const { return is_mono() && is_epi(); }

Mat Morphism::flatten() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.entries().size();
  Mat out(field(), n, 1);
  std::size_t i = 0;
  for (const auto& c : comps_) {
    for (Residue e : c.entries()) out(i++, 0) = e;
  }
  return out;
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < comps_.size(); ++v) comps.push_back(comps_[v] + o.comps_.at(v));
  return Morphism(src_, tgt_, std::move(comps), false);
}

Morphism Morphism::operator-(const Morphism& o) const {
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < comps_.size(); ++v) comps.push_back(comps_[v] - o.comps_.at(v));
  return Morphism(src_, tgt_, std::move(comps), false);
}

Morphism Morphism::operator-() const {
  std::vector<Mat> comps;
  for (const auto& c : comps_) comps.push_back(-c);
  return Morphism(src_, tgt_, std::move(comps), false);
}

Morphism Morphism::scaled(Residue c) const {
  std::vector<Mat> comps;
  for (const auto& m : comps_) comps.push_back(m.scaled(c));
  return Morphism(src_, tgt_, std::move(comps), false);
}

bool Morphism::operator==(const Morphism& o) const {
  return src_ == o.src_ && tgt_ == o.tgt_ && comps_ == o.comps_;
}

Morphism then(const Morphism& f, const Morphism& g) {
  if (!(f.target().dims() == g.source().dims())) throw ShapeError("morphisms do not compose");
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) {
    comps.push_back(g.component(v) * f.component(v));
  }
  return Morphism(f.source(), g.target(), std::move(comps), false);
}

Morphism unflatten(const Module& source, const Module& target, const Mat& vec) {
  std::vector<Mat> comps;
  std::size_t i = 0;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    Mat c(source.field(), target.dim(v), source.dim(v));
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) c(r, k) = vec(i++, 0);
    comps.push_back(std::move(c));
  }
  if (i != vec.rows()) throw ShapeError("flattened vector has the wrong length");
  return Morphism(source, target, std::move(comps), false);
}

Morphism combine(const Module& source, const Module& target, const std::vector<Morphism>& basis,
                 const std::vector<Residue>& coeffs) {
  Morphism out = Morphism::zero(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs.at(i) != 0) out = out + basis[i].scaled(coeffs[i]);
  }
  return out;
}

// ----- Direct sums ----------------------------------------------------------

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Module>& summands) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& s : summands) {
    require_same_algebra(s, Module::zero(alg));
    for (std::size_t v = 0; v < nv; ++v) dims[v] += s.dim(v);
  }
  std::vector<Mat> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Mat m(f, dims[arrow.target], dims[arrow.source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& s : summands) {
      m.set_block(r0, c0, s.action(a));
      r0 += s.dim(arrow.target);
      c0 += s.dim(arrow.source);
    }
    action.push_back(std::move(m));
  }
  DirectSum out{Module(alg, dims, std::move(action)), summands, {}, {}};
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& s : summands) {
    std::vector<Mat> inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat i(f, dims[v], s.dim(v));
      Mat p(f, s.dim(v), dims[v]);
      for (std::size_t k = 0; k < s.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        p(k, offset[v] + k) = 1;
      }
      inc.push_back(std::move(i));
      proj.push_back(std::move(p));
      offset[v] += s.dim(v);
    }
    out.inclusions.emplace_back(s, out.object, std::move(inc), false);
    out.projections.emplace_back(out.object, s, std::move(proj), false);
  }
  return out;
}

Module direct_sum(const Module& a, const Module& b) {
  return direct_sum(a.algebra_ptr(), std::vector<Module>{a, b}).object;
}

Morphism block_morphism(const DirectSum& source, const DirectSum& target,
                        const std::vector<std::vector<std::optional<Morphism>>>& blocks) {
  Morphism out = Morphism::zero(source.object, target.object);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (!blocks[i][j]) continue;
      out = out + then(then(source.projections.at(j), *blocks[i][j]), target.inclusions.at(i));
    }
  }
  return out;
}

Morphism column_morphism(const DirectSum& target, const std::vector<Morphism>& maps) {
  if (maps.size() != target.summands.size()) throw ShapeError("column morphism arity mismatch");
  if (maps.empty()) throw ShapeError("column morphism needs at least one component");
  Morphism out = Morphism::zero(maps.front().source(), target.object);
  for (std::size_t i = 0; i < maps.size(); ++i) out = out + then(maps[i], target.inclusions[i]);
  return out;
}

Morphism row_morphism(const DirectSum& source, const std::vector<Morphism>& maps) {
  if (maps.size() != source.summands.size()) throw ShapeError("row morphism arity mismatch");
  if (maps.empty()) throw ShapeError("row morphism needs at least one component");
  Morphism out = Morphism::zero(source.object, maps.front().target());
  for (std::size_t i = 0; i < maps.size(); ++i) out = out + then(source.projections[i], maps[i]);
  return out;
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  const auto& alg = f.source().algebra_ptr();
  DirectSum s = direct_sum(alg, {f.source(), g.source()});
  DirectSum t = direct_sum(alg, {f.target(), g.target()});
  return block_morphism(s, t, {{f, std::nullopt}, {std::nullopt, g}});
}

Module simple_module(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.vertex_count()) throw LookupError("vertex index out of range");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> action;
  for (const auto& arrow : q.arrows()) action.emplace_back(alg->field(), dims[arrow.target], dims[arrow.source]);
  return Module(alg, std::move(dims), std::move(action));
}

// ----- Hom, kernels, cokernels ----------------------------------------------

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m, n);
  const Quiver& q = m.algebra().quiver();
  const Field& f = m.field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[nv];
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += n.dim(a.target) * m.dim(a.source);
  Mat sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrows()[ai];
    const Mat& na = n.action(ai);  // n_w x n_v
    const Mat& ma = m.action(ai);  // m_w x m_v
    const std::size_t v = a.source, w = a.target;
    // (N(a) C_v - C_w M(a))[i][j]
    for (std::size_t i = 0; i < n.dim(w); ++i) {
      for (std::size_t j = 0; j < m.dim(v); ++j, ++row) {
        for (std::size_t k = 0; k < n.dim(v); ++k) {
          std::size_t col = off[v] + k * m.dim(v) + j;
          sys(row, col) = f.add(sys(row, col), na(i, k));
        }
        for (std::size_t k = 0; k < m.dim(w); ++k) {
          std::size_t col = off[w] + i * m.dim(w) + k;
          sys(row, col) = f.sub(sys(row, col), ma(k, j));
        }
      }
    }
  }
  Mat ker = kernel_basis(sys);
  std::vector<Morphism> out;
  out.reserve(ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c) out.push_back(unflatten(m, n, ker.column(c)));
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

Mat flattened(const Field& f, const std::vector<Morphism>& maps, std::size_t ambient_dim) {
  Mat out(f, ambient_dim, maps.size());
  for (std::size_t c = 0; c < maps.size(); ++c) {
    Mat v = maps[c].flatten();
    if (v.rows() != ambient_dim) throw ShapeError("flattened morphism has unexpected size");
    for (std::size_t r = 0; r < ambient_dim; ++r) out(r, c) = v(r, 0);
  }
  return out;
}

KernelResult kernel_morphism(const Morphism& f) {
  const Module& m = f.source();
  const Quiver& q = m.algebra().quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Mat> basis(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    basis[v] = kernel_basis(f.component(v));
    if (basis[v].rows() != m.dim(v)) basis[v] = Mat(m.field(), m.dim(v), 0);
    dims[v] = basis[v].cols();
  }
  std::vector<Mat> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    auto x = solve_linear(basis[arrow.target], m.action(a) * basis[arrow.source]);
    if (!x) throw Error("kernel is not a submodule");
    action.push_back(std::move(*x));
  }
  Module k(m.algebra_ptr(), dims, std::move(action));
  return {k, Morphism(k, m, std::move(basis), false)};
}

CokernelResult cokernel_morphism(const Morphism& f) {
  const Module& n = f.target();
  const Quiver& q = n.algebra().quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Mat> proj(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    proj[v] = left_kernel_basis(f.component(v));
    if (proj[v].cols() != n.dim(v)) proj[v] = Mat(n.field(), 0, n.dim(v));
    dims[v] = proj[v].rows();
  }
  std::vector<Mat> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    // X Q_v = Q_w N(a)
    auto xt = solve_linear(proj[arrow.source].transpose(), (proj[arrow.target] * n.action(a)).transpose());
    if (!xt) throw Error("cokernel action is not well defined");
    action.push_back(xt->transpose());
  }
  Module c(n.algebra_ptr(), dims, std::move(action));
  return {c, Morphism(n, c, std::move(proj), false)};
}

std::optional<Morphism> factor_through_target(const Morphism& h, const Morphism& g) {
  auto basis = hom_basis(h.source(), g.source());
  std::vector<Morphism> comps;
  for (const auto& b : basis) comps.push_back(then(b, g));
  Mat a = flattened(h.field(), comps, h.flatten().rows());
  if (basis.empty()) {
    if (h.is_zero()) return Morphism::zero(h.source(), g.source());
    return std::nullopt;
  }
  auto x = solve_linear(a, h.flatten());
  if (!x) return std::nullopt;
  std::vector<Residue> coeffs(x->entries().begin(), x->entries().end());
  return combine(h.source(), g.source(), basis, coeffs);
}

std::optional<Morphism> factor_through_source(const Morphism& f, const Morphism& h) {
  auto basis = hom_basis(f.target(), h.target());
  std::vector<Morphism> comps;
  for (const auto& b : basis) comps.push_back(then(f, b));
  Mat a = flattened(h.field(), comps, h.flatten().rows());
  if (basis.empty()) {
    if (h.is_zero()) return Morphism::zero(f.target(), h.target());
    return std::nullopt;
  }
  auto x = solve_linear(a, h.flatten());
  if (!x) return std::nullopt;
  std::vector<Residue> coeffs(x->entries().begin(), x->entries().end());
  return combine(f.target(), h.target(), basis, coeffs);
}

}  // namespace nexakt
