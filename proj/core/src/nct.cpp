#include <sstream>

#include "nexakt/error.hpp"
#include "nexakt/nstruct.hpp"

namespace nexakt {

namespace {

std::optional<std::size_t> find_iso(const std::vector<Module>& list, const Module& x) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].dims() == x.dims() && isomorphic(list[i], x)) return i;
  return std::nullopt;
}

std::size_t span_rank(const std::vector<Morphism>& maps, const Module& s, const Module& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) n += s.dim(v) * t.dim(v);
  return rank(flattened(s.field(), maps, n));
}

}  // namespace

std::string NctReport::verdict(std::size_t n) const {
  if (!pass()) return "not " + std::to_string(n) + "-CT";
  if (complete) return std::to_string(n) + "-CT";
  return std::to_string(n) + "-CT (relative to supplied list)";
}

ExtTable::ExtTable(const AlgebraPtr& alg, const std::vector<Module>& list, std::size_t max_k)
    : n_(list.size()), max_k_(max_k), data_(list.size() * list.size() * max_k, 0) {
  for (std::size_t i = 0; i < n_ && max_k_ > 0; ++i) {
    ExtCalculator calc(list[i], max_k_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 1; k <= max_k_; ++k) data_[(i * n_ + j) * max_k_ + (k - 1)] = calc.dim(list[j], k);
  }
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    proj_.push_back(find_iso(list, projective_module(alg, v)));
    inj_.push_back(find_iso(list, injective_module(alg, v)));
  }
  vertices_ = alg->quiver().vertices();
}

NctReport check_n_cluster_tilting_indices(const ExtTable& ext, const std::vector<std::size_t>& gens,
                                          std::size_t n, bool complete,
                                          const std::vector<std::string>& labels) {
  if (n == 0) throw PreconditionError("n-cluster tilting needs n >= 1");
  if (n - 1 > ext.max_k()) throw PreconditionError("Ext table too short for this n");
  auto name = [&](std::size_t i) { return i < labels.size() ? labels[i] : "L" + std::to_string(i); };
  std::vector<bool> member(ext.size(), false);
  for (std::size_t g : gens) member.at(g) = true;

  NctReport r;
  r.complete = complete;
  r.generating = r.cogenerating = r.rigid = r.maximal = true;
  for (std::size_t v = 0; v < ext.projective_index().size(); ++v) {
    const auto& pi = ext.projective_index()[v];
    if (!pi || !member[*pi]) {
      r.generating = false;
      r.witnesses.push_back("P_" + ext.vertex_names()[v] + " is not in add M");
    }
    const auto& ii = ext.injective_index()[v];
    if (!ii || !member[*ii]) {
      r.cogenerating = false;
      r.witnesses.push_back("I_" + ext.vertex_names()[v] + " is not in add M");
    }
  }
  for (std::size_t a : gens)
    for (std::size_t b : gens)
      for (std::size_t k = 1; k < n; ++k)
        if (std::size_t d = ext(a, b, k); d != 0) {
          r.rigid = false;
          r.witnesses.push_back("Ext^" + std::to_string(k) + "(" + name(a) + "," + name(b) + ") = " + std::to_string(d));
        }
  for (std::size_t x = 0; x < ext.size(); ++x) {
    bool left = true, right = true;
    for (std::size_t g : gens)
      for (std::size_t k = 1; k < n; ++k) {
        left = left && ext(x, g, k) == 0;
        right = right && ext(g, x, k) == 0;
      }
    if (left == member[x] && right == member[x]) continue;
    r.maximal = false;
    std::ostringstream w;
    w << name(x) << (member[x] ? " is in add M" : " is not in add M") << " but Ext(" << name(x)
      << ",M) " << (left ? "vanishes" : "does not vanish") << " and Ext(M," << name(x) << ") "
      << (right ? "vanishes" : "does not vanish");
    r.witnesses.push_back(w.str());
  }
  return r;
}

NctReport check_n_cluster_tilting(const AddCat& m, std::size_t n, const std::vector<Module>& indecs,
                                  bool complete, const std::vector<std::string>& labels) {
  if (n == 0) throw PreconditionError("n-cluster tilting needs n >= 1");
  for (std::size_t i = 0; i < indecs.size(); ++i) {
    require_same_algebra(indecs[i], indecs.front());
    if (!is_indecomposable(indecs[i])) {
      throw InputError("list entry " + std::to_string(i) + " is not indecomposable");
    }
  }
  std::vector<std::size_t> gens;
  for (std::size_t g = 0; g < m.size(); ++g) {
    auto i = find_iso(indecs, m.generators()[g]);
    if (!i) throw InputError("generator " + std::to_string(g) + " does not occur in the supplied list");
    gens.push_back(*i);
  }
  ExtTable table(m.algebra_ptr(), indecs, n - 1);
  return check_n_cluster_tilting_indices(table, gens, n, complete, labels);
}

std::size_t ext_via_approx_resolution(const Module& a, const Module& b, const AddCat& m, std::size_t k,
                                      std::size_t n) {
  if (k < 1 || k + 1 > n) throw PreconditionError("ext_via_approx_resolution needs 1 <= k <= n - 1");
  for (std::size_t g = 0; g < m.size(); ++g) {
    ExtCalculator calc(m.generators()[g], n - 1);
    for (std::size_t i = 1; i < n; ++i)
      if (calc.dim(b, i) != 0) {
        throw HypothesisError("Ext^" + std::to_string(i) + "(G" + std::to_string(g) + ", b) is nonzero",
                              static_cast<int>(i));
      }
  }
  // delta[s] : M_s -> M_{s-1} (delta[0] : M_0 -> a); M_s for s < n from right
  // approximations of the successive kernels, M_n the last kernel itself.
  std::vector<Morphism> delta;
  Morphism incl = Morphism::identity(a);
  for (std::size_t s = 0; s <= k + 1; ++s) {
    const Module& ks = incl.source();
    if (s == n) {
      delta.push_back(incl);
      break;
    }
    Morphism approx = minimal_right_approximation(ks, m);
    if (!approx.is_epi()) {
      throw HypothesisError("the add-M approximation in step " + std::to_string(s) + " is not onto",
                            static_cast<int>(s));
    }
    delta.push_back(then(approx, incl));
    incl = kernel_morphism(approx).inclusion;
  }
  const Module& mk = delta[k].source();
  auto basis = hom_basis(mk, b);
  std::vector<Morphism> out, in;
  for (const auto& u : basis) out.push_back(then(delta[k + 1], u));
  for (const auto& u : hom_basis(delta[k].target(), b)) in.push_back(then(delta[k], u));
  return basis.size() - span_rank(out, delta[k + 1].source(), b) - span_rank(in, mk, b);
}

StrongProjectivity strong_projectivity_check(const Module& p, const Morphism& f, const AddCat& m) {
  const AlgebraPtr& alg = p.algebra_ptr();
  std::vector<Module> proj;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) proj.push_back(projective_module(alg, v));
  if (!in_add(p, proj).member) throw PreconditionError("strong_projectivity_check needs a projective module");
  StrongProjectivity r;
  r.weak_cokernel = weak_cokernel(f, m);
  auto mid = hom_basis(p, f.target());
  r.hom_dim = mid.size();
  std::vector<Morphism> in, out;
  for (const auto& u : hom_basis(p, f.source())) in.push_back(then(u, f));
  for (const auto& u : mid) out.push_back(then(u, r.weak_cokernel));
  r.rank_in = span_rank(in, p, f.target());
  r.rank_out = span_rank(out, p, r.weak_cokernel.target());
  r.exact = r.hom_dim - r.rank_out == r.rank_in;
  return r;
}

}  // namespace nexakt
