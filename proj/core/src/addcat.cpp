#include "nexakt/error.hpp"
#include "nexakt/nstruct.hpp"

namespace nexakt {

namespace {

std::size_t ambient(const Module& s, const Module& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) n += s.dim(v) * t.dim(v);
  return n;
}

Mat flat(const std::vector<Morphism>& maps, const Module& s, const Module& t) {
  return flattened(s.field(), maps, ambient(s, t));
}

// Indices of `hom` that complement the span of `rad` inside span(hom).
std::vector<std::size_t> top_part(const std::vector<Morphism>& hom, const std::vector<Morphism>& rad,
                                  const Module& s, const Module& t) {
  return complement_columns(flat(rad, s, t), flat(hom, s, t));
}

}  // namespace

AddCat::AddCat(AlgebraPtr alg, std::vector<Module> generators, std::uint64_t seed)
    : alg_(std::move(alg)), gens_(std::move(generators)), seed_(seed) {
  const std::size_t r = gens_.size();
  std::vector<LocalityResult> loc;
  for (std::size_t i = 0; i < r; ++i) {
    if (gens_[i].algebra_ptr() != alg_ && !same_algebra(*gens_[i].algebra_ptr(), *alg_)) {
      throw ContextError("generator " + std::to_string(i) + " lives over another algebra");
    }
    if (gens_[i].is_zero()) throw InputError("generator " + std::to_string(i) + " is zero");
    loc.push_back(endomorphism_locality(gens_[i]));
    if (!loc.back().local) throw InputError("generator " + std::to_string(i) + " is decomposable");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (isomorphic(gens_[i], gens_[j], seed_)) {
        throw InputError("generators " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic");
      }
  hom_.resize(r * r);
  rad_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      hom_[i * r + j] = hom_basis(gens_[i], gens_[j]);
      rad_[i * r + j] = i == j ? loc[i].radical : hom_[i * r + j];
    }
  has_projectives_ = has_injectives_ = true;
  for (std::size_t v = 0; v < alg_->vertex_count(); ++v) {
    if (has_projectives_ && !contains(projective_module(alg_, v))) has_projectives_ = false;
    if (has_injectives_ && !contains(injective_module(alg_, v))) has_injectives_ = false;
  }
}

Morphism minimal_left_approximation(const Module& x, const AddCat& m) {
  const std::size_t r = m.size();
  std::vector<std::vector<Morphism>> to(r);
  for (std::size_t i = 0; i < r; ++i) {
    require_same_algebra(x, m.generators()[i]);
    to[i] = hom_basis(x, m.generators()[i]);
  }
  std::vector<Module> targets;
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < r; ++i) {
    const Module& gi = m.generators()[i];
    if (to[i].empty()) continue;
    // Maps x -> G_i that factor through a radical map G_j -> G_i are superfluous.
    std::vector<Morphism> rad;
    for (std::size_t j = 0; j < r; ++j)
      for (const auto& f : to[j])
        for (const auto& g : m.radical(j, i)) rad.push_back(then(f, g));
    for (std::size_t k : top_part(to[i], rad, x, gi)) {
      targets.push_back(gi);
      maps.push_back(to[i][k]);
    }
  }
  Morphism out = maps.empty() ? Morphism::zero(x, Module::zero(x.algebra_ptr()))
                              : column_morphism(direct_sum(x.algebra_ptr(), targets), maps);
  if (!is_left_approximation(out, m)) throw Error("left approximation failed its surjectivity check");
  return out;
}

Morphism minimal_right_approximation(const Module& x, const AddCat& m) {
  const std::size_t r = m.size();
  std::vector<std::vector<Morphism>> from(r);
  for (std::size_t i = 0; i < r; ++i) {
    require_same_algebra(m.generators()[i], x);
    from[i] = hom_basis(m.generators()[i], x);
  }
  std::vector<Module> sources;
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < r; ++i) {
    const Module& gi = m.generators()[i];
    if (from[i].empty()) continue;
    std::vector<Morphism> rad;
    for (std::size_t j = 0; j < r; ++j)
      for (const auto& g : m.radical(i, j))
        for (const auto& f : from[j]) rad.push_back(then(g, f));
    for (std::size_t k : top_part(from[i], rad, gi, x)) {
      sources.push_back(gi);
      maps.push_back(from[i][k]);
    }
  }
  Morphism out = maps.empty() ? Morphism::zero(Module::zero(x.algebra_ptr()), x)
                              : row_morphism(direct_sum(x.algebra_ptr(), sources), maps);
  if (!is_right_approximation(out, m)) throw Error("right approximation failed its surjectivity check");
  return out;
}

bool is_left_approximation(const Morphism& f, const AddCat& m) {
  for (const auto& g : m.generators()) {
    auto hx = hom_basis(f.source(), g);
    if (hx.empty()) continue;
    std::vector<Morphism> img;
    for (const auto& u : hom_basis(f.target(), g)) img.push_back(then(f, u));
    if (rank(flat(img, f.source(), g)) != hx.size()) return false;
  }
  return true;
}

bool is_right_approximation(const Morphism& f, const AddCat& m) {
  for (const auto& g : m.generators()) {
    auto hx = hom_basis(g, f.target());
    if (hx.empty()) continue;
    std::vector<Morphism> img;
    for (const auto& u : hom_basis(g, f.source())) img.push_back(then(u, f));
    if (rank(flat(img, g, f.target())) != hx.size()) return false;
  }
  return true;
}

Morphism weak_cokernel(const Morphism& f, const AddCat& m) {
  if (!m.contains(f.source())) throw DomainError("weak_cokernel: source is not in add M");
  if (!m.contains(f.target())) throw DomainError("weak_cokernel: target is not in add M");
  CokernelResult c = cokernel_morphism(f);
  return then(c.projection, minimal_left_approximation(c.object, m));
}

Morphism weak_kernel(const Morphism& f, const AddCat& m) {
  if (!m.contains(f.source())) throw DomainError("weak_kernel: source is not in add M");
  if (!m.contains(f.target())) throw DomainError("weak_kernel: target is not in add M");
  KernelResult k = kernel_morphism(f);
  return then(minimal_right_approximation(k.object, m), k.inclusion);
}

}  // namespace nexakt
