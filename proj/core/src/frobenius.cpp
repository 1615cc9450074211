#include "nexakt/frobenius.hpp"

#include "nexakt/error.hpp"
#include "nexakt/morphism_system.hpp"

namespace nexakt {

namespace {

std::size_t ambient(const Module& s, const Module& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) n += s.dim(v) * t.dim(v);
  return n;
}

std::size_t span_rank(const std::vector<Morphism>& maps, const Module& s, const Module& t) {
  return rank(flattened(s.field(), maps, ambient(s, t)));
}

// rank of span(maps) + span(ideal) minus rank of span(ideal).
std::size_t rank_mod(std::vector<Morphism> maps, const std::vector<Morphism>& ideal, const Module& s,
                     const Module& t) {
  const std::size_t ri = span_rank(ideal, s, t);
  maps.insert(maps.end(), ideal.begin(), ideal.end());
  return span_rank(maps, s, t) - ri;
}

Residue sign(const Field& f, std::size_t n) { return n % 2 == 0 ? 1 : f.neg(1); }

}  // namespace

FrobeniusCtx::FrobeniusCtx(AddCat m, std::size_t n, std::vector<Module> injectives)
    : m_(std::move(m)), n_(n), inj_(std::move(injectives)) {}

ComplexSeq FrobeniusCtx::coresolution(const Module& x) const {
  InjectiveCoresolution c = min_injective_coresolution(x, n_);
  std::vector<Morphism> diffs{c.coaugmentation};
  diffs.insert(diffs.end(), c.complex.diffs().begin(), c.complex.diffs().end());
  diffs.push_back(c.cosyzygy_projection);
  return ComplexSeq::from_maps(0, diffs);
}

Module FrobeniusCtx::suspension(const Module& x) const {
  return min_injective_coresolution(x, n_).cosyzygy_projection.target();
}

Module cosyzygy(const FrobeniusCtx& ctx, const Module& x, std::size_t k) {
  (void)ctx;
  if (k == 0) return x;
  return min_injective_coresolution(x, k).cosyzygy_projection.target();
}

FrobeniusCtx check_frobenius_setup(const AddCat& m, std::size_t n, const std::vector<Module>& indecs,
                                   bool complete) {
  const AlgebraPtr& alg = m.algebra_ptr();
  std::vector<Module> proj, inj;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    proj.push_back(projective_module(alg, v));
    inj.push_back(injective_module(alg, v));
  }
  for (std::size_t v = 0; v < inj.size(); ++v) {
    bool found = false;
    for (const auto& p : proj) found = found || isomorphic(inj[v], p);
    if (!found) {
      throw SetupError("the algebra is not selfinjective: I_" + alg->quiver().vertices()[v] +
                       " is not projective");
    }
  }
  NctReport rep = check_n_cluster_tilting(m, n, indecs, complete);
  if (!rep.pass()) {
    std::string msg = "M is not " + std::to_string(n) + "-cluster tilting";
    if (!rep.witnesses.empty()) msg += ": " + rep.witnesses.front();
    throw SetupError(msg);
  }
  for (std::size_t g = 0; g < m.size(); ++g) {
    const Module& gen = m.generators()[g];
    if (!m.contains(cosyzygy(FrobeniusCtx(m, n, inj), gen, n))) {
      throw SetupError("the n-th cosyzygy of generator " + std::to_string(g) + " is not in add M");
    }
    if (!m.contains(min_projective_resolution(gen, n).syzygy_inclusion.source())) {
      throw SetupError("the n-th syzygy of generator " + std::to_string(g) + " is not in add M");
    }
  }
  return FrobeniusCtx(m, n, std::move(inj));
}

StableHom stable_hom(const FrobeniusCtx& ctx, const Module& a, const Module& b) {
  StableHom out;
  out.hom = hom_basis(a, b);
  if (out.hom.empty()) return out;
  std::vector<Morphism> through;
  for (const auto& i : ctx.injectives()) {
    auto to = hom_basis(a, i);
    if (to.empty()) continue;
    auto from = hom_basis(i, b);
    for (const auto& u : to)
      for (const auto& w : from) through.push_back(then(u, w));
  }
  const std::size_t amb = ambient(a, b);
  if (!through.empty()) {
    Mat basis = column_space_basis(flattened(a.field(), through, amb));
    for (std::size_t c = 0; c < basis.cols(); ++c) out.ideal.push_back(unflatten(a, b, basis.column(c)));
  }
  for (std::size_t k : complement_columns(flattened(a.field(), out.ideal, amb),
                                          flattened(a.field(), out.hom, amb))) {
    out.representatives.push_back(out.hom[k]);
  }
  out.dim = out.representatives.size();
  return out;
}

bool stably_zero(const FrobeniusCtx& ctx, const Morphism& f) {
  if (f.is_zero()) return true;
  StableHom s = stable_hom(ctx, f.source(), f.target());
  return in_column_space(flattened(f.field(), s.ideal, ambient(f.source(), f.target())), f.flatten());
}

Module strip_projective_injective(const FrobeniusCtx& ctx, const Module& x) {
  Decomposition d = decompose(x, ctx.m().seed());
  std::vector<Module> keep;
  for (const auto& part : d.parts) {
    bool pi = false;
    for (const auto& i : ctx.injectives()) pi = pi || isomorphic(part, i);
    if (!pi) keep.push_back(part);
  }
  return direct_sum(x.algebra_ptr(), keep).object;
}

bool stably_isomorphic(const FrobeniusCtx& ctx, const Module& x, const Module& y) {
  return isomorphic(strip_projective_injective(ctx, x), strip_projective_injective(ctx, y));
}

std::vector<Morphism> lift_to_coresolution(const ComplexSeq& x, const ComplexSeq& y, const Morphism& f0) {
  if (x.lo() != y.lo() || x.hi() != y.hi()) throw ShapeError("lifting needs complexes on the same degrees");
  std::vector<Morphism> comps{f0};
  for (int k = x.lo(); k < x.hi(); ++k) {
    auto next = factor_through_source(x.diff(k), then(comps.back(), y.diff(k)));
    if (!next) throw HypothesisError("lifting to the coresolution failed", k + 1);
    comps.push_back(*next);
  }
  return comps;
}

Morphism suspend(const Morphism& f, const ComplexSeq& source_cores, const ComplexSeq& target_cores) {
  return lift_to_coresolution(source_cores, target_cores, f).back();
}

Morphism suspend(const FrobeniusCtx& ctx, const Morphism& f) {
  return suspend(f, ctx.coresolution(f.source()), ctx.coresolution(f.target()));
}

Angle standard_angle(const FrobeniusCtx& ctx, const Morphism& alpha0) {
  const std::size_t n = ctx.n();
  ComplexSeq cores = ctx.coresolution(alpha0.source());
  std::vector<Module> terms(cores.terms().begin(), cores.terms().begin() + static_cast<long>(n) + 1);
  std::vector<Morphism> diffs(cores.diffs().begin(), cores.diffs().begin() + static_cast<long>(n));
  ComplexSeq trunc(0, std::move(terms), std::move(diffs), false);
  PushoutResult po = n_pushout(trunc, alpha0, ctx.m());

  // The map Y^n -> SX^0 induced by the cokernel of the cone.
  const int top = static_cast<int>(n);
  MorphismSystem sys(alpha0.field());
  std::size_t u = sys.add_unknown(po.y.term(top), cores.term(top + 1));
  sys.add_equation({{u, 1, po.f.component(top), std::nullopt}}, cores.diff(top));
  sys.add_equation({{u, 1, po.y.diff(top - 1), std::nullopt}},
                   Morphism::zero(po.y.term(top - 1), cores.term(top + 1)));
  auto sol = sys.solve();
  if (!sol) throw HypothesisError("standard_angle: no map to the suspension", top + 1);

  Angle a;
  a.objects.push_back(alpha0.source());
  a.maps.push_back(alpha0);
  for (int k = 0; k <= top; ++k) a.objects.push_back(po.y.term(k));
  for (int k = 0; k < top; ++k) a.maps.push_back(po.y.diff(k));
  a.closing = (*sol)[u];
  a.first_coresolution = std::move(cores);
  return a;
}

Angle trivial_angle(const FrobeniusCtx& ctx, const Module& x) {
  Angle a;
  Module zero = Module::zero(x.algebra_ptr());
  a.objects = {x, x};
  a.maps = {Morphism::identity(x)};
  for (std::size_t k = 0; k < ctx.n(); ++k) {
    a.maps.push_back(Morphism::zero(a.objects.back(), zero));
    a.objects.push_back(zero);
  }
  a.first_coresolution = ctx.coresolution(x);
  a.closing = Morphism::zero(zero, a.sigma_first());
  return a;
}

Angle induced_angle(const FrobeniusCtx& ctx, const ComplexSeq& x) {
  if (x.size() != ctx.n() + 2) throw ShapeError("induced_angle needs an n-exact sequence with n + 2 terms");
  ComplexSeq cores = ctx.coresolution(x.term(x.lo()));
  ComplexSeq shifted(0, x.terms(), x.diffs(), false);
  auto f = lift_to_coresolution(shifted, cores, Morphism::identity(x.term(x.lo())));
  Angle a;
  a.objects = x.terms();
  a.maps = x.diffs();
  a.closing = f.back().scaled(sign(x.term(x.lo()).field(), ctx.n()));
  a.first_coresolution = std::move(cores);
  return a;
}

Angle rotate_angle(const FrobeniusCtx& ctx, const Angle& a) {
  const std::size_t n = a.n();
  Angle r;
  r.objects.assign(a.objects.begin() + 1, a.objects.end());
  r.objects.push_back(a.sigma_first());
  r.maps.assign(a.maps.begin() + 1, a.maps.end());
  r.maps.push_back(a.closing);
  r.first_coresolution = ctx.coresolution(a.objects[1]);
  r.closing = suspend(a.maps[0], a.first_coresolution, r.first_coresolution).scaled(sign(a.closing.field(), n));
  return r;
}

AngleCheck verify_angle_exact(const FrobeniusCtx& ctx, const Angle& a) {
  const std::size_t n = a.n();
  AngleCheck out;
  ComplexSeq second = ctx.coresolution(a.objects[1]);
  Morphism shifted = suspend(a.maps[0], a.first_coresolution, second).scaled(sign(a.closing.field(), n));

  std::vector<Module> w = a.objects;
  w.push_back(a.sigma_first());
  w.push_back(second.term(second.hi()));
  std::vector<Morphism> maps = a.maps;
  maps.push_back(a.closing);
  maps.push_back(shifted);

  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!stably_zero(ctx, then(maps[k], maps[k + 1]))) out.composites_vanish = false;

  for (std::size_t gi = 0; gi < ctx.m().size(); ++gi) {
    const Module& g = ctx.m().generators()[gi];
    std::vector<StableHom> sh;
    for (const auto& obj : w) sh.push_back(stable_hom(ctx, g, obj));
    for (std::size_t p = 1; p + 1 < w.size(); ++p) {
      const StableHom& here = sh[p];
      const std::size_t h = here.hom.size();
      const std::size_t ip = here.ideal.size();
      std::vector<Morphism> in, out_maps;
      for (const auto& u : sh[p - 1].hom) in.push_back(then(u, maps[p - 1]));
      for (const auto& u : here.hom) out_maps.push_back(then(u, maps[p]));
      const std::size_t im = rank_mod(in, here.ideal, g, w[p]);
      const std::size_t rank_out = rank_mod(out_maps, sh[p + 1].ideal, g, w[p + 1]);
      ExactnessRecord rec;
      rec.generator = gi;
      rec.covariant = true;
      rec.degree = static_cast<int>(p);
      rec.hom_dim = h - ip;
      rec.rank_in = im;
      rec.rank_out = rank_out;
      rec.exact = h - rank_out - ip == im;
      out.exact = out.exact && rec.exact;
      out.records.push_back(rec);
    }
  }
  return out;
}

AngleMorphism complete_angle_morphism(const FrobeniusCtx& ctx, const Angle& a, const Angle& b,
                                      const Morphism& phi0, const Morphism& phi1) {
  const std::size_t n = a.n();
  if (b.n() != n) throw ShapeError("angles of different lengths");
  if (!stably_zero(ctx, then(a.maps[0], phi1) - then(phi0, b.maps[0]))) {
    throw PreconditionError("the first square does not commute in the stable category");
  }
  Morphism sphi0 = suspend(phi0, a.first_coresolution, b.first_coresolution);
  auto ideal = [&](const Module& s, const Module& t) { return stable_hom(ctx, s, t).ideal; };
  const Residue minus_one = phi0.field().neg(1);

  MorphismSystem sys(phi0.field());
  std::vector<std::size_t> u;  // u[k - 2] is phi^k
  for (std::size_t k = 2; k <= n + 1; ++k) u.push_back(sys.add_unknown(a.objects[k], b.objects[k]));
  for (std::size_t k = 1; k <= n; ++k) {
    const Module& s = a.objects[k];
    const Module& t = b.objects[k + 1];
    std::size_t eq;
    if (k == 1) {
      eq = sys.add_equation({{u[0], 1, a.maps[1], std::nullopt}}, then(phi1, b.maps[1]));
    } else {
      eq = sys.add_equation({{u[k - 1], 1, a.maps[k], std::nullopt}, {u[k - 2], minus_one, std::nullopt, b.maps[k]}},
                            Morphism::zero(s, t));
    }
    sys.add_slack(eq, ideal(s, t));
  }
  std::size_t last = sys.add_equation({{u[n - 1], 1, std::nullopt, b.closing}}, then(a.closing, sphi0));
  sys.add_slack(last, ideal(a.objects[n + 1], b.sigma_first()));
  auto sol = sys.solve();
  if (!sol) throw HypothesisError("complete_angle_morphism: no stable completion", static_cast<int>(n) + 1);

  AngleMorphism out{a, b, {phi0, phi1}, sphi0};
  for (std::size_t k = 0; k < u.size(); ++k) out.comps.push_back((*sol)[u[k]]);
  return out;
}

bool verify_angle_morphism(const FrobeniusCtx& ctx, const AngleMorphism& phi) {
  const Angle& a = phi.source;
  const Angle& b = phi.target;
  for (std::size_t k = 0; k <= a.n(); ++k) {
    if (!stably_zero(ctx, then(a.maps[k], phi.comps[k + 1]) - then(phi.comps[k], b.maps[k]))) return false;
  }
  return stably_zero(ctx, then(a.closing, phi.sigma_phi0) - then(phi.comps.back(), b.closing));
}

Angle angle_cone(const FrobeniusCtx& ctx, const AngleMorphism& phi) {
  const Angle& a = phi.source;
  const Angle& b = phi.target;
  const std::size_t n = a.n();
  const AlgebraPtr& alg = ctx.algebra_ptr();

  ComplexSeq second = ctx.coresolution(a.objects[1]);
  Morphism salpha0 = suspend(a.maps[0], a.first_coresolution, second);
  // alpha^{k} for k = 1..n+2 and phi^k for k = 1..n+2, with the shifted conventions.
  auto alpha = [&](std::size_t k) { return k <= n ? a.maps[k] : (k == n + 1 ? a.closing : salpha0); };
  auto phik = [&](std::size_t k) { return k <= n + 1 ? phi.comps[k] : phi.sigma_phi0; };
  auto xobj = [&](std::size_t k) { return k <= n + 1 ? a.objects[k] : a.sigma_first(); };

  std::vector<DirectSum> c;
  for (std::size_t k = 0; k <= n + 1; ++k) c.push_back(direct_sum(alg, {xobj(k + 1), b.objects[k]}));
  Angle out;
  for (const auto& s : c) out.objects.push_back(s.object);
  for (std::size_t k = 0; k <= n; ++k) {
    out.maps.push_back(block_morphism(c[k], c[k + 1], {{-alpha(k + 1), std::nullopt}, {phik(k + 1), b.maps[k]}}));
  }
  out.first_coresolution = direct_sum(second, b.first_coresolution);
  DirectSum sigma_c0 = direct_sum(alg, {second.term(second.hi()), b.sigma_first()});
  if (!(sigma_c0.object == out.sigma_first())) throw Error("angle_cone: suspension of the first cone term mismatch");
  out.closing = block_morphism(c[n + 1], sigma_c0, {{-salpha0, std::nullopt}, {phi.sigma_phi0, b.closing}});
  return out;
}

}  // namespace nexakt
