#include "nexakt/error.hpp"
#include "nexakt/morphism_system.hpp"
#include "nexakt/nstruct.hpp"

namespace nexakt {

PushoutResult n_pushout(const ComplexSeq& x, const Morphism& f0, const AddCat& m) {
  if (x.size() < 2) throw ShapeError("n_pushout needs a complex with at least two terms");
  const int lo = x.lo();
  const std::size_t n = x.size() - 1;
  if (!(f0.source() == x.term(lo))) throw ShapeError("f0 must start at the lowest term of x");
  for (const auto& t : x.terms())
    if (!m.contains(t)) throw DomainError("n_pushout: a term of x is not in add M");
  if (!m.contains(f0.target())) throw DomainError("n_pushout: target of f0 is not in add M");

  const AlgebraPtr& alg = x.algebra_ptr();
  auto X = [&](std::size_t k) { return x.term(lo + static_cast<int>(k)); };
  auto dX = [&](std::size_t k) { return x.diff(lo + static_cast<int>(k)); };

  std::vector<Module> yt{f0.target()};
  std::vector<Morphism> dy;
  std::vector<Morphism> fc{f0};
  // dc is the cone differential X^k (+) Y^{k-1} -> X^{k+1} (+) Y^k; in degree 0 only X^0.
  DirectSum cur = direct_sum(alg, {X(1), yt[0]});
  Morphism dc = column_morphism(cur, {-dX(0), f0});
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    Morphism w = weak_cokernel(dc, m);
    fc.push_back(then(cur.inclusions[0], w));
    dy.push_back(then(cur.inclusions[1], w));
    yt.push_back(w.target());
    DirectSum nxt = direct_sum(alg, {X(k + 2), yt.back()});
    dc = block_morphism(cur, nxt, {{-dX(k + 1), std::nullopt}, {fc.back(), dy.back()}});
    cur = std::move(nxt);
  }
  CokernelResult c = cokernel_morphism(dc);
  fc.push_back(then(cur.inclusions[0], c.projection));
  dy.push_back(then(cur.inclusions[1], c.projection));
  yt.push_back(c.object);
  if (!m.contains(c.object)) {
    throw HypothesisError("n_pushout: the final cokernel is not in add M", lo + static_cast<int>(n));
  }

  PushoutResult out;
  out.y = ComplexSeq(lo, std::move(yt), std::move(dy));
  out.f = ComplexMorphism(x, out.y, std::move(fc));
  out.source_mono = x.diff(lo).is_mono();
  out.target_mono = out.y.diff(lo).is_mono();
  return out;
}

GoodPushoutResult good_n_pushout(const ComplexSeq& x, const Morphism& f0, const AddCat& m) {
  GoodPushoutResult out;
  out.plain = n_pushout(x, f0, m);
  const ComplexSeq& y = out.plain.y;
  const ComplexMorphism& f = out.plain.f;
  const int lo = x.lo();
  const int n = static_cast<int>(x.size()) - 1;
  const AlgebraPtr& alg = x.algebra_ptr();

  // X' = (+)_{k=2..n} i_{k-1}(X^k): degree j carries X^j when 2 <= j <= n and
  // X^{j+1} when 1 <= j <= n-1.
  auto has_same = [&](int j) { return j >= 2 && j <= n; };
  auto has_next = [&](int j) { return j >= 1 && j <= n - 1; };

  struct Slots {
    DirectSum full, pad;
    int same = -1, next = -1;  // summand indices in `full`; in `pad` they are shifted by one
  };
  std::vector<Slots> slots;
  for (int j = 0; j <= n; ++j) {
    Slots s;
    std::vector<Module> parts{y.term(lo + j)};
    if (has_same(j)) {
      s.same = static_cast<int>(parts.size());
      parts.push_back(x.term(lo + j));
    }
    if (has_next(j)) {
      s.next = static_cast<int>(parts.size());
      parts.push_back(x.term(lo + j + 1));
    }
    s.full = direct_sum(alg, parts);
    s.pad = direct_sum(alg, std::vector<Module>(parts.begin() + 1, parts.end()));
    slots.push_back(std::move(s));
  }

  std::vector<Morphism> dfull, dpad, fcomp;
  for (int j = 0; j < n; ++j) {
    const Slots& a = slots[static_cast<std::size_t>(j)];
    const Slots& b = slots[static_cast<std::size_t>(j + 1)];
    std::vector<std::vector<std::optional<Morphism>>> blocks(b.full.summands.size(),
                                                             std::vector<std::optional<Morphism>>(a.full.summands.size()));
    std::vector<std::vector<std::optional<Morphism>>> pblocks(b.pad.summands.size(),
                                                              std::vector<std::optional<Morphism>>(a.pad.summands.size()));
    blocks[0][0] = y.diff(lo + j);
    if (a.next >= 0) {
      Morphism id = Morphism::identity(x.term(lo + j + 1));
      blocks[static_cast<std::size_t>(b.same)][static_cast<std::size_t>(a.next)] = id;
      pblocks[static_cast<std::size_t>(b.same - 1)][static_cast<std::size_t>(a.next - 1)] = id;
    }
    dfull.push_back(block_morphism(a.full, b.full, blocks));
    dpad.push_back(block_morphism(a.pad, b.pad, pblocks));
  }
  for (int j = 0; j <= n; ++j) {
    const Slots& a = slots[static_cast<std::size_t>(j)];
    std::vector<Morphism> col{f.component(lo + j)};
    if (a.same >= 0) col.push_back(Morphism::identity(x.term(lo + j)));
    if (a.next >= 0) col.push_back(x.diff(lo + j));
    fcomp.push_back(column_morphism(a.full, col));
  }

  std::vector<Module> tfull, tpad;
  for (const auto& s : slots) {
    tfull.push_back(s.full.object);
    tpad.push_back(s.pad.object);
  }
  out.y = ComplexSeq(lo, std::move(tfull), std::move(dfull));
  out.padding = ComplexSeq(lo, std::move(tpad), std::move(dpad));
  out.f = ComplexMorphism(x, out.y, std::move(fcomp));
  for (int k = 2; k <= n; ++k) {
    const Morphism& fk = out.f.component(lo + k);
    out.split_mono.push_back(factor_through_source(fk, Morphism::identity(fk.source())).has_value());
  }
  return out;
}

PushoutFactorization pushout_factorization(const ComplexMorphism& f, const ComplexMorphism& g) {
  const ComplexSeq& x = f.source();
  const ComplexSeq& y = f.target();
  const ComplexSeq& z = g.target();
  if (!(g.source().lo() == x.lo() && g.source().hi() == x.hi() && z.lo() == y.lo() && z.hi() == y.hi())) {
    throw ShapeError("pushout_factorization needs morphisms out of the same complex");
  }
  const int lo = x.lo(), hi = x.hi();
  if (!(y.term(lo) == z.term(lo)) || !(f.component(lo) == g.component(lo))) {
    throw PreconditionError("pushout_factorization needs f and g to agree in the lowest degree");
  }
  const Field& fld = y.term(lo).field();
  const Residue minus_one = fld.neg(1);

  std::vector<Morphism> p{Morphism::identity(y.term(lo))};
  Homotopy h{lo, {Morphism::zero(x.term(lo + 1), z.term(lo))}};
  for (int k = lo; k < hi; ++k) {
    MorphismSystem sys(fld);
    std::size_t up = sys.add_unknown(y.term(k + 1), z.term(k + 1));
    std::size_t uh = sys.add_unknown(x.term(k + 2), z.term(k + 1));
    sys.add_equation({{up, 1, y.diff(k), std::nullopt}}, then(p.back(), z.diff(k)));
    sys.add_equation({{up, 1, f.component(k + 1), std::nullopt}, {uh, minus_one, x.diff(k + 1), std::nullopt}},
                     g.component(k + 1) + then(h.at(k + 1, x, z), z.diff(k)));
    auto sol = sys.solve();
    if (!sol) throw HypothesisError("pushout_factorization has no solution in degree " + std::to_string(k + 1), k + 1);
    p.push_back((*sol)[up]);
    if (k + 2 <= hi) h.comps.push_back((*sol)[uh]);
  }
  return {ComplexMorphism(y, z, std::move(p)), std::move(h)};
}

}  // namespace nexakt
