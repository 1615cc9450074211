#include <deque>
#include <random>

#include "nexakt/error.hpp"
#include "nexakt/modcat.hpp"

namespace nexakt {

namespace {

// Submodule with the given per-vertex column bases (assumed stable under the action).
KernelResult submodule(const Module& m, std::vector<Mat> basis) {
  const Quiver& q = m.algebra().quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : basis) dims.push_back(b.cols());
  std::vector<Mat> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    auto x = solve_linear(basis[arrow.target], m.action(a) * basis[arrow.source]);
    if (!x) throw Error("subspace is not a submodule");
    action.push_back(std::move(*x));
  }
  Module s(m.algebra_ptr(), dims, std::move(action));
  return {s, Morphism(s, m, std::move(basis), false)};
}

Morphism random_combination(const Module& s, const Module& t, const std::vector<Morphism>& basis,
                            std::mt19937_64& rng) {
  const std::uint32_t p = s.field().p();
  std::vector<Residue> c(basis.size());
  for (auto& e : c) e = static_cast<Residue>(rng() % p);
  return combine(s, t, basis, c);
}

using Poly = std::vector<Residue>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const Field& f) {
  trim(a);
  const Residue lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    Residue c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return poly_mod(std::move(r), m, f);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, const Field& f) {
  Poly result = poly_mod({1}, m, f);
  base = poly_mod(std::move(base), m, f);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, f);
    base = poly_mulmod(base, base, m, f);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Residue inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, const Field& f) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// One root in F_p of a nonzero polynomial, if any (Cantor-Zassenhaus splitting).
std::optional<Residue> find_root(const Poly& q, const Field& f, std::mt19937_64& rng) {
  const std::uint32_t p = f.p();
  if (q.size() <= 1) return std::nullopt;
  if (p == 2) {
    for (Residue x = 0; x < 2; ++x) {
      Residue acc = 0;
      for (std::size_t i = q.size(); i-- > 0;) acc = f.add(f.mul(acc, x), q[i]);
      if (acc == 0) return x;
    }
    return std::nullopt;
  }
  Poly g = poly_gcd(q, poly_sub(poly_powmod({0, 1}, p, q, f), {0, 1}, f), f);
  while (g.size() > 2) {
    Residue a = static_cast<Residue>(rng() % p);
    Poly h = poly_powmod({a, 1}, (p - 1) / 2, g, f);
    h = poly_gcd(g, poly_sub(h, {1}, f), f);
    if (h.size() > 1 && h.size() < g.size()) g = std::move(h);
  }
  if (g.size() != 2) return std::nullopt;
  return f.neg(g[0]);  // g = x + g0
}

// Minimal polynomial of m restricted to the Krylov space of u.
Poly krylov_polynomial(const Mat& m, const Mat& u) {
  const Field& f = m.field();
  std::vector<Mat> vecs{u};
  while (true) {
    Mat basis = hstack(f, u.rows(), vecs);
    Mat next = m * vecs.back();
    auto sol = solve_linear(basis, next);
    if (sol) {
      Poly q(vecs.size() + 1, 0);
      for (std::size_t i = 0; i < vecs.size(); ++i) q[i] = f.neg((*sol)(i, 0));
      q.back() = 1;
      return q;
    }
    vecs.push_back(std::move(next));
  }
}

// An eigenvalue in F_p of the endomorphism at its first nonzero vertex.
std::optional<Residue> some_eigenvalue(const Morphism& e, std::mt19937_64& rng) {
  const Module& x = e.source();
  const Field& f = x.field();
  for (std::size_t v = 0; v < x.dims().size(); ++v) {
    if (x.dim(v) == 0) continue;
    for (std::size_t attempt = 0; attempt < 4; ++attempt) {
      Mat u(f, x.dim(v), 1);
      bool nonzero = false;
      for (std::size_t i = 0; i < u.rows(); ++i) {
        u(i, 0) = static_cast<Residue>(rng() % f.p());
        nonzero = nonzero || u(i, 0) != 0;
      }
      if (!nonzero) continue;
      auto r = find_root(krylov_polynomial(e.component(v), u), f, rng);
      if (r) return r;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

struct Piece {
  Module module;
  Morphism incl;
  Morphism proj;
};

bool is_nilpotent(const Mat& m) {
  if (m.rows() == 0) return true;
  return power(m, m.rows()).is_zero();
}

bool nilpotent_morphism(const Morphism& f) {
  for (const auto& c : f.components())
    if (!is_nilpotent(c)) return false;
  return true;
}

std::optional<Residue> unique_eigenvalue(const Morphism& b) {
  const Field& f = b.field();
  const Module& x = b.source();
  std::size_t v0 = 0;
  while (v0 < x.dims().size() && x.dim(v0) == 0) ++v0;
  if (v0 == x.dims().size()) return std::nullopt;
  const Mat& c = b.component(v0);
  const std::size_t d = x.dim(v0);
  auto works = [&](Residue lam) {
    Morphism shifted = b - Morphism::identity(x).scaled(lam);
    return nilpotent_morphism(shifted);
  };
  if (d % f.p() != 0) {
    Residue tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = f.add(tr, c(i, i));
    Residue lam = f.mul(tr, f.inv(f.reduce(static_cast<std::int64_t>(d))));
    if (works(lam)) return lam;
    return std::nullopt;
  }
  // p divides d: the only candidate is a root of the Krylov polynomial.
  std::mt19937_64 rng(d);
  Mat u(f, d, 1);
  u(0, 0) = 1;
  auto lam = find_root(krylov_polynomial(c, u), f, rng);
  if (lam && works(*lam)) return lam;
  return std::nullopt;
}

}  // namespace

LocalityResult endomorphism_locality(const Module& x) {
  LocalityResult out;
  if (x.is_zero()) return out;
  const Field& f = x.field();
  auto basis = hom_basis(x, x);
  std::vector<Morphism> nil;
  for (const auto& b : basis) {
    auto lam = unique_eigenvalue(b);
    if (!lam) return out;
    Morphism n = b - Morphism::identity(x).scaled(*lam);
    if (!n.is_zero()) nil.push_back(std::move(n));
  }
  const std::size_t ambient = Morphism::identity(x).flatten().rows();
  Mat span = column_space_basis(flattened(f, nil, ambient));
  std::vector<Morphism> rad;
  for (std::size_t c = 0; c < span.cols(); ++c) rad.push_back(unflatten(x, x, span.column(c)));
  // Closed under products and nilpotent as an ideal.
  std::vector<Morphism> layer = rad;
  for (std::size_t step = 0; step <= rad.size() + 1 && !layer.empty(); ++step) {
    std::vector<Morphism> prods;
    for (const auto& a : layer) {
      for (const auto& b : rad) {
        Morphism ab = then(a, b);
        if (step == 0 && !in_column_space(span, ab.flatten())) return out;
        prods.push_back(std::move(ab));
      }
    }
    Mat next = column_space_basis(flattened(f, prods, ambient));
    if (next.cols() >= layer.size()) return out;
    layer.clear();
    for (std::size_t c = 0; c < next.cols(); ++c) layer.push_back(unflatten(x, x, next.column(c)));
  }
  if (!layer.empty()) return out;
  out.local = true;
  out.radical = std::move(rad);
  return out;
}

bool is_indecomposable(const Module& x) { return endomorphism_locality(x).local; }

Decomposition decompose(const Module& x, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Decomposition out;
  std::deque<Piece> work;
  work.push_back({x, Morphism::identity(x), Morphism::identity(x)});
  while (!work.empty()) {
    Piece piece = std::move(work.front());
    work.pop_front();
    const Module& m = piece.module;
    if (m.is_zero()) continue;
    if (is_indecomposable(m)) {
      out.parts.push_back(m);
      out.inclusions.push_back(piece.incl);
      out.projections.push_back(piece.proj);
      continue;
    }
    auto end = hom_basis(m, m);
    const Field& f = m.field();
    const std::size_t d = m.total_dim();
    bool split = false;
    for (std::size_t attempt = 0; attempt < kRetryBound && !split; ++attempt) {
      Morphism e = random_combination(m, m, end, rng);
      auto lam = some_eigenvalue(e, rng);
      if (!lam) continue;
      e = e - Morphism::identity(m).scaled(*lam);
      std::vector<Mat> kb, ib;
      std::size_t kdim = 0;
      for (std::size_t v = 0; v < m.dims().size(); ++v) {
        Mat ed = power(e.component(v), d);
        Mat k = kernel_basis(ed);
        if (k.rows() != m.dim(v)) k = Mat(f, m.dim(v), 0);
        Mat i = column_space_basis(ed);
        if (i.rows() != m.dim(v)) i = Mat(f, m.dim(v), 0);
        kdim += k.cols();
        kb.push_back(std::move(k));
        ib.push_back(std::move(i));
      }
      if (kdim == 0 || kdim == d) continue;
      split = true;
      std::vector<Mat> kproj, iproj;
      for (std::size_t v = 0; v < m.dims().size(); ++v) {
        Mat both = hstack(f, m.dim(v), std::vector<Mat>{kb[v], ib[v]});
        auto inv = solve_linear(both, Mat::identity(f, m.dim(v)));
        if (!inv) throw Error("Fitting splitting produced a singular change of basis");
        kproj.push_back(inv->block(0, 0, kb[v].cols(), m.dim(v)));
        iproj.push_back(inv->block(kb[v].cols(), 0, ib[v].cols(), m.dim(v)));
      }
      KernelResult ks = submodule(m, kb);
      KernelResult is = submodule(m, ib);
      Morphism kp(m, ks.object, std::move(kproj), false);
      Morphism ip(m, is.object, std::move(iproj), false);
      work.push_back({ks.object, then(ks.inclusion, piece.incl), then(piece.proj, kp)});
      work.push_back({is.object, then(is.inclusion, piece.incl), then(piece.proj, ip)});
    }
    if (!split) {
      out.parts.push_back(m);
      out.inclusions.push_back(piece.incl);
      out.projections.push_back(piece.proj);
      out.proven = false;
    }
  }
  return out;
}

std::vector<Summand> split_indecomposables(const Module& x, std::uint64_t seed) {
  Decomposition d = decompose(x, seed);
  std::vector<Summand> out;
  for (const auto& part : d.parts) {
    bool found = false;
    for (auto& s : out) {
      if (isomorphic(s.module, part, seed)) {
        ++s.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({part, 1});
  }
  return out;
}

namespace {

// Deterministic test for two modules with local endomorphism rings.
std::optional<bool> local_isomorphic(const Module& m, const Module& n) {
  auto lm = endomorphism_locality(m);
  if (!lm.local) return std::nullopt;
  auto fwd = hom_basis(m, n);
  auto back = hom_basis(n, m);
  const std::size_t ambient = Morphism::identity(m).flatten().rows();
  Mat rad = flattened(m.field(), lm.radical, ambient);
  for (const auto& f : fwd) {
    for (const auto& g : back) {
      if (!in_column_space(rad, then(f, g).flatten())) return f.is_iso();
    }
  }
  return false;
}

}  // namespace

IsoResult are_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  require_same_algebra(m, n);
  IsoResult out;
  if (m.dims() != n.dims()) return out;
  if (m.is_zero()) {
    out.isomorphic = true;
    out.witness = Morphism::zero(m, n);
    return out;
  }
  auto basis = hom_basis(m, n);
  if (basis.empty()) return out;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < kRetryBound; ++i) {
    Morphism f = random_combination(m, n, basis, rng);
    if (f.is_iso()) {
      out.isomorphic = true;
      out.witness = f;
      return out;
    }
  }
  // Sampling failed: compare indecomposable summands deterministically.
  Decomposition dm = decompose(m, seed);
  Decomposition dn = decompose(n, seed);
  if (!dm.proven || !dn.proven || dm.parts.size() != dn.parts.size()) {
    out.undecided = !dm.proven || !dn.proven;
    return out;
  }
  std::vector<bool> used(dn.parts.size(), false);
  for (const auto& a : dm.parts) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.parts.size() && !matched; ++j) {
      if (used[j] || a.dims() != dn.parts[j].dims()) continue;
      auto r = local_isomorphic(a, dn.parts[j]);
      if (r && *r) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return out;
  }
  out.isomorphic = true;
  return out;
}

bool isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  return are_isomorphic(m, n, seed).isomorphic;
}

InAddResult in_add(const Module& x, const std::vector<Module>& gens) {
  InAddResult out;
  if (x.is_zero()) {
    out.member = true;
    return out;
  }
  const Field& f = x.field();
  std::vector<Morphism> span;
  for (const auto& g : gens) {
    require_same_algebra(x, g);
    auto to = hom_basis(x, g);
    if (to.empty()) continue;
    auto from = hom_basis(g, x);
    for (const auto& a : to)
      for (const auto& b : from) span.push_back(then(a, b));
  }
  Morphism id = Morphism::identity(x);
  Mat ambient = id.flatten();
  if (span.empty()) return out;
  auto sol = solve_linear(flattened(f, span, ambient.rows()), ambient);
  if (!sol) return out;
  out.member = true;
  out.coefficients.assign(sol->entries().begin(), sol->entries().end());
  return out;
}

}  // namespace nexakt
