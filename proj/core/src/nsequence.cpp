#include "nexakt/error.hpp"
#include "nexakt/nstruct.hpp"

namespace nexakt {

namespace {

std::size_t span_rank(const std::vector<Morphism>& maps, const Module& s, const Module& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < s.dims().size(); ++v) n += s.dim(v) * t.dim(v);
  return rank(flattened(s.field(), maps, n));
}

void require_member(const Module& x, const AddCat& m, const char* what) {
  if (!m.contains(x)) throw DomainError(std::string(what) + " is not in add M");
}

[[noreturn]] void step_failed(const std::string& what, int degree, const Module& term, const AddCat& m) {
  std::string msg = what + " has no solution in degree " + std::to_string(degree);
  if (!m.contains(term)) msg += " (the target term is not in add M)";
  throw HypothesisError(msg, degree);
}

}  // namespace

ComplexSeq n_cokernel(const Morphism& d0, const AddCat& m, std::size_t n) {
  if (n == 0) throw PreconditionError("n_cokernel needs n >= 1");
  require_member(d0.source(), m, "source of d0");
  require_member(d0.target(), m, "target of d0");
  std::vector<Morphism> diffs{d0};
  for (std::size_t k = 1; k < n; ++k) {
    CokernelResult c = cokernel_morphism(diffs.back());
    diffs.push_back(then(c.projection, minimal_left_approximation(c.object, m)));
  }
  diffs.push_back(cokernel_morphism(diffs.back()).projection);
  if (!m.contains(diffs.back().target())) {
    throw HypothesisError("the last cokernel of the ladder is not in add M", static_cast<int>(n) + 1);
  }
  return ComplexSeq::from_maps(0, diffs);
}

ComplexSeq n_kernel(const Morphism& dn, const AddCat& m, std::size_t n) {
  if (n == 0) throw PreconditionError("n_kernel needs n >= 1");
  require_member(dn.source(), m, "source of dn");
  require_member(dn.target(), m, "target of dn");
  std::vector<Morphism> rev{dn};
  for (std::size_t k = 1; k < n; ++k) {
    KernelResult kr = kernel_morphism(rev.back());
    rev.push_back(then(minimal_right_approximation(kr.object, m), kr.inclusion));
  }
  rev.push_back(kernel_morphism(rev.back()).inclusion);
  if (!m.contains(rev.back().source())) {
    throw HypothesisError("the last kernel of the ladder is not in add M", 0);
  }
  return ComplexSeq::from_maps(0, std::vector<Morphism>(rev.rbegin(), rev.rend()));
}

std::size_t NExactCert::interior_checks() const noexcept {
  std::size_t c = 0;
  for (const auto& r : records) c += r.end_check ? 0 : 1;
  return c;
}

std::size_t NExactCert::end_checks() const noexcept { return records.size() - interior_checks(); }

NExactCert verify_n_cokernel(const ComplexSeq& x, const AddCat& m) {
  NExactCert cert;
  const int lo = x.lo(), hi = x.hi();
  for (std::size_t gi = 0; gi < m.size(); ++gi) {
    const Module& g = m.generators()[gi];
    // out[k]: rank of Hom(X^k, G) -> Hom(X^{k-1}, G), precomposition with d^{k-1}.
    std::vector<std::size_t> dim, out;
    for (int k = lo; k <= hi; ++k) {
      auto basis = hom_basis(x.term(k), g);
      dim.push_back(basis.size());
      std::size_t r = 0;
      if (k > lo && !basis.empty()) {
        std::vector<Morphism> img;
        for (const auto& b : basis) img.push_back(then(x.diff(k - 1), b));
        r = span_rank(img, x.term(k - 1), g);
      }
      out.push_back(r);
    }
    for (int k = lo + 1; k <= hi; ++k) {
      const auto i = static_cast<std::size_t>(k - lo);
      ExactnessRecord rec;
      rec.generator = gi;
      rec.covariant = false;
      rec.degree = k;
      rec.end_check = k == hi;
      rec.hom_dim = dim[i];
      rec.rank_out = out[i];
      rec.rank_in = k == hi ? 0 : out[i + 1];
      rec.exact = dim[i] - rec.rank_out == rec.rank_in;
      cert.cokernel_side = cert.cokernel_side && rec.exact;
      cert.records.push_back(rec);
    }
  }
  return cert;
}

NExactCert verify_n_kernel(const ComplexSeq& x, const AddCat& m) {
  NExactCert cert;
  const int lo = x.lo(), hi = x.hi();
  for (std::size_t gi = 0; gi < m.size(); ++gi) {
    const Module& g = m.generators()[gi];
    // out[k]: rank of Hom(G, X^k) -> Hom(G, X^{k+1}), postcomposition with d^k.
    std::vector<std::size_t> dim, out;
    for (int k = lo; k <= hi; ++k) {
      auto basis = hom_basis(g, x.term(k));
      dim.push_back(basis.size());
      std::size_t r = 0;
      if (k < hi && !basis.empty()) {
        std::vector<Morphism> img;
        for (const auto& b : basis) img.push_back(then(b, x.diff(k)));
        r = span_rank(img, g, x.term(k + 1));
      }
      out.push_back(r);
    }
    for (int k = lo; k < hi; ++k) {
      const auto i = static_cast<std::size_t>(k - lo);
      ExactnessRecord rec;
      rec.generator = gi;
      rec.covariant = true;
      rec.degree = k;
      rec.end_check = k == lo;
      rec.hom_dim = dim[i];
      rec.rank_out = out[i];
      rec.rank_in = k == lo ? 0 : out[i - 1];
      rec.exact = dim[i] - rec.rank_out == rec.rank_in;
      cert.kernel_side = cert.kernel_side && rec.exact;
      cert.records.push_back(rec);
    }
  }
  return cert;
}

NExactCert verify_n_exact(const ComplexSeq& x, const AddCat& m, std::size_t n) {
  if (x.size() != n + 2) throw ShapeError("an n-exact sequence has n + 2 terms");
  NExactCert a = verify_n_cokernel(x, m);
  NExactCert b = verify_n_kernel(x, m);
  a.kernel_side = b.kernel_side;
  a.records.insert(a.records.end(), b.records.begin(), b.records.end());
  return a;
}

Homotopy comparison_homotopy(const ComplexMorphism& f, const ComplexMorphism& g, const AddCat& m) {
  const ComplexSeq& x = f.source();
  const ComplexSeq& y = f.target();
  if (x.lo() != g.source().lo() || x.hi() != g.source().hi() || y.lo() != g.target().lo() ||
      y.hi() != g.target().hi()) {
    throw ShapeError("comparison_homotopy needs parallel complex morphisms");
  }
  const int lo = x.lo(), hi = x.hi();
  if (!(f.component(lo) == g.component(lo))) {
    throw PreconditionError("comparison_homotopy needs equal components in the lowest degree");
  }
  Homotopy h{lo, {}};
  h.comps.push_back(Morphism::zero(x.term(lo + 1), y.term(lo)));
  for (int k = lo + 1; k <= hi; ++k) {
    Morphism rhs = f.component(k) - g.component(k) - then(h.at(k, x, y), y.diff(k - 1));
    if (k == hi) {
      if (!rhs.is_zero()) step_failed("comparison_homotopy", k, y.term(k), m);
      break;
    }
    auto next = factor_through_source(x.diff(k), rhs);
    if (!next) step_failed("comparison_homotopy", k, y.term(k), m);
    h.comps.push_back(*next);
  }
  return h;
}

std::optional<Homotopy> contract(const ComplexSeq& x, const AddCat& m) {
  const int lo = x.lo(), hi = x.hi();
  Homotopy h{lo, {}};
  if (lo == hi) {
    if (!x.term(lo).is_zero()) return std::nullopt;
    return h;
  }
  auto r = factor_through_source(x.diff(lo), Morphism::identity(x.term(lo)));
  if (!r) return std::nullopt;
  h.comps.push_back(*r);
  for (int k = lo + 1; k <= hi; ++k) {
    Morphism rhs = Morphism::identity(x.term(k)) - then(h.at(k, x, x), x.diff(k - 1));
    if (k == hi) {
      if (!rhs.is_zero()) step_failed("contract", k, x.term(k), m);
      break;
    }
    auto next = factor_through_source(x.diff(k), rhs);
    if (!next) step_failed("contract", k, x.term(k), m);
    h.comps.push_back(*next);
  }
  return h;
}

}  // namespace nexakt
