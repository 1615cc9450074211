#include "nexakt/error.hpp"
#include "nexakt/modcat.hpp"

namespace nexakt {

ComplexSeq::ComplexSeq(int lo, std::vector<Module> terms, std::vector<Morphism> diffs, bool check)
    : lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  if (terms_.empty()) throw ShapeError("a complex needs at least one term");
  if (diffs_.size() + 1 != terms_.size()) throw ShapeError("complex needs one differential per consecutive pair");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (!(diffs_[i].source() == terms_[i]) || !(diffs_[i].target() == terms_[i + 1])) {
      throw ShapeError("differential " + std::to_string(lo_ + static_cast<int>(i)) +
                       " does not match the terms");
    }
  }
  if (!check) return;
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (!then(diffs_[i], diffs_[i + 1]).is_zero()) {
      throw ShapeError("d^" + std::to_string(lo_ + static_cast<int>(i)) +
                       " followed by the next differential is nonzero");
    }
  }
}

ComplexSeq ComplexSeq::from_maps(int lo, const std::vector<Morphism>& diffs) {
  if (diffs.empty()) throw ShapeError("from_maps needs at least one map");
  std::vector<Module> terms{diffs.front().source()};
  for (const auto& d : diffs) terms.push_back(d.target());
  return ComplexSeq(lo, std::move(terms), diffs);
}

Module ComplexSeq::term(int k) const {
  if (in_range(k)) return terms_[static_cast<std::size_t>(k - lo_)];
  return Module::zero(terms_.front().algebra_ptr());
}

Morphism ComplexSeq::diff(int k) const {
  if (k >= lo_ && k < hi()) return diffs_[static_cast<std::size_t>(k - lo_)];
  return Morphism::zero(term(k), term(k + 1));
}

ComplexMorphism::ComplexMorphism(ComplexSeq source, ComplexSeq target,
                                 std::vector<Morphism> components, bool check)
    : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(components)) {
  if (src_.lo() != tgt_.lo() || src_.hi() != tgt_.hi()) throw ShapeError("complex morphism needs equal degree ranges");
  if (comps_.size() != src_.size()) throw ShapeError("complex morphism needs one component per degree");
  for (int k = src_.lo(); k <= src_.hi(); ++k) {
    const Morphism& c = comps_[static_cast<std::size_t>(k - src_.lo())];
    if (!(c.source() == src_.term(k)) || !(c.target() == tgt_.term(k))) {
      throw ShapeError("component " + std::to_string(k) + " has the wrong endpoints");
    }
  }
  if (!check) return;
  for (int k = src_.lo(); k < src_.hi(); ++k) {
    if (!(then(src_.diff(k), component(k + 1)) == then(component(k), tgt_.diff(k)))) {
      throw ShapeError("complex morphism does not commute in degree " + std::to_string(k));
    }
  }
}

ComplexMorphism ComplexMorphism::identity(const ComplexSeq& x) {
  std::vector<Morphism> comps;
  for (const auto& t : x.terms()) comps.push_back(Morphism::identity(t));
  return ComplexMorphism(x, x, std::move(comps), false);
}

ComplexMorphism ComplexMorphism::zero(const ComplexSeq& x, const ComplexSeq& y) {
  std::vector<Morphism> comps;
  for (int k = x.lo(); k <= x.hi(); ++k) comps.push_back(Morphism::zero(x.term(k), y.term(k)));
  return ComplexMorphism(x, y, std::move(comps), false);
}

const Morphism& ComplexMorphism::component(int k) const {
  if (!src_.in_range(k)) throw ShapeError("degree outside the complex morphism range");
  return comps_[static_cast<std::size_t>(k - src_.lo())];
}

ComplexMorphism ComplexMorphism::operator+(const ComplexMorphism& o) const {
  std::vector<Morphism> comps;
  for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] + o.comps_.at(i));
  return ComplexMorphism(src_, tgt_, std::move(comps), false);
}

ComplexMorphism ComplexMorphism::operator-(const ComplexMorphism& o) const {
  std::vector<Morphism> comps;
  for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] - o.comps_.at(i));
  return ComplexMorphism(src_, tgt_, std::move(comps), false);
}

ComplexMorphism then(const ComplexMorphism& f, const ComplexMorphism& g) {
  std::vector<Morphism> comps;
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    comps.push_back(then(f.components()[i], g.components().at(i)));
  }
  return ComplexMorphism(f.source(), g.target(), std::move(comps), false);
}

ComplexSeq direct_sum(const ComplexSeq& x, const ComplexSeq& y) {
  if (x.lo() != y.lo() || x.hi() != y.hi()) throw ShapeError("direct sum of complexes needs equal ranges");
  std::vector<Module> terms;
  std::vector<Morphism> diffs;
  for (int k = x.lo(); k <= x.hi(); ++k) terms.push_back(direct_sum(x.term(k), y.term(k)));
  for (int k = x.lo(); k < x.hi(); ++k) diffs.push_back(direct_sum(x.diff(k), y.diff(k)));
  return ComplexSeq(x.lo(), std::move(terms), std::move(diffs), false);
}

Morphism Homotopy::at(int k, const ComplexSeq& x, const ComplexSeq& y) const {
  int idx = k - (lo + 1);
  if (idx >= 0 && idx < static_cast<int>(comps.size())) {
    const Morphism& h = comps[static_cast<std::size_t>(idx)];
    if (!(h.source().dims() == x.term(k).dims()) || !(h.target().dims() == y.term(k - 1).dims())) {
      throw ShapeError("homotopy component " + std::to_string(k) + " has the wrong shape");
    }
    return h;
  }
  return Morphism::zero(x.term(k), y.term(k - 1));
}

bool verify_homotopy(const ComplexMorphism& f, const ComplexMorphism& g, const Homotopy& h) {
  const ComplexSeq& x = f.source();
  const ComplexSeq& y = f.target();
  if (x.lo() != g.source().lo() || x.hi() != g.source().hi()) throw ShapeError("morphisms have different ranges");
  if (h.comps.size() > static_cast<std::size_t>(x.hi() - x.lo())) throw ShapeError("homotopy has too many components");
  for (int k = x.lo(); k <= x.hi(); ++k) {
    Morphism lhs = f.component(k) - g.component(k);
    Morphism rhs = then(h.at(k, x, y), y.diff(k - 1)) + then(x.diff(k), h.at(k + 1, x, y));
    if (!(lhs.components() == rhs.components())) return false;
  }
  return true;
}

ComplexSeq mapping_cone(const ComplexMorphism& f) {
  const ComplexSeq& x = f.source();
  const ComplexSeq& y = f.target();
  const auto& alg = x.algebra_ptr();
  auto comp = [&](int k) -> Morphism {
    return x.in_range(k) ? f.component(k) : Morphism::zero(x.term(k), y.term(k));
  };
  std::vector<DirectSum> c;
  for (int k = x.lo() - 1; k <= x.hi(); ++k) c.push_back(direct_sum(alg, {x.term(k + 1), y.term(k)}));
  std::vector<Module> terms;
  for (const auto& s : c) terms.push_back(s.object);
  std::vector<Morphism> diffs;
  for (int k = x.lo() - 1; k < x.hi(); ++k) {
    std::size_t i = static_cast<std::size_t>(k - (x.lo() - 1));
    diffs.push_back(block_morphism(c[i], c[i + 1],
                                   {{-x.diff(k + 1), std::nullopt}, {comp(k + 1), y.diff(k)}}));
  }
  return ComplexSeq(x.lo() - 1, std::move(terms), std::move(diffs));
}

bool is_exact_complex(const ComplexSeq& x, bool left_end_mono, bool right_end_epi) {
  for (int k = x.lo() + 1; k < x.hi(); ++k) {
    if (x.diff(k - 1).rank() + x.diff(k).rank() != x.term(k).total_dim()) return false;
  }
  if (x.size() >= 2) {
    if (left_end_mono && !x.diff(x.lo()).is_mono()) return false;
    if (right_end_epi && !x.diff(x.hi() - 1).is_epi()) return false;
  }
  return true;
}

std::size_t middle_cohomology(const Mat& f, const Mat& g, std::size_t dim_b) {
  return dim_b - rank(g) - rank(f);
}

}  // namespace nexakt
