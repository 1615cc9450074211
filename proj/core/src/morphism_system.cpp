#include "nexakt/morphism_system.hpp"

#include "nexakt/error.hpp"

namespace nexakt {

std::size_t MorphismSystem::add_unknown(const Module& source, const Module& target) {
  unknowns_.push_back({source, target, hom_basis(source, target)});
  return unknowns_.size() - 1;
}

void MorphismSystem::fix_zero(std::size_t unknown) { unknowns_.at(unknown).basis.clear(); }

std::size_t MorphismSystem::add_equation(std::vector<Term> terms, const Morphism& rhs) {
  for (const auto& t : terms) {
    const Unknown& u = unknowns_.at(t.unknown);
    if (t.before && !(t.before->target().dims() == u.source.dims())) throw ShapeError("term does not compose before unknown");
    if (t.after && !(t.after->source().dims() == u.target.dims())) throw ShapeError("term does not compose after unknown");
  }
  equations_.push_back({std::move(terms), rhs, {}});
  return equations_.size() - 1;
}

void MorphismSystem::add_slack(std::size_t equation, const std::vector<Morphism>& span) {
  auto& eq = equations_.at(equation);
  eq.slack.insert(eq.slack.end(), span.begin(), span.end());
}

std::optional<std::vector<Morphism>> MorphismSystem::solve() const {
  std::vector<std::size_t> col_off(unknowns_.size() + 1, 0);
  for (std::size_t i = 0; i < unknowns_.size(); ++i) col_off[i + 1] = col_off[i] + unknowns_[i].basis.size();
  std::size_t cols = col_off.back();
  std::vector<std::size_t> slack_off(equations_.size() + 1, cols);
  for (std::size_t e = 0; e < equations_.size(); ++e) slack_off[e + 1] = slack_off[e] + equations_[e].slack.size();
  const std::size_t total_cols = slack_off.back();

  std::vector<std::size_t> row_off(equations_.size() + 1, 0);
  std::vector<Mat> rhs_vecs;
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    rhs_vecs.push_back(equations_[e].rhs.flatten());
    row_off[e + 1] = row_off[e] + rhs_vecs.back().rows();
  }
  const std::size_t rows = row_off.back();
  Mat a(field_, rows, total_cols);
  Mat b(field_, rows, 1);
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    const auto& eq = equations_[e];
    b.set_block(row_off[e], 0, rhs_vecs[e]);
    for (const auto& t : eq.terms) {
      const Unknown& u = unknowns_[t.unknown];
      for (std::size_t k = 0; k < u.basis.size(); ++k) {
        Morphism m = u.basis[k];
        if (t.before) m = then(*t.before, m);
        if (t.after) m = then(m, *t.after);
        Mat v = m.flatten();
        if (v.rows() != rhs_vecs[e].rows()) throw ShapeError("equation term has the wrong shape");
        for (std::size_t r = 0; r < v.rows(); ++r) {
          auto& cell = a(row_off[e] + r, col_off[t.unknown] + k);
          cell = field_.add(cell, field_.mul(t.coeff, v(r, 0)));
        }
      }
    }
    for (std::size_t s = 0; s < eq.slack.size(); ++s) {
      Mat v = eq.slack[s].flatten();
      for (std::size_t r = 0; r < v.rows(); ++r) a(row_off[e] + r, slack_off[e] + s) = v(r, 0);
    }
  }
  std::optional<Mat> x;
  if (total_cols == 0) {
    if (!b.is_zero()) return std::nullopt;
    x = Mat(field_, 0, 1);
  } else {
    x = solve_linear(a, b);
  }
  if (!x) return std::nullopt;
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < unknowns_.size(); ++i) {
    const Unknown& u = unknowns_[i];
    std::vector<Residue> c;
    for (std::size_t k = 0; k < u.basis.size(); ++k) c.push_back((*x)(col_off[i] + k, 0));
    out.push_back(combine(u.source, u.target, u.basis, c));
  }
  return out;
}

}  // namespace nexakt
