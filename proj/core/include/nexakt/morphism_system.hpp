#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nexakt/modcat.hpp"

namespace nexakt {

/// Linear equations whose unknowns are module morphisms. Each unknown is
/// parametrized by a Hom basis, so naturality holds by construction.
///
/// An equation reads  sum_t coeff_t * (before_t ; U_t ; after_t) + slack = rhs,
/// where ";" is left-to-right composition and the optional slack ranges over
/// the span of supplied morphisms (used to solve modulo an ideal).
class MorphismSystem {
 public:
  struct Term {
    std::size_t unknown;
    Residue coeff = 1;
    std::optional<Morphism> before;
    std::optional<Morphism> after;
  };

  explicit MorphismSystem(Field f) : field_(f) {}

  std::size_t add_unknown(const Module& source, const Module& target);
  /// Fixes an unknown to zero (useful for h^1 = 0 style constraints).
  void fix_zero(std::size_t unknown);
  std::size_t add_equation(std::vector<Term> terms, const Morphism& rhs);
  void add_slack(std::size_t equation, const std::vector<Morphism>& span);

  std::optional<std::vector<Morphism>> solve() const;

 private:
  struct Unknown {
    Module source, target;
    std::vector<Morphism> basis;
  };
  struct Equation {
    std::vector<Term> terms;
    Morphism rhs;
    std::vector<Morphism> slack;
  };
  Field field_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
};

}  // namespace nexakt
