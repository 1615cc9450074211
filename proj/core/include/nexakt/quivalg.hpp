#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nexakt/exactlin.hpp"

namespace nexakt {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
  /// Convenience: arrows given as (name, source name, target name).
  static Quiver from_names(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;

  Quiver reversed() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path as arrow indices in traversal order. An empty word is the trivial
/// path at `base`. Matrices compose in the opposite order: the action of
/// [a, b] on a representation is M(b) * M(a).
struct PathWord {
  std::size_t base = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  std::size_t source() const noexcept { return base; }
  std::size_t target(const Quiver& q) const {
    return arrows.empty() ? base : q.arrows()[arrows.back()].target;
  }
  auto operator<=>(const PathWord&) const = default;
};

struct RelationTerm {
  std::int64_t coeff = 1;
  std::vector<std::string> path;
  bool operator==(const RelationTerm&) const = default;
};
using Relation = std::vector<RelationTerm>;

/// User-facing description of KQ/I, exactly as stored in algebra files.
struct AlgebraPresentation {
  std::uint32_t p = 101;
  Quiver quiver;
  std::vector<Relation> relations;
  std::size_t nilpotency_bound = 2;
  bool operator==(const AlgebraPresentation&) const = default;
};

/// Sparse vector over the path basis: (basis index, coefficient).
using BasisVector = std::vector<std::pair<std::size_t, Residue>>;

class Module;

/// A finite-dimensional quotient KQ/I with a basis of path residues.
class Algebra {
 public:
  const AlgebraPresentation& presentation() const noexcept { return pres_; }
  const Field& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return pres_.quiver; }
  std::size_t vertex_count() const noexcept { return pres_.quiver.vertex_count(); }
  std::size_t nilpotency_bound() const noexcept { return pres_.nilpotency_bound; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<PathWord>& basis() const noexcept { return basis_; }
  /// Global basis indices of paths from s to t, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return between_[s * vertex_count() + t];
  }

  /// Relations with resolved arrow indices and reduced coefficients.
  const std::vector<std::vector<std::pair<Residue, PathWord>>>& relations() const noexcept {
    return rels_;
  }

  /// Residue of an arbitrary path in the basis.
  BasisVector normal_form(const PathWord& w) const;
  /// Product b_i * b_j (b_i first), zero if the paths do not compose.
  BasisVector multiply(std::size_t i, std::size_t j) const;

  /// Path word from arrow names.
  PathWord word(const std::vector<std::string>& arrow_names, std::size_t base = 0) const;

 private:
  friend std::shared_ptr<const Algebra> build_algebra(const AlgebraPresentation&);
  AlgebraPresentation pres_;
  Field field_;
  std::vector<std::vector<std::pair<Residue, PathWord>>> rels_;
  std::vector<PathWord> basis_;
  std::vector<std::vector<std::size_t>> between_;
  // reduction data over all paths of length <= N
  std::map<PathWord, std::size_t> path_index_;
  std::vector<std::ptrdiff_t> path_basis_;  // basis index or -1
  std::vector<std::ptrdiff_t> path_row_;    // pivot row or -1
  Mat reduced_rows_;
  std::vector<std::size_t> column_of_path_;
  std::vector<std::size_t> path_of_column_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds KQ/I degreewise. Verifies admissibility (relation terms of length
/// >= 2) and that every path of length N lies in the ideal.
AlgebraPtr build_algebra(const AlgebraPresentation& pres);

AlgebraPtr opposite_algebra(const Algebra& alg);

bool same_algebra(const Algebra& a, const Algebra& b) noexcept;

/// Indecomposable projective P_v: paths starting at v, arrows acting by
/// right concatenation.
Module projective_module(const AlgebraPtr& alg, std::size_t v);
/// Indecomposable injective I_v: the dual of the paths ending at v.
Module injective_module(const AlgebraPtr& alg, std::size_t v);

}  // namespace nexakt
