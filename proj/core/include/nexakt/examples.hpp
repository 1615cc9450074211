#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nexakt/nstruct.hpp"

namespace nexakt {

struct LabeledModule {
  std::string label;
  Module module;
};

/// An example algebra together with the n-cluster tilting generators the
/// theory predicts for it.
struct ExampleAlgebra {
  AlgebraPtr algebra;
  std::vector<LabeledModule> expected;
};

/// K A_{nm+1} / J^2 on vertices 0..nm with arrows a_i : i -> i-1 (vertex 0 is the
/// sink, so P_0 = S_0); `reverse` flips every arrow. Expected generators are the
/// projectives plus S_n, S_2n, ..., S_nm (mirrored when reversed).
ExampleAlgebra gen_linear_An_J2(std::size_t n, std::size_t m, std::uint32_t p = 101, bool reverse = false);

/// Preprojective algebra of type A_n, 2 <= n <= 3, by doubled quiver and mesh
/// relations.
AlgebraPtr gen_preprojective_A(std::size_t n, std::uint32_t p = 101);

/// Auslander algebra of K(1 <- 2 <- ... <- m), 1 <= m <= 4: the AR quiver on
/// interval modules "i-j" with mesh relations, nilpotency bound found by search.
AlgebraPtr gen_auslander_linear_A(std::size_t m, std::uint32_t p = 101);

/// The uniserial modules P_v / rad^l P_v, 1 <= l <= Loewy length of P_v, in
/// vertex-then-length order. Requires every vertex to have at most one incoming
/// and one outgoing arrow.
std::vector<LabeledModule> nakayama_indecomposables(const AlgebraPtr& alg);

struct NctSearchResult {
  std::vector<std::vector<std::size_t>> hits;  // indices into the supplied list, ascending
  std::size_t tested = 0;
};
/// Every subset of `list` containing all indecomposable projectives that passes
/// the n-cluster tilting check.
NctSearchResult brute_force_nct_search(const AlgebraPtr& alg, std::size_t n, const std::vector<Module>& list,
                                       bool complete);

/// Searches for a vertex and arrow bijection carrying each set of relations into
/// the ideal of the other algebra. Supports up to 8 vertices.
bool presented_isomorphic(const Algebra& a, const Algebra& b);

}  // namespace nexakt
