#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <nexakt/nexakt.hpp>

namespace nexakt::testing {

using Rng = std::mt19937_64;

/// K(0 <- 1 <- 2) / J^2 with its five indecomposables and M3 = add(P0, P1, P2, S2).
struct Lambda3 {
  AlgebraPtr alg;
  Module S0, S1, S2, P0, P1, P2;
  AddCat m3;
  std::vector<Module> indecs;              // S0, S1, S2, P1, P2
  std::vector<std::string> labels;
};
Lambda3 make_lambda3(std::uint32_t p = 101);

/// Preprojective algebra of A2 with M = add(P1, P2, S1).
struct Pi2 {
  AlgebraPtr alg;
  Module S1, S2, P1, P2;
  AddCat m;
  std::vector<Module> indecs;              // S1, S2, P1, P2
  std::vector<std::string> labels;
};
Pi2 make_pi2(std::uint32_t p = 101);

/// Morphism from per-vertex row lists; vertices missing from `comps` get zero blocks.
Morphism mor(const Module& s, const Module& t, const std::map<std::size_t, std::vector<std::vector<std::int64_t>>>& comps);

/// Uniformly random element of Hom(a, b).
Morphism random_morphism(const Module& a, const Module& b, Rng& rng);

/// A random chain map x -> y extending f0, built degree by degree from a
/// particular solution plus a random element of the solution space; nullopt if
/// some step has no solution.
std::optional<ComplexMorphism> random_extension(const ComplexSeq& x, const ComplexSeq& y, const Morphism& f0,
                                                Rng& rng);

/// Verified n-exact sequences: the n-cokernel of the injective envelope of each
/// generator, then `variants` more whose first map is an envelope widened by a
/// random map into a random generator.
std::vector<ComplexSeq> exact_sequence_pool(const AddCat& m, std::size_t n, std::size_t variants, Rng& rng);

/// The contractible complex with X^k = X^{k+1} = c (identity between) padded by zeros
/// to degrees lo .. lo + len - 1.
ComplexSeq contractible(const AlgebraPtr& alg, const Module& c, int lo, std::size_t len, int k);

}  // namespace nexakt::testing
