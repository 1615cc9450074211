#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nexakt/modcat.hpp"

namespace nexakt {

/// The additive closure add(G_1 (+) ... (+) G_r) of pairwise non-isomorphic
/// indecomposables. Hom spaces and radicals between generators are cached.
class AddCat {
 public:
  AddCat(AlgebraPtr alg, std::vector<Module> generators, std::uint64_t seed = 0);

  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  const std::vector<Module>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool contains_projectives() const noexcept { return has_projectives_; }
  bool contains_injectives() const noexcept { return has_injectives_; }

  /// Basis of Hom(G_i, G_j).
  const std::vector<Morphism>& hom(std::size_t i, std::size_t j) const { return hom_[i * size() + j]; }
  /// Basis of rad(G_i, G_j): all of Hom for i != j, rad End(G_i) for i == j.
  const std::vector<Morphism>& radical(std::size_t i, std::size_t j) const { return rad_[i * size() + j]; }

  bool contains(const Module& x) const { return in_add(x, gens_).member; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  AlgebraPtr alg_;
  std::vector<Module> gens_;
  std::vector<std::vector<Morphism>> hom_;
  std::vector<std::vector<Morphism>> rad_;
  bool has_projectives_ = false;
  bool has_injectives_ = false;
  std::uint64_t seed_ = 0;
};

// ---------------------------------------------------------------------------
// Approximations and weak (co)kernels

/// x -> T with T in add M, such that Hom(T, G) -> Hom(x, G) is onto for every
/// generator G, and no summand of T is superfluous.
Morphism minimal_left_approximation(const Module& x, const AddCat& m);
/// T -> x, dual to the above.
Morphism minimal_right_approximation(const Module& x, const AddCat& m);

bool is_left_approximation(const Morphism& f, const AddCat& m);
bool is_right_approximation(const Morphism& f, const AddCat& m);

/// Cokernel projection followed by the minimal left approximation.
Morphism weak_cokernel(const Morphism& f, const AddCat& m);
/// Minimal right approximation of the kernel followed by the inclusion.
Morphism weak_kernel(const Morphism& f, const AddCat& m);

// ---------------------------------------------------------------------------
// n-cokernels, n-kernels, n-exact sequences

/// X^0 -d0-> X^1 -> ... -> X^{n+1}, built by the cokernel / approximation ladder.
ComplexSeq n_cokernel(const Morphism& d0, const AddCat& m, std::size_t n);
/// X^0 -> ... -> X^n -dn-> X^{n+1}, built by the dual ladder.
ComplexSeq n_kernel(const Morphism& dn, const AddCat& m, std::size_t n);

struct ExactnessRecord {
  std::size_t generator = 0;
  bool covariant = false;   // Hom(G, -) if true, Hom(-, G) otherwise
  int degree = 0;           // position X^degree in the sequence
  bool end_check = false;   // injectivity at the end of the Hom sequence
  std::size_t hom_dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool exact = false;
};

struct NExactCert {
  std::vector<ExactnessRecord> records;
  bool cokernel_side = true;
  bool kernel_side = true;
  bool verdict() const noexcept { return cokernel_side && kernel_side; }
  std::size_t interior_checks() const noexcept;
  std::size_t end_checks() const noexcept;
};

/// x = (X^0 .. X^{n+1}); checks that (d^1, ..., d^n) is an n-cokernel of d^0
/// against every generator: exactness of 0 -> Hom(X^{n+1}, G) -> ... -> Hom(X^0, G).
NExactCert verify_n_cokernel(const ComplexSeq& x, const AddCat& m);
/// Dual: exactness of 0 -> Hom(G, X^0) -> ... -> Hom(G, X^{n+1}).
NExactCert verify_n_kernel(const ComplexSeq& x, const AddCat& m);
/// Both of the above; x must have n + 2 terms.
NExactCert verify_n_exact(const ComplexSeq& x, const AddCat& m, std::size_t n);

/// Homotopy h : f -> g with h^{lo+1} = 0, for complexes whose differentials are
/// successive weak cokernels. Throws PreconditionError if f and g differ in the
/// lowest degree and HypothesisError (with the degree) if a step has no solution.
Homotopy comparison_homotopy(const ComplexMorphism& f, const ComplexMorphism& g, const AddCat& m);

/// Null-homotopy of the identity when d^lo is a split monomorphism, otherwise nullopt.
std::optional<Homotopy> contract(const ComplexSeq& x, const AddCat& m);

// ---------------------------------------------------------------------------
// n-pushouts

struct PushoutResult {
  ComplexSeq y;
  ComplexMorphism f;
  bool source_mono = false;  // d_X^0 monic
  bool target_mono = false;  // d_Y^0 monic
};

/// x has n + 1 terms X^0 .. X^n; f0 : X^0 -> Y^0.
PushoutResult n_pushout(const ComplexSeq& x, const Morphism& f0, const AddCat& m);

struct GoodPushoutResult {
  ComplexSeq y;              // Y (+) X'
  ComplexMorphism f;
  ComplexSeq padding;        // the contractible complex X'
  PushoutResult plain;
  std::vector<bool> split_mono;  // f^k split monic, for k = 2 .. n
};
GoodPushoutResult good_n_pushout(const ComplexSeq& x, const Morphism& f0, const AddCat& m);

struct PushoutFactorization {
  ComplexMorphism p;
  Homotopy h;
};
/// p : Y -> Z with p^0 = 1 and a homotopy h : f p -> g with h^1 = 0.
PushoutFactorization pushout_factorization(const ComplexMorphism& f, const ComplexMorphism& g);

// ---------------------------------------------------------------------------
// n-cluster tilting and Ext comparisons

struct NctReport {
  bool generating = false;
  bool cogenerating = false;
  bool rigid = false;
  bool maximal = false;
  bool complete = false;
  std::vector<std::string> witnesses;
  bool pass() const noexcept { return generating && cogenerating && rigid && maximal; }
  std::string verdict(std::size_t n) const;
};

/// `indecs` must contain (up to isomorphism) every generator of m; `labels`
/// optionally names the entries of `indecs` in witnesses.
NctReport check_n_cluster_tilting(const AddCat& m, std::size_t n, const std::vector<Module>& indecs,
                                  bool complete, const std::vector<std::string>& labels = {});

/// Ext table over a fixed list of indecomposables: ext(i, j, k) = dim Ext^k(L_i, L_j)
/// for 1 <= k <= max_k, plus the positions of the indecomposable projectives and
/// injectives in the list (nullopt when absent).
class ExtTable {
 public:
  ExtTable(const AlgebraPtr& alg, const std::vector<Module>& list, std::size_t max_k);
  std::size_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * max_k_ + (k - 1)];
  }
  std::size_t max_k() const noexcept { return max_k_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<std::optional<std::size_t>>& projective_index() const noexcept { return proj_; }
  const std::vector<std::optional<std::size_t>>& injective_index() const noexcept { return inj_; }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }

 private:
  std::size_t n_;
  std::size_t max_k_;
  std::vector<std::size_t> data_;
  std::vector<std::optional<std::size_t>> proj_, inj_;
  std::vector<std::string> vertices_;
};

/// Same checks with generators given as indices into `indecs`.
NctReport check_n_cluster_tilting_indices(const ExtTable& ext, const std::vector<std::size_t>& gens,
                                          std::size_t n,
                                          bool complete, const std::vector<std::string>& labels = {});

/// Cohomology at Hom(M_k, b) of Hom(M_., b) for an add-M resolution of a.
std::size_t ext_via_approx_resolution(const Module& a, const Module& b, const AddCat& m,
                                      std::size_t k, std::size_t n);

struct StrongProjectivity {
  bool exact = false;
  std::size_t hom_dim = 0;   // dim Hom(p, M)
  std::size_t rank_in = 0;   // rank Hom(p, L) -> Hom(p, M)
  std::size_t rank_out = 0;  // rank Hom(p, M) -> Hom(p, N)
  Morphism weak_cokernel;
};
StrongProjectivity strong_projectivity_check(const Module& p, const Morphism& f, const AddCat& m);

}  // namespace nexakt
