#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nexakt/exactlin.hpp"
#include "nexakt/quivalg.hpp"

namespace nexakt {

/// A representation of the bound quiver: one vector space per vertex and one
/// matrix per arrow, of shape dim(target) x dim(source).
class Module {
 public:
  Module() = default;
  /// Validates shapes and that every relation acts as zero.
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> action);
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  const Algebra& algebra() const noexcept { return *alg_; }
  const Field& field() const noexcept { return alg_->field(); }

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }

  const std::vector<Mat>& action() const noexcept { return action_; }
  const Mat& action(std::size_t arrow) const { return action_.at(arrow); }
  /// Matrix of a path: for [a, b] this is action(b) * action(a).
  Mat path_action(const PathWord& w) const;

  bool operator==(const Module& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> action_;
};

/// A natural transformation given by one matrix per vertex.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Module source, Module target, std::vector<Mat> components, bool check = true);

  static Morphism zero(const Module& source, const Module& target);
  static Morphism identity(const Module& m);

  const Module& source() const noexcept { return src_; }
  const Module& target() const noexcept { return tgt_; }
  const Mat& component(std::size_t v) const { return comps_.at(v); }
  const std::vector<Mat>& components() const noexcept { return comps_; }
  const Field& field() const noexcept { return src_.field(); }

  bool is_zero() const noexcept;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;
  std::size_t rank() const;

  /// Components flattened row-major and concatenated, as a column vector.
  Mat flatten() const;

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator-() const;
  Morphism scaled(Residue c) const;
  bool operator==(const Morphism& o) const;

 private:
  Module src_;
  Module tgt_;
  std::vector<Mat> comps_;
};

/// f followed by g (g after f). Component matrices multiply as G * F.
Morphism then(const Morphism& f, const Morphism& g);

/// Rebuilds a morphism from a flattened coordinate vector.
Morphism unflatten(const Module& source, const Module& target, const Mat& vec);

/// Linear combination sum_i c_i b_i of morphisms with a common shape.
Morphism combine(const Module& source, const Module& target, const std::vector<Morphism>& basis,
                 const std::vector<Residue>& coeffs);

void require_same_algebra(const Module& a, const Module& b);

// ---------------------------------------------------------------------------
// Direct sums

struct DirectSum {
  Module object;
  std::vector<Module> summands;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Module>& summands);
Module direct_sum(const Module& a, const Module& b);
/// Block morphism between two direct sums; blocks[i][j] : source summand j -> target summand i.
/// Missing blocks (nullopt) are zero.
Morphism block_morphism(const DirectSum& source, const DirectSum& target,
                        const std::vector<std::vector<std::optional<Morphism>>>& blocks);
/// x -> (+)_i T_i with components maps[i].
Morphism column_morphism(const DirectSum& target, const std::vector<Morphism>& maps);
/// (+)_i S_i -> y with components maps[i].
Morphism row_morphism(const DirectSum& source, const std::vector<Morphism>& maps);
Morphism direct_sum(const Morphism& f, const Morphism& g);

// ---------------------------------------------------------------------------
// Standard modules

Module simple_module(const AlgebraPtr& alg, std::size_t v);

// ---------------------------------------------------------------------------
// Hom spaces, kernels, cokernels

/// A basis of Hom(m, n), in the deterministic order of kernel_basis.
std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Columns are the flattened basis morphisms.
Mat flattened(const Field& f, const std::vector<Morphism>& maps, std::size_t ambient_dim);

struct KernelResult {
  Module object;
  Morphism inclusion;
};
struct CokernelResult {
  Module object;
  Morphism projection;
};

KernelResult kernel_morphism(const Morphism& f);
CokernelResult cokernel_morphism(const Morphism& f);

/// Some x with then(x, g) == h, i.e. h factors through g on the right.
std::optional<Morphism> factor_through_target(const Morphism& h, const Morphism& g);
/// Some x with then(f, x) == h, i.e. h extends along f.
std::optional<Morphism> factor_through_source(const Morphism& f, const Morphism& h);

// ---------------------------------------------------------------------------
// Decomposition and isomorphism

inline constexpr std::size_t kRetryBound = 32;

struct Summand {
  Module module;
  std::size_t multiplicity = 1;
};

struct Decomposition {
  std::vector<Module> parts;       // with repetition, in splitting order
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
  bool proven = true;              // every part certified indecomposable
};

/// Fitting splitting driven by random endomorphisms drawn from `seed`.
Decomposition decompose(const Module& x, std::uint64_t seed);
std::vector<Summand> split_indecomposables(const Module& x, std::uint64_t seed);

/// Result of the locality test on End(x).
struct LocalityResult {
  bool local = false;
  std::vector<Morphism> radical;  // basis of rad End(x) when local
};
/// Deterministic: End(x) is local with residue field F_p iff every basis
/// element is a scalar plus a nilpotent and those nilpotents span an ideal.
LocalityResult endomorphism_locality(const Module& x);
bool is_indecomposable(const Module& x);

struct IsoResult {
  bool isomorphic = false;
  bool undecided = false;  // set when dimension vectors agree but sampling found no iso
  std::optional<Morphism> witness;
};
IsoResult are_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0);
bool isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0);

struct InAddResult {
  bool member = false;
  std::vector<Residue> coefficients;  // expresses id_x in the factoring span
};
InAddResult in_add(const Module& x, const std::vector<Module>& gens);

// ---------------------------------------------------------------------------
// Complexes

class ComplexSeq {
 public:
  ComplexSeq() = default;
  /// terms[i] sits in degree lo + i; diffs[i] : terms[i] -> terms[i + 1].
  ComplexSeq(int lo, std::vector<Module> terms, std::vector<Morphism> diffs, bool check = true);
  static ComplexSeq from_maps(int lo, const std::vector<Morphism>& diffs);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool in_range(int k) const noexcept { return k >= lo_ && k <= hi(); }

  /// Term in degree k; zero outside the range.
  Module term(int k) const;
  /// d^k : X^k -> X^{k+1}; zero outside the range.
  Morphism diff(int k) const;
  const std::vector<Module>& terms() const noexcept { return terms_; }
  const std::vector<Morphism>& diffs() const noexcept { return diffs_; }
  const AlgebraPtr& algebra_ptr() const { return terms_.front().algebra_ptr(); }

 private:
  int lo_ = 0;
  std::vector<Module> terms_;
  std::vector<Morphism> diffs_;
};

class ComplexMorphism {
 public:
  ComplexMorphism() = default;
  ComplexMorphism(ComplexSeq source, ComplexSeq target, std::vector<Morphism> components,
                  bool check = true);
  static ComplexMorphism identity(const ComplexSeq& x);
  static ComplexMorphism zero(const ComplexSeq& x, const ComplexSeq& y);

  const ComplexSeq& source() const noexcept { return src_; }
  const ComplexSeq& target() const noexcept { return tgt_; }
  const Morphism& component(int k) const;
  const std::vector<Morphism>& components() const noexcept { return comps_; }

  ComplexMorphism operator+(const ComplexMorphism& o) const;
  ComplexMorphism operator-(const ComplexMorphism& o) const;

 private:
  ComplexSeq src_;
  ComplexSeq tgt_;
  std::vector<Morphism> comps_;
};

ComplexMorphism then(const ComplexMorphism& f, const ComplexMorphism& g);
ComplexSeq direct_sum(const ComplexSeq& x, const ComplexSeq& y);

/// h^k : X^k -> Y^{k-1}; comps[i] is h^{lo+1+i}, for degrees lo+1 .. hi.
struct Homotopy {
  int lo = 0;
  std::vector<Morphism> comps;
  /// h^k, or the zero map when k is outside lo+1 .. lo+comps.size().
  Morphism at(int k, const ComplexSeq& x, const ComplexSeq& y) const;
};

/// Checks f^k - g^k = h^k d_Y^{k-1} + d_X^k h^{k+1} in every degree.
bool verify_homotopy(const ComplexMorphism& f, const ComplexMorphism& g, const Homotopy& h);

/// C^k = X^{k+1} (+) Y^k for k in [lo - 1, hi], d_C^k = [[-d_X^{k+1}, 0], [f^{k+1}, d_Y^k]].
ComplexSeq mapping_cone(const ComplexMorphism& f);

/// Whether the complex is exact at every interior term (and at the ends if requested).
bool is_exact_complex(const ComplexSeq& x, bool left_end_mono, bool right_end_epi);

// ---------------------------------------------------------------------------
// Resolutions and Ext

/// Q_{L-1} -> ... -> Q_0 -> m with Q_i in degree -i, plus the final syzygy.
struct ProjectiveResolution {
  ComplexSeq complex;
  Morphism augmentation;       // Q_0 -> m
  Morphism syzygy_inclusion;   // Omega^L m -> Q_{L-1}
};
/// m -> I^0 -> ... -> I^{L-1} with I^i in degree i, plus the final cosyzygy.
struct InjectiveCoresolution {
  ComplexSeq complex;
  Morphism coaugmentation;       // m -> I^0
  Morphism cosyzygy_projection;  // I^{L-1} -> Omega^{-L} m
};

Morphism projective_cover(const Module& m);
Morphism injective_envelope(const Module& m);
/// `length` counts the projective terms; a length of 0 is treated as 1.
ProjectiveResolution min_projective_resolution(const Module& m, std::size_t length);
InjectiveCoresolution min_injective_coresolution(const Module& m, std::size_t length);
/// Maps P_v -> m sending e_v to x (a vector in m_v).
Morphism map_from_projective(const Module& pv, std::size_t v, const Mat& x, const Module& m);

std::size_t ext_dim(const Module& m, const Module& n, std::size_t k);

/// Ext^1..Ext^max_k against many targets from one resolution.
class ExtCalculator {
 public:
  ExtCalculator(const Module& m, std::size_t max_k);
  std::size_t dim(const Module& n, std::size_t k) const;

 private:
  ProjectiveResolution res_;
  std::size_t max_k_;
};

/// Dimension of the cohomology of A --f--> B --g--> C of vector-space maps,
/// given as matrices on flattened coordinates.
std::size_t middle_cohomology(const Mat& f, const Mat& g, std::size_t dim_b);

}  // namespace nexakt
