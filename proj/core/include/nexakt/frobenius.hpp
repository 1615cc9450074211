#pragma once

#include <cstddef>
#include <vector>

#include "nexakt/nstruct.hpp"

namespace nexakt {

/// Hom(a, b) together with the ideal of maps factoring through an injective
/// (equivalently projective) module, and coset representatives for the quotient.
struct StableHom {
  std::size_t dim = 0;
  std::vector<Morphism> hom;
  std::vector<Morphism> ideal;            // basis of I(a, b)
  std::vector<Morphism> representatives;  // hom elements spanning a complement of I(a, b)
};

/// A certified Frobenius setting: Lambda selfinjective, M n-cluster tilting and
/// closed under n-th syzygies and cosyzygies.
class FrobeniusCtx {
 public:
  FrobeniusCtx(AddCat m, std::size_t n, std::vector<Module> injectives);

  const AddCat& m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return m_.algebra_ptr(); }
  /// The indecomposable injectives I_v, one per vertex.
  const std::vector<Module>& injectives() const noexcept { return inj_; }

  /// The fixed sequence x -> I^1 -> ... -> I^n -> Sx (degrees 0..n+1) built from
  /// minimal injective envelopes.
  ComplexSeq coresolution(const Module& x) const;
  Module suspension(const Module& x) const;

 private:
  AddCat m_;
  std::size_t n_;
  std::vector<Module> inj_;
};

/// Throws SetupError naming the failing check.
FrobeniusCtx check_frobenius_setup(const AddCat& m, std::size_t n, const std::vector<Module>& indecs,
                                   bool complete = true);

/// Omega^{-k}(x) along minimal injective envelopes.
Module cosyzygy(const FrobeniusCtx& ctx, const Module& x, std::size_t k);

StableHom stable_hom(const FrobeniusCtx& ctx, const Module& a, const Module& b);
bool stably_zero(const FrobeniusCtx& ctx, const Morphism& f);
/// x with its projective-injective summands removed.
Module strip_projective_injective(const FrobeniusCtx& ctx, const Module& x);
bool stably_isomorphic(const FrobeniusCtx& ctx, const Module& x, const Module& y);

/// Extends f0 : x^lo -> y^lo to a chain map x -> y whose target has injective
/// middle terms (the usual lifting); returns the components in degree order.
std::vector<Morphism> lift_to_coresolution(const ComplexSeq& x, const ComplexSeq& y, const Morphism& f0);
/// Sigma f : Sx -> Sy computed along the given coresolutions of x and y.
Morphism suspend(const Morphism& f, const ComplexSeq& source_cores, const ComplexSeq& target_cores);
Morphism suspend(const FrobeniusCtx& ctx, const Morphism& f);

/// X^0 -a^0-> X^1 -> ... -> X^{n+1} -closing-> Sigma X^0 in the stable category.
struct Angle {
  std::vector<Module> objects;    // n + 2 objects
  std::vector<Morphism> maps;     // a^0 .. a^n
  Morphism closing;               // X^{n+1} -> Sigma X^0
  ComplexSeq first_coresolution;  // defines Sigma X^0 and Sigma on maps out of X^0

  std::size_t n() const noexcept { return objects.size() - 2; }
  Module sigma_first() const { return first_coresolution.term(first_coresolution.hi()); }
};

Angle standard_angle(const FrobeniusCtx& ctx, const Morphism& alpha0);
Angle trivial_angle(const FrobeniusCtx& ctx, const Module& x);
/// The angle of an n-exact sequence x, with closing map (-1)^n f^{n+1}.
Angle induced_angle(const FrobeniusCtx& ctx, const ComplexSeq& x);
/// X^1 -> ... -> X^{n+1} -> Sigma X^0 -> Sigma X^1 with last map (-1)^n Sigma a^0.
Angle rotate_angle(const FrobeniusCtx& ctx, const Angle& a);

struct AngleCheck {
  bool composites_vanish = true;
  bool exact = true;
  std::vector<ExactnessRecord> records;  // hom_dim and ranks are stable dimensions
  bool pass() const noexcept { return composites_vanish && exact; }
};
/// Exactness of the stable Hom(G, -) sequence at X^1, ..., X^{n+1}, Sigma X^0 for
/// every generator G (one full period, since Sigma permutes the stable objects).
AngleCheck verify_angle_exact(const FrobeniusCtx& ctx, const Angle& a);

struct AngleMorphism {
  Angle source;
  Angle target;
  std::vector<Morphism> comps;  // phi^0 .. phi^{n+1}
  Morphism sigma_phi0;          // Sigma phi^0 along the two first coresolutions
};
/// Completes (phi0, phi1) to a morphism of angles with every square stably
/// commutative. Throws PreconditionError if the first square does not commute.
AngleMorphism complete_angle_morphism(const FrobeniusCtx& ctx, const Angle& a, const Angle& b,
                                      const Morphism& phi0, const Morphism& phi1);
bool verify_angle_morphism(const FrobeniusCtx& ctx, const AngleMorphism& phi);
/// gamma^k = [[-a^{k+1}, 0], [phi^{k+1}, b^k]] with a^{n+2} = Sigma a^0, phi^{n+2} = Sigma phi^0.
Angle angle_cone(const FrobeniusCtx& ctx, const AngleMorphism& phi);

}  // namespace nexakt
