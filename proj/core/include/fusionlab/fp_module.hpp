#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionlab/fp_linalg.hpp"
#include "fusionlab/fusion_system.hpp"
#include "fusionlab/group.hpp"

namespace fusionlab {

/// A finite-dimensional left F_p-representation of a finite group. Module
/// elements are column vectors and action(xy) = action(x)·action(y).
/// Construction verifies the homomorphism property exhaustively.
class FpModule {
 public:
  /// `matrices[k]` is the action of acting.members()[k].
  static FpModule from_action(Subgroup acting, Prime p, std::size_t dim, std::vector<FpMatrix> matrices,
                              std::string label = {});
  /// Extends generator matrices multiplicatively over the group generated
  /// by `gens`, which must be all of `acting`.
  static FpModule from_generators(Subgroup acting, Prime p, std::size_t dim, std::span<const ElementId> gens,
                                  const std::vector<FpMatrix>& matrices, std::string label = {});

  Prime prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Subgroup& acting_group() const { return acting_; }
  const FpMatrix& action(ElementId x) const { return matrices_[acting_.position(x)]; }
  bool acts_trivially(ElementId x) const { return action(x).is_identity(); }
  /// Vectors fixed by every element of the acting group.
  FpSubspace fixed_points() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  FpModule(Subgroup acting, Prime p, std::size_t dim) : acting_(std::move(acting)), p_(p), dim_(dim) {}
  void validate() const;

  Subgroup acting_;
  Prime p_;
  std::size_t dim_;
  std::vector<FpMatrix> matrices_;
  std::string label_;
};

FpModule trivial_module(const Subgroup& acting, Prime p, std::size_t dim);
/// F_p[G] for the whole group, G acting by left multiplication on the
/// basis indexed by element id.
FpModule regular_module(const GroupPtr& g, Prime p);
/// F_p[S/K] inflated to S: s acts by left multiplication on cosets.
FpModule regular_quotient_module(const Subgroup& s, const Subgroup& k, Prime p);
FpModule restrict_module(const FpModule& m, const Subgroup& sub);
/// Module over f.domain() with x acting as m.action(f(x)).
FpModule pullback_module(const FpModule& m, const GroupHom& f);

/// Why a module fails an invariance or compatibility test.
struct ModuleWitness {
  std::optional<std::size_t> subgroup;  // index into FusionSystem::subgroups()
  std::optional<std::size_t> morphism;  // index into homs_to_sylow(subgroup)
  ElementId element = 0;                // x with action(φ(x)) ≠ action(x), or x ∈ foc acting nontrivially
  std::size_t column = 0;               // first column where the two matrices differ
};

struct ModuleCheck {
  bool ok = true;
  std::optional<ModuleWitness> witness;
};

/// F-invariance via the focal subgroup: every x ∈ foc(F) acts as the identity.
/// Requires the acting group to be the Sylow subgroup of `f`.
ModuleCheck is_F_invariant(const FpModule& m, const FusionSystem& f);
/// F-invariance by the quantifier form: action(φ(x)) = action(x) for every
/// P ≤ S, φ ∈ Hom_F(P,S) and x ∈ P.
ModuleCheck is_F_invariant_direct(const FpModule& m, const FusionSystem& f);
/// action(φ(x)) = action(x) for every F-centric P (every P when
/// `all_subgroups`), φ ∈ Hom_F(P,S), x ∈ P. This is what makes the pullback
/// along φ a cochain map into the restricted module.
ModuleCheck is_fusion_compatible(const FpModule& m, const FusionSystem& f, bool all_subgroups = false);

}  // namespace fusionlab
