#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fusionlab/group.hpp"

namespace fusionlab {

/// The fusion system F_S(G) of a finite group at a prime: a Sylow subgroup S,
/// every subgroup P ≤ S, and all Hom-sets Hom_F(P,Q) of conjugation-induced
/// injections. Hom-sets are computed eagerly; the object is immutable.
class FusionSystem {
 public:
  static FusionSystem build(GroupPtr g, Prime p, const Limits& limits = {});

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Prime prime() const { return p_; }
  const Subgroup& sylow() const { return subgroups_.back(); }
  std::size_t sylow_index() const { return subgroups_.size() - 1; }

  /// All P ≤ S, sorted by (order, members); the last entry is S.
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  /// Index of P in subgroups(); throws InvalidInput if P is not a subgroup of S.
  std::size_t index_of(const Subgroup& p) const;

  /// Hom_F(P_i, P_j), deduplicated as maps, ordered by the lowest conjugating
  /// element realizing each map.
  const std::vector<GroupHom>& homs(std::size_t i, std::size_t j) const { return homs_[i * subgroups_.size() + j]; }
  /// Hom_F(P_i, S)
  const std::vector<GroupHom>& homs_to_sylow(std::size_t i) const { return homs(i, sylow_index()); }
  /// Aut_F(P_i)
  const std::vector<GroupHom>& automizer(std::size_t i) const { return homs(i, i); }
  /// Lowest g ∈ G realizing homs_to_sylow(i)[k] as x ↦ g x g⁻¹.
  ElementId conjugator(std::size_t i, std::size_t k) const { return conjugators_[i][k]; }
  /// Index of the image subgroup of homs_to_sylow(i)[k].
  std::size_t image_index(std::size_t i, std::size_t k) const { return images_[i][k]; }

 private:
  FusionSystem(GroupPtr g, Prime p) : group_(std::move(g)), p_(p) {}

  GroupPtr group_;
  Prime p_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<GroupHom>> homs_;
  std::vector<std::vector<ElementId>> conjugators_;
  std::vector<std::vector<std::size_t>> images_;
};

/// Hom_F(P, Q) for arbitrary P, Q ≤ S.
std::vector<GroupHom> hom_set(const FusionSystem& f, const Subgroup& p, const Subgroup& q);

/// Partition of subgroup indices into F-conjugacy classes, each class sorted,
/// classes ordered by their first member.
std::vector<std::vector<std::size_t>> f_conjugacy_classes(const FusionSystem& f);

struct CentricClass {
  std::vector<std::size_t> members;  // subgroup indices
  bool centric = false;
  /// For non-centric classes: an F-conjugate Q and an element of C_S(Q) outside Q.
  std::optional<std::size_t> witness_subgroup;
  std::optional<ElementId> witness_element;
};

/// P is F-centric iff C_S(Q) ≤ Q for every F-conjugate Q of P.
bool is_centric(const FusionSystem& f, const Subgroup& p);
std::vector<CentricClass> centric_classes(const FusionSystem& f);
/// Indices of all F-centric subgroups, ascending.
std::vector<std::size_t> centric_subgroups(const FusionSystem& f);

/// ⟨x⁻¹α(x) : P ≤ S, α ∈ Aut_F(P), x ∈ P⟩
Subgroup focal_subgroup(const FusionSystem& f);
/// ⟨x⁻¹α(x) : P ≤ S, α ∈ O^p(Aut_F(P)), x ∈ P⟩
Subgroup hyperfocal_subgroup(const FusionSystem& f);

/// Aut_F(P_i) as a permutation group on the positions of P_i's members.
GroupPtr automizer_group(const FusionSystem& f, std::size_t i);

struct NilpotencyVerdict {
  bool nilpotent = true;
  /// On failure: a subgroup index and a morphism of Hom_F(P,S) that no
  /// element of S realizes.
  std::optional<std::size_t> witness_subgroup;
  std::optional<GroupHom> witness_morphism;
};

/// F = F_S(S): every Hom_F(P,S) coincides with the maps induced by S.
NilpotencyVerdict is_nilpotent(const FusionSystem& f);

}  // namespace fusionlab
