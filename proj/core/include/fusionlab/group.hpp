#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fusionlab/prime_field.hpp"

namespace fusionlab {

using ElementId = std::uint32_t;

/// Images of the points 0..degree-1. Composition is right-to-left:
/// (a*b)(i) = a(b(i)).
using Permutation = std::vector<std::uint32_t>;

struct Limits {
  std::size_t order_cap = 20000;     // closure of permutation generators
  std::size_t subgroup_cap = 256;    // largest group whose subgroups we enumerate
  std::size_t budget_mb = 512;       // cochain matrix payload
};

/// A finite group stored as a dense multiplication table. Element 0 is the
/// identity; ids are contiguous 0..order()-1. Immutable once built.
class Group {
 public:
  /// `table[a * n + b]` is the id of a*b. Validates closure, the identity
  /// row/column at id 0, the Latin-square property and inverses.
  /// Associativity is not checked here; see verify_associative().
  static Group from_table(std::vector<ElementId> table, std::string name = {});

  /// Closure of permutation generators on `degree` points. Elements are
  /// numbered in lexicographic order of their image arrays, so the identity
  /// gets id 0. Throws SizeLimitError beyond `order_cap`.
  static Group from_permutations(std::size_t degree, std::span<const Permutation> gens,
                                 std::size_t order_cap = Limits{}.order_cap, std::string name = {});

  std::size_t order() const { return order_; }
  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, long long e) const;
  /// g x g⁻¹
  ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }
  /// x⁻¹ y⁻¹ x y
  ElementId commutator(ElementId x, ElementId y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  std::size_t element_order(ElementId a) const { return element_order_[a]; }
  std::size_t exponent() const;
  bool is_abelian() const;

  /// Exhaustive associativity check, O(n³).
  bool verify_associative() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Permutation images kept for display; empty for table-built groups.
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  /// Ids of the generators the group was built from (permutation groups only).
  const std::vector<ElementId>& input_generators() const { return input_generators_; }

 private:
  Group() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::size_t> element_order_;
  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::vector<ElementId> input_generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup of a parent group, as a sorted member list.
class Subgroup {
 public:
  /// Validates that `members` is a subgroup of `parent`.
  Subgroup(GroupPtr parent, std::vector<ElementId> members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup generated_by(GroupPtr parent, std::span<const ElementId> gens);

  const Group& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<ElementId>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }

  bool contains(ElementId x) const { return x < mask_.size() && mask_[x]; }
  bool is_subgroup_of(const Subgroup& other) const;
  bool same_parent(const Subgroup& other) const { return parent_ == other.parent_; }

  /// Index of `x` in members(); throws if x is not a member.
  std::size_t position(ElementId x) const;

  /// Greedy generating set: repeatedly the lowest id not yet generated.
  std::vector<ElementId> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  /// Order by (order, member list).
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
  }

 private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, std::vector<ElementId> members, Unchecked);

  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<bool> mask_;
};

/// A homomorphism between subgroups, stored as images aligned with
/// domain().members().
class GroupHom {
 public:
  /// Validates the homomorphism property exhaustively.
  GroupHom(Subgroup domain, Subgroup codomain, std::vector<ElementId> images);
  /// Skips validation; for maps known to be homomorphisms (conjugations).
  static GroupHom trusted(Subgroup domain, Subgroup codomain, std::vector<ElementId> images);

  static GroupHom inclusion(const Subgroup& domain, const Subgroup& codomain);
  /// x ↦ g x g⁻¹ from `domain` into `codomain`.
  static GroupHom conjugation(ElementId g, const Subgroup& domain, const Subgroup& codomain);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  const std::vector<ElementId>& images() const { return images_; }
  ElementId operator()(ElementId x) const { return images_[domain_.position(x)]; }

  bool is_injective() const;
  bool is_identity_map() const;
  Subgroup image() const;
  /// this ∘ first. Requires first.codomain() members to lie in this->domain().
  GroupHom after(const GroupHom& first) const;
  /// Restriction to a subgroup of the domain.
  GroupHom restrict_to(const Subgroup& sub) const;

  /// Same domain and same images (codomain is ignored).
  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.images_ == b.images_;
  }

 private:
  GroupHom(Subgroup domain, Subgroup codomain, std::vector<ElementId> images, bool validate);

  Subgroup domain_;
  Subgroup codomain_;
  std::vector<ElementId> images_;
};

struct Quotient {
  GroupPtr group;
  GroupHom projection;  // from the numerator onto Subgroup::whole(group)
};

// Subgroup machinery. All functions take subgroups of a common parent.

bool is_normal(const Subgroup& n, const Subgroup& h);
Subgroup centralizer(const Subgroup& h, const Subgroup& k);
Subgroup normalizer(const Subgroup& h, const Subgroup& k);
Subgroup center(const Subgroup& h);
/// ⟨[x,y] : x,y ∈ H⟩
Subgroup derived_subgroup(const Subgroup& h);
/// Subgroup generated by the elements of order coprime to p.
Subgroup o_p_residual(const Subgroup& h, Prime p);
/// Every subgroup exactly once, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const Subgroup& h, std::size_t cap = Limits{}.subgroup_cap);
/// Deterministic Sylow p-subgroup by normalizer climbing from the lowest-id
/// element of order p.
Subgroup sylow_subgroup(const Subgroup& h, Prime p);
/// Coset group H/N; cosets numbered by their lowest-id member.
Quotient quotient_group(const Subgroup& h, const Subgroup& n);

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, std::uint32_t p);
bool is_p_power(std::size_t n, std::uint32_t p);

/// Convenience overloads on whole groups.
inline Subgroup sylow_subgroup(const GroupPtr& g, Prime p) { return sylow_subgroup(Subgroup::whole(g), p); }
inline Subgroup o_p_residual(const GroupPtr& g, Prime p) { return o_p_residual(Subgroup::whole(g), p); }

}  // namespace fusionlab
