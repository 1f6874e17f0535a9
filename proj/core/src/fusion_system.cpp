#include "fusionlab/fusion_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fusionlab {

FusionSystem FusionSystem::build(GroupPtr g, Prime p, const Limits& limits) {
  FusionSystem f(std::move(g), p);
  const Group& grp = *f.group_;
  const Subgroup s = sylow_subgroup(Subgroup::whole(f.group_), p);
  f.subgroups_ = all_subgroups(s, limits.subgroup_cap);
  const std::size_t n = f.subgroups_.size();

  f.homs_.assign(n * n, {});
  f.conjugators_.assign(n, {});
  f.images_.assign(n, {});

  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& src = f.subgroups_[i];
    std::vector<GroupHom> to_s;
    for (ElementId x = 0; x < grp.order(); ++x) {
      std::vector<ElementId> images;
      images.reserve(src.order());
      bool inside = true;
      for (auto y : src.members()) {
        const ElementId z = grp.conjugate(x, y);
        if (!s.contains(z)) {
          inside = false;
          break;
        }
        images.push_back(z);
      }
      if (!inside) continue;
      GroupHom phi = GroupHom::trusted(src, s, std::move(images));
      if (std::find(to_s.begin(), to_s.end(), phi) != to_s.end()) continue;
      f.images_[i].push_back(f.index_of(phi.image()));
      f.conjugators_[i].push_back(x);
      to_s.push_back(std::move(phi));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup& dst = f.subgroups_[j];
      auto& out = f.homs_[i * n + j];
      for (std::size_t k = 0; k < to_s.size(); ++k) {
        const Subgroup& im = f.subgroups_[f.images_[i][k]];
        if (im.is_subgroup_of(dst)) out.push_back(GroupHom::trusted(src, dst, to_s[k].images()));
      }
    }
  }
  return f;
}

std::size_t FusionSystem::index_of(const Subgroup& p) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), p);
  if (it == subgroups_.end() || !(*it == p)) throw InvalidInput("subgroup is not contained in the Sylow subgroup");
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<GroupHom> hom_set(const FusionSystem& f, const Subgroup& p, const Subgroup& q) {
  return f.homs(f.index_of(p), f.index_of(q));
}

std::vector<std::vector<std::size_t>> f_conjugacy_classes(const FusionSystem& f) {
  const std::size_t n = f.subgroups().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < f.homs_to_sylow(i).size(); ++k) {
      const std::size_t a = find(i), b = find(f.image_index(i, k));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::int64_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return classes;
}

namespace {

/// First element of C_S(Q) outside Q, if any.
std::optional<ElementId> centralizer_escape(const FusionSystem& f, const Subgroup& q) {
  const Subgroup c = centralizer(f.sylow(), q);
  for (auto x : c.members()) {
    if (!q.contains(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

bool is_centric(const FusionSystem& f, const Subgroup& p) {
  const std::size_t i = f.index_of(p);
  for (std::size_t k = 0; k < f.homs_to_sylow(i).size(); ++k) {
    if (centralizer_escape(f, f.subgroups()[f.image_index(i, k)])) return false;
  }
  return true;
}

std::vector<CentricClass> centric_classes(const FusionSystem& f) {
  std::vector<CentricClass> out;
  for (auto& members : f_conjugacy_classes(f)) {
    CentricClass cls;
    cls.members = members;
    cls.centric = true;
    for (auto q : members) {
      if (auto x = centralizer_escape(f, f.subgroups()[q])) {
        cls.centric = false;
        cls.witness_subgroup = q;
        cls.witness_element = *x;
        break;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> centric_subgroups(const FusionSystem& f) {
  std::vector<std::size_t> out;
  for (const auto& cls : centric_classes(f)) {
    if (cls.centric) out.insert(out.end(), cls.members.begin(), cls.members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr automizer_group(const FusionSystem& f, std::size_t i) {
  const Subgroup& p = f.subgroups()[i];
  std::vector<Permutation> perms;
  for (const auto& alpha : f.automizer(i)) {
    Permutation perm(p.order());
    for (std::size_t k = 0; k < p.order(); ++k) perm[k] = static_cast<std::uint32_t>(p.position(alpha.images()[k]));
    perms.push_back(std::move(perm));
  }
  auto g = std::make_shared<const Group>(Group::from_permutations(p.order(), perms));
  if (g->order() != f.automizer(i).size()) throw InternalError("automizer is not closed under composition");
  return g;
}

namespace {

/// Subgroup of S generated by x⁻¹α(x) for α in the given automorphism
/// permutations of P.
void add_commutator_generators(const FusionSystem& f, const Subgroup& p, const Group& autos,
                               const std::vector<ElementId>& which, std::set<ElementId>& gens) {
  const Group& g = f.group();
  for (auto a : which) {
    const Permutation& perm = autos.permutations()[a];
    for (std::size_t k = 0; k < p.order(); ++k) {
      const ElementId x = p.members()[k];
      gens.insert(g.mul(g.inv(x), p.members()[perm[k]]));
    }
  }
}

}  // namespace

Subgroup focal_subgroup(const FusionSystem& f) {
  std::set<ElementId> gens;
  for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
    auto autos = automizer_group(f, i);
    std::vector<ElementId> all(autos->order());
    std::iota(all.begin(), all.end(), 0u);
    add_commutator_generators(f, f.subgroups()[i], *autos, all, gens);
  }
  std::vector<ElementId> list(gens.begin(), gens.end());
  return Subgroup::generated_by(f.group_ptr(), list);
}

Subgroup hyperfocal_subgroup(const FusionSystem& f) {
  std::set<ElementId> gens;
  for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
    auto autos = automizer_group(f, i);
    const Subgroup residual = o_p_residual(Subgroup::whole(autos), f.prime());
    add_commutator_generators(f, f.subgroups()[i], *autos, residual.members(), gens);
  }
  std::vector<ElementId> list(gens.begin(), gens.end());
  return Subgroup::generated_by(f.group_ptr(), list);
}

NilpotencyVerdict is_nilpotent(const FusionSystem& f) {
  const Group& g = f.group();
  const Subgroup& s = f.sylow();
  for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
    const Subgroup& p = f.subgroups()[i];
    // Maps induced by S on P.
    std::set<std::vector<ElementId>> realized;
    for (auto x : s.members()) {
      std::vector<ElementId> images;
      images.reserve(p.order());
      for (auto y : p.members()) images.push_back(g.conjugate(x, y));
      realized.insert(std::move(images));
    }
    for (const auto& phi : f.homs_to_sylow(i)) {
      if (!realized.count(phi.images())) {
        NilpotencyVerdict v;
        v.nilpotent = false;
        v.witness_subgroup = i;
        v.witness_morphism = phi;
        return v;
      }
    }
  }
  return {};
}

}  // namespace fusionlab
