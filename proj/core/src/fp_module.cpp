#include "fusionlab/fp_module.hpp"

#include <algorithm>

namespace fusionlab {

namespace {

std::optional<std::size_t> first_differing_column(const FpMatrix& a, const FpMatrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a.at(r, c) != b.at(r, c)) return c;
    }
  }
  return std::nullopt;
}

void require_sylow_action(const FpModule& m, const FusionSystem& f) {
  if (!(m.acting_group() == f.sylow())) {
    throw InvalidInput("module must be a representation of the Sylow subgroup of the fusion system");
  }
}

ModuleCheck morphism_check(const FpModule& m, const FusionSystem& f, const std::vector<std::size_t>& which) {
  require_sylow_action(m, f);
  for (auto i : which) {
    const Subgroup& p = f.subgroups()[i];
    const auto& homs = f.homs_to_sylow(i);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      for (std::size_t t = 0; t < p.order(); ++t) {
        const ElementId x = p.members()[t];
        const ElementId y = homs[k].images()[t];
        if (x == y) continue;
        if (auto col = first_differing_column(m.action(y), m.action(x))) {
          return {false, ModuleWitness{i, k, x, *col}};
        }
      }
    }
  }
  return {};
}

}  // namespace

FpModule FpModule::from_action(Subgroup acting, Prime p, std::size_t dim, std::vector<FpMatrix> matrices,
                               std::string label) {
  if (matrices.size() != acting.order()) throw InvalidInput("need one action matrix per group element");
  FpModule m(std::move(acting), p, dim);
  m.matrices_ = std::move(matrices);
  m.label_ = std::move(label);
  m.validate();
  return m;
}

FpModule FpModule::from_generators(Subgroup acting, Prime p, std::size_t dim, std::span<const ElementId> gens,
                                   const std::vector<FpMatrix>& matrices, std::string label) {
  if (gens.size() != matrices.size()) {
    throw InvalidInput("module has " + std::to_string(matrices.size()) + " generator matrices for " +
                       std::to_string(gens.size()) + " generators");
  }
  for (const auto& a : matrices) {
    if (a.rows() != dim || a.cols() != dim || !(a.prime() == p)) {
      throw InvalidInput("generator matrix has the wrong shape or field");
    }
  }
  for (auto s : gens) {
    if (!acting.contains(s)) throw InvalidInput("module generator is not in the acting group");
  }
  const Group& g = acting.parent();
  std::vector<std::optional<FpMatrix>> by_pos(acting.order());
  by_pos[0] = FpMatrix::identity(p, dim);
  std::vector<ElementId> queue{g.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const ElementId x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const ElementId y = g.mul(x, gens[k]);
      auto& slot = by_pos[acting.position(y)];
      if (!slot) {
        slot = *by_pos[acting.position(x)] * matrices[k];
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != acting.order()) throw InvalidInput("module generators do not generate the acting group");
  std::vector<FpMatrix> mats;
  mats.reserve(by_pos.size());
  for (auto& slot : by_pos) mats.push_back(std::move(*slot));
  return from_action(std::move(acting), p, dim, std::move(mats), std::move(label));
}

void FpModule::validate() const {
  const Group& g = acting_.parent();
  for (const auto& a : matrices_) {
    if (a.rows() != dim_ || a.cols() != dim_ || !(a.prime() == p_)) {
      throw InvalidInput("action matrix has the wrong shape or field");
    }
  }
  if (!matrices_[0].is_identity()) throw InvalidInput("identity element does not act as the identity matrix");
  const auto& mem = acting_.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j < mem.size(); ++j) {
      const ElementId xy = g.mul(mem[i], mem[j]);
      if (!(matrices_[acting_.position(xy)] == matrices_[i] * matrices_[j])) {
        throw InvalidInput("action is not a homomorphism: generator matrices do not satisfy the group relations");
      }
    }
  }
  // Invertibility follows: action(x)·action(x⁻¹) = action(1) = I.
}

FpSubspace FpModule::fixed_points() const {
  std::vector<FpMatrix> blocks;
  const FpMatrix id = FpMatrix::identity(p_, dim_);
  for (const auto& a : matrices_) blocks.push_back(a - id);
  return kernel(vstack(blocks, p_, dim_));
}

FpModule trivial_module(const Subgroup& acting, Prime p, std::size_t dim) {
  std::vector<FpMatrix> mats(acting.order(), FpMatrix::identity(p, dim));
  return FpModule::from_action(acting, p, dim, std::move(mats), dim == 1 ? "trivial" : "trivial^" + std::to_string(dim));
}

FpModule regular_module(const GroupPtr& g, Prime p) {
  const std::size_t n = g->order();
  std::vector<FpMatrix> mats;
  mats.reserve(n);
  for (ElementId x = 0; x < n; ++x) {
    std::vector<FpMatrix::Triplet> t;
    for (ElementId y = 0; y < n; ++y) t.push_back({g->mul(x, y), y, 1});
    mats.push_back(FpMatrix::from_triplets(p, n, n, std::move(t)));
  }
  return FpModule::from_action(Subgroup::whole(g), p, n, std::move(mats), "regular");
}

FpModule regular_quotient_module(const Subgroup& s, const Subgroup& k, Prime p) {
  const Quotient q = quotient_group(s, k);
  FpModule m = pullback_module(regular_module(q.group, p), q.projection);
  m.set_label("F" + std::to_string(p.value()) + "[S/K]");
  return m;
}

FpModule restrict_module(const FpModule& m, const Subgroup& sub) {
  if (!sub.is_subgroup_of(m.acting_group())) throw InvalidInput("restriction to a subgroup outside the acting group");
  std::vector<FpMatrix> mats;
  mats.reserve(sub.order());
  for (auto x : sub.members()) mats.push_back(m.action(x));
  return FpModule::from_action(sub, m.prime(), m.dim(), std::move(mats), m.label());
}

FpModule pullback_module(const FpModule& m, const GroupHom& f) {
  if (!f.codomain().is_subgroup_of(m.acting_group()) &&
      !std::all_of(f.images().begin(), f.images().end(), [&](ElementId y) { return m.acting_group().contains(y); })) {
    throw InvalidInput("pullback along a map that does not land in the acting group");
  }
  std::vector<FpMatrix> mats;
  mats.reserve(f.domain().order());
  for (auto y : f.images()) mats.push_back(m.action(y));
  return FpModule::from_action(f.domain(), m.prime(), m.dim(), std::move(mats), m.label());
}

ModuleCheck is_F_invariant(const FpModule& m, const FusionSystem& f) {
  require_sylow_action(m, f);
  const Subgroup foc = focal_subgroup(f);
  const FpMatrix id = FpMatrix::identity(m.prime(), m.dim());
  for (auto x : foc.members()) {
    if (auto col = first_differing_column(m.action(x), id)) {
      ModuleWitness w;
      w.element = x;
      w.column = *col;
      return {false, w};
    }
  }
  return {};
}

ModuleCheck is_F_invariant_direct(const FpModule& m, const FusionSystem& f) {
  std::vector<std::size_t> all(f.subgroups().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return morphism_check(m, f, all);
}

ModuleCheck is_fusion_compatible(const FpModule& m, const FusionSystem& f, bool all_subgroups) {
  if (all_subgroups) return is_F_invariant_direct(m, f);
  return morphism_check(m, f, centric_subgroups(f));
}

}  // namespace fusionlab
