#include <doctest.h>

#include <algorithm>
#include <set>

#include "catalog_oracle.hpp"
#include "fusionlab/catalog.hpp"
#include "fusionlab/fusion_system.hpp"
#include "fusionlab/harness.hpp"

using namespace fusionlab;
using testing_support::raw;

namespace {

FusionSystem fs(const char* d, std::uint32_t p) { return FusionSystem::build(group_from_descriptor(d), Prime(p)); }

std::size_t first_of_order(const FusionSystem& f, std::size_t order) {
  for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
    if (f.subgroups()[i].order() == order) return i;
  }
  FAIL("no subgroup of order " << order);
  return 0;
}

}  // namespace

TEST_CASE("fusion system construction") {
  auto d8 = fs("D8", 2);
  CHECK(d8.sylow().order() == 8);
  CHECK(d8.subgroups().size() == 10);
  for (std::size_t i = 0; i < d8.subgroups().size(); ++i) {
    for (const auto& phi : d8.homs_to_sylow(i)) {
      // every morphism is realized inside S itself
      bool inner = false;
      for (auto s : d8.sylow().members()) {
        if (phi == GroupHom::conjugation(s, d8.subgroups()[i], d8.sylow())) inner = true;
      }
      CHECK(inner);
    }
  }

  auto s3 = fs("S3", 3);
  CHECK(s3.sylow().order() == 3);
  CHECK(s3.automizer(s3.sylow_index()).size() == 2);
  auto a4 = fs("A4", 2);
  CHECK(a4.sylow().order() == 4);
  CHECK(a4.automizer(a4.sylow_index()).size() == 3);
}

TEST_CASE("hom sets") {
  auto v4 = fs("V4", 2);
  for (std::size_t i = 0; i < v4.subgroups().size(); ++i) {
    REQUIRE(v4.homs_to_sylow(i).size() == 1);
    CHECK(v4.homs_to_sylow(i).front().is_identity_map());
  }

  auto s3 = fs("S3", 3);
  const auto& aut = s3.automizer(s3.sylow_index());
  CHECK(aut[0].is_identity_map());
  const ElementId x = s3.sylow().members()[1];
  CHECK(aut[1](x) == s3.group().inv(x));

  auto a4 = fs("A4", 2);
  for (std::size_t i = 0; i < a4.subgroups().size(); ++i) {
    if (a4.subgroups()[i].order() == 2) CHECK(a4.homs_to_sylow(i).size() == 3);
  }
  CHECK_THROWS_AS(a4.index_of(Subgroup::whole(a4.group_ptr())), InvalidInput);
  CHECK_THROWS_AS(hom_set(a4, Subgroup::whole(a4.group_ptr()), a4.sylow()), InvalidInput);
}

TEST_CASE("hom set sizes agree with direct enumeration over G") {
  for (const auto& inst : standard_instances()) {
    auto g = group_from_descriptor(inst.descriptor);
    if (g->order() > 24) continue;
    CAPTURE(inst.descriptor);
    CAPTURE(inst.p);
    const auto f = FusionSystem::build(g, Prime(inst.p));
    const auto r = raw(*g);
    for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
      const auto pi = testing_support::to_raw(*g, r, f.subgroups()[i].members());
      for (std::size_t j = 0; j < f.subgroups().size(); ++j) {
        if (f.subgroups()[j].order() < f.subgroups()[i].order()) continue;
        const auto qj = testing_support::to_raw(*g, r, f.subgroups()[j].members());
        REQUIRE(f.homs(i, j).size() == oracle::hom_count(r, pi, qj));
      }
    }
  }
}

TEST_CASE("Hom_F contains inclusions and Aut_S") {
  auto f = fs("S4", 2);
  const auto& subs = f.subgroups();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (!std::includes(subs[j].members().begin(), subs[j].members().end(), subs[i].members().begin(),
                         subs[i].members().end())) {
        continue;
      }
      const auto inc = GroupHom::inclusion(subs[i], subs[j]);
      CHECK(std::find(f.homs(i, j).begin(), f.homs(i, j).end(), inc) != f.homs(i, j).end());
    }
    for (auto s : f.sylow().members()) {
      const auto& members = subs[i].members();
      if (!std::all_of(members.begin(), members.end(),
                       [&](ElementId x) { return subs[i].contains(f.group().conjugate(s, x)); })) {
        continue;
      }
      const auto c = GroupHom::conjugation(s, subs[i], subs[i]);
      CHECK(std::find(f.automizer(i).begin(), f.automizer(i).end(), c) != f.automizer(i).end());
    }
  }
}

TEST_CASE("F-conjugacy classes") {
  auto v4 = fs("V4", 2);
  CHECK(f_conjugacy_classes(v4).size() == 5);
  auto a4 = fs("A4", 2);
  const auto classes = f_conjugacy_classes(a4);
  REQUIRE(classes.size() == 3);
  CHECK(classes[1].size() == 3);
  CHECK(f_conjugacy_classes(fs("S3", 3)).size() == 2);
  // classes refine the order partition
  auto s4 = fs("S4", 2);
  for (const auto& c : f_conjugacy_classes(s4)) {
    for (auto i : c) CHECK(s4.subgroups()[i].order() == s4.subgroups()[c.front()].order());
  }
}

TEST_CASE("centric subgroups") {
  auto a4 = fs("A4", 2);
  CHECK(is_centric(a4, a4.sylow()));
  CHECK_FALSE(is_centric(a4, a4.subgroups()[first_of_order(a4, 2)]));
  CHECK(centric_subgroups(a4) == std::vector<std::size_t>{a4.sylow_index()});

  for (const char* d : {"V4", "C9", "C4"}) {
    auto f = fs(d, d[1] == '9' ? 3 : 2);
    CHECK(centric_subgroups(f) == std::vector<std::size_t>{f.sylow_index()});
  }

  // D8: the two Klein fours and D8 itself; C4 as well
  auto d8 = fs("D8", 2);
  CHECK(centric_subgroups(d8).size() == 4);

  for (const auto& inst : standard_instances()) {
    auto f = FusionSystem::build(group_from_descriptor(inst.descriptor), Prime(inst.p));
    for (const auto& cls : centric_classes(f)) {
      for (auto i : cls.members) CHECK(is_centric(f, f.subgroups()[i]) == cls.centric);
      if (!cls.centric) {
        REQUIRE(cls.witness_subgroup.has_value());
        REQUIRE(cls.witness_element.has_value());
        const Subgroup& q = f.subgroups()[*cls.witness_subgroup];
        CHECK_FALSE(q.contains(*cls.witness_element));
        CHECK(centralizer(f.sylow(), q).contains(*cls.witness_element));
      }
    }
  }
}

TEST_CASE("focal and hyperfocal examples") {
  auto s3 = fs("S3", 3);
  CHECK(focal_subgroup(s3) == s3.sylow());
  CHECK(hyperfocal_subgroup(s3) == s3.sylow());
  auto a4 = fs("A4", 2);
  CHECK(focal_subgroup(a4) == a4.sylow());
  CHECK(hyperfocal_subgroup(a4) == a4.sylow());
  for (const char* d : {"D8", "Q8", "C9", "V4"}) {
    auto f = fs(d, d[1] == '9' ? 3 : 2);
    CHECK(hyperfocal_subgroup(f).is_trivial());
    CHECK(focal_subgroup(f) == derived_subgroup(f.sylow()));
  }
  CHECK(focal_subgroup(fs("D8", 2)).order() == 2);
}

TEST_CASE("focal and hyperfocal subgroup theorems") {
  // foc = S ∩ [G,G] and hyp = S ∩ O^p(G), both computed on raw permutations
  for (const auto& inst : standard_instances()) {
    CAPTURE(inst.descriptor);
    CAPTURE(inst.p);
    auto g = group_from_descriptor(inst.descriptor);
    const auto f = FusionSystem::build(g, Prime(inst.p));
    const auto r = raw(*g);
    const auto s = testing_support::to_raw(*g, r, f.sylow().members());
    const auto foc = testing_support::intersect(s, oracle::commutator_subgroup(r));
    const auto hyp = testing_support::intersect(s, oracle::p_prime_generated(r, inst.p));
    CHECK(focal_subgroup(f).members() == testing_support::to_ids(*g, r, foc));
    CHECK(hyperfocal_subgroup(f).members() == testing_support::to_ids(*g, r, hyp));
  }
}

TEST_CASE("focal subgroup structure") {
  for (const auto& inst : standard_instances()) {
    auto f = FusionSystem::build(group_from_descriptor(inst.descriptor), Prime(inst.p));
    const Subgroup foc = focal_subgroup(f);
    const Subgroup hyp = hyperfocal_subgroup(f);
    auto inside = [](const Subgroup& a, const Subgroup& b) {
      return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
    };
    CHECK(inside(hyp, foc));
    CHECK(inside(derived_subgroup(f.sylow()), foc));
    CHECK(is_normal(foc, f.sylow()));
    CHECK(is_normal(hyp, f.sylow()));
    // strongly closed: F-morphisms send foc ∩ P into foc
    for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
      for (const auto& phi : f.homs_to_sylow(i)) {
        for (auto x : f.subgroups()[i].members()) {
          if (foc.contains(x)) REQUIRE(foc.contains(phi(x)));
          if (hyp.contains(x)) REQUIRE(hyp.contains(phi(x)));
        }
      }
    }
  }
}

TEST_CASE("automizer as a permutation group") {
  auto a4 = fs("A4", 2);
  CHECK(automizer_group(a4, a4.sylow_index())->order() == 3);
  auto s4 = fs("S4", 2);
  const auto aut_s = automizer_group(s4, s4.sylow_index());
  CHECK(aut_s->order() == 4);  // D8/Z(D8)
}

TEST_CASE("nilpotency by hom-set comparison") {
  CHECK(is_nilpotent(fs("D8", 2)).nilpotent);
  CHECK(is_nilpotent(fs("S3", 2)).nilpotent);
  const auto v = is_nilpotent(fs("S3", 3));
  CHECK_FALSE(v.nilpotent);
  REQUIRE(v.witness_subgroup.has_value());
  REQUIRE(v.witness_morphism.has_value());
  auto s3 = fs("S3", 3);
  CHECK(*v.witness_subgroup == s3.sylow_index());
  const ElementId x = s3.sylow().members()[1];
  CHECK((*v.witness_morphism)(x) == s3.group().inv(x));

  for (const auto& inst : standard_instances()) {
    CAPTURE(inst.descriptor);
    CAPTURE(inst.p);
    auto g = group_from_descriptor(inst.descriptor);
    const auto f = FusionSystem::build(g, Prime(inst.p));
    const bool nil = is_nilpotent(f).nilpotent;
    CHECK(nil == hyperfocal_subgroup(f).is_trivial());
    CHECK(nil == oracle::has_normal_p_complement(raw(*g), inst.p));
  }
}

TEST_CASE("hom sets compose") {
  for (const char* d : {"S4", "A4", "SL23", "S3"}) {
    for (std::uint32_t p : {2u, 3u}) {
      auto f = fs(d, p);
      const auto n = f.subgroups().size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& phi : f.homs(i, j)) {
            for (std::size_t k = 0; k < n; ++k) {
              for (const auto& psi : f.homs(j, k)) {
                const GroupHom comp = psi.after(phi);
                REQUIRE(std::find(f.homs(i, k).begin(), f.homs(i, k).end(), comp) != f.homs(i, k).end());
              }
            }
          }
        }
      }
    }
  }
}
