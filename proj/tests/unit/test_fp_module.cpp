#include <doctest.h>

#include "fusionlab/catalog.hpp"
#include "fusionlab/fp_module.hpp"
#include "fusionlab/harness.hpp"

using namespace fusionlab;

namespace {

FusionSystem fs(const char* d, std::uint32_t p) { return FusionSystem::build(group_from_descriptor(d), Prime(p)); }

}  // namespace

TEST_CASE("trivial modules") {
  auto f = fs("S3", 3);
  const FpModule m1 = trivial_module(f.sylow(), f.prime(), 1);
  const FpModule m3 = trivial_module(f.sylow(), f.prime(), 3);
  CHECK(m3.fixed_points().dim() == 3);
  for (auto x : f.sylow().members()) CHECK(m1.acts_trivially(x));
  for (const char* d : {"S3", "A4", "S4", "D8"}) {
    for (std::uint32_t p : {2u, 3u}) {
      auto g = fs(d, p);
      const FpModule t = trivial_module(g.sylow(), g.prime(), 2);
      CHECK(is_F_invariant(t, g).ok);
      CHECK(is_F_invariant_direct(t, g).ok);
      CHECK(is_fusion_compatible(t, g).ok);
    }
  }
}

TEST_CASE("regular quotient modules") {
  auto c2 = group_from_descriptor("C2");
  const FpModule reg2 = regular_quotient_module(Subgroup::whole(c2), Subgroup::trivial(c2), Prime(2));
  CHECK(reg2.dim() == 2);
  CHECK(reg2.action(1) == FpMatrix::from_rows(Prime(2), 2, {{0, 1}, {1, 0}}));

  auto c3 = group_from_descriptor("C3");
  const FpModule reg3 = regular_quotient_module(Subgroup::whole(c3), Subgroup::trivial(c3), Prime(3));
  CHECK(reg3.dim() == 3);
  CHECK(reg3.fixed_points().dim() == 1);
  const FpModule top = regular_quotient_module(Subgroup::whole(c3), Subgroup::whole(c3), Prime(3));
  CHECK(top.dim() == 1);
  CHECK(top.acts_trivially(1));

  auto d8 = group_from_descriptor("D8");
  const Subgroup whole = Subgroup::whole(d8);
  const FpModule ab = regular_quotient_module(whole, derived_subgroup(whole), Prime(2));
  CHECK(ab.dim() == 4);
  // the regular module of a p-group has a one-dimensional socle
  CHECK(regular_module(d8, Prime(2)).fixed_points().dim() == 1);

  auto s3 = group_from_descriptor("S3");
  const Subgroup t = Subgroup::generated_by(s3, std::vector<ElementId>{1});
  CHECK_THROWS_AS(regular_quotient_module(Subgroup::whole(s3), t, Prime(2)), InvalidInput);
}

TEST_CASE("module validation") {
  auto c3 = group_from_descriptor("C3");
  const Subgroup s = Subgroup::whole(c3);
  const Prime p3(3);
  // a generator of order 3 acting by -1 is not a representation
  const std::vector<ElementId> gens{1};
  CHECK_THROWS_AS(FpModule::from_generators(s, p3, 1, gens, {FpMatrix::from_rows(p3, 1, {{2}})}), InvalidInput);
  CHECK_THROWS_AS(FpModule::from_generators(s, p3, 2, gens, {FpMatrix::from_rows(p3, 2, {{1, 1}, {1, 1}})}),
                  InvalidInput);
  CHECK_THROWS_AS(FpModule::from_generators(s, p3, 2, gens, {FpMatrix::identity(p3, 3)}), InvalidInput);
  // unipotent Jordan block of size 2 has order 3 over F_3
  const FpModule j = FpModule::from_generators(s, p3, 2, gens, {FpMatrix::from_rows(p3, 2, {{1, 1}, {0, 1}})});
  CHECK(j.action(2) == FpMatrix::from_rows(p3, 2, {{1, 2}, {0, 1}}));
  CHECK(j.fixed_points().dim() == 1);
  // generators must generate the acting group
  auto v4 = group_from_descriptor("V4");
  const std::vector<ElementId> one{1};
  CHECK_THROWS_AS(
      FpModule::from_generators(Subgroup::whole(v4), Prime(2), 1, one, {FpMatrix::identity(Prime(2), 1)}),
      InvalidInput);
}

TEST_CASE("restriction and pullback") {
  auto d8 = group_from_descriptor("D8");
  const FpModule reg = regular_module(d8, Prime(2));
  const FpModule r1 = restrict_module(reg, Subgroup::trivial(d8));
  CHECK(r1.acting_group().order() == 1);
  CHECK(r1.fixed_points().dim() == 8);

  auto f = fs("S3", 3);
  const FpModule triv = trivial_module(f.sylow(), f.prime(), 2);
  const auto& phi = f.automizer(f.sylow_index())[1];
  const FpModule pb = pullback_module(triv, phi);
  for (auto x : f.sylow().members()) CHECK(pb.acts_trivially(x));

  // inflation of F_3[S/foc] for F_{C3}(S3): foc = S so the module is trivial of dim 1
  const Subgroup foc = focal_subgroup(f);
  const FpModule infl = regular_quotient_module(f.sylow(), foc, f.prime());
  CHECK(infl.dim() == 1);
  CHECK(infl.acts_trivially(f.sylow().members()[1]));

  // pullback along inversion of the Jordan block is its inverse action
  const std::vector<ElementId> gens{f.sylow().members()[1]};
  const FpModule j = FpModule::from_generators(f.sylow(), f.prime(), 2, gens,
                                               {FpMatrix::from_rows(f.prime(), 2, {{1, 1}, {0, 1}})});
  const FpModule jp = pullback_module(j, phi);
  CHECK(jp.action(gens[0]) == j.action(f.group().inv(gens[0])));
}

TEST_CASE("F-invariance examples") {
  auto f = fs("S3", 3);
  const FpModule reg = regular_quotient_module(f.sylow(), Subgroup::trivial(f.group_ptr()), f.prime());
  const ModuleCheck foc_form = is_F_invariant(reg, f);
  CHECK_FALSE(foc_form.ok);
  REQUIRE(foc_form.witness.has_value());
  CHECK(focal_subgroup(f).contains(foc_form.witness->element));
  CHECK_FALSE(reg.action(foc_form.witness->element).column(foc_form.witness->column) ==
              FpMatrix::identity(f.prime(), 3).column(foc_form.witness->column));
  CHECK_FALSE(is_F_invariant_direct(reg, f).ok);

  const FpModule q = regular_quotient_module(f.sylow(), focal_subgroup(f), f.prime());
  CHECK(is_F_invariant(q, f).ok);

  auto a4 = fs("A4", 2);
  const FpModule hyp_mod = regular_quotient_module(a4.sylow(), hyperfocal_subgroup(a4), a4.prime());
  CHECK(hyp_mod.dim() == 1);
  CHECK(is_fusion_compatible(hyp_mod, a4).ok);
}

TEST_CASE("compatibility") {
  // abelian S with nilpotent fusion: the regular module is compatible
  for (const char* d : {"V4", "C4", "C9"}) {
    auto f = fs(d, d[1] == '9' ? 3 : 2);
    const FpModule reg = regular_module(f.group_ptr(), f.prime());
    CHECK(is_fusion_compatible(reg, f).ok);
    CHECK(is_fusion_compatible(reg, f, true).ok);
  }
  // nonabelian S: inner automorphisms move the regular module
  auto d8 = fs("D8", 2);
  const FpModule reg = regular_module(d8.group_ptr(), d8.prime());
  const ModuleCheck c = is_fusion_compatible(reg, d8);
  CHECK_FALSE(c.ok);
  REQUIRE(c.witness.has_value());
  REQUIRE(c.witness->subgroup.has_value());
  REQUIRE(c.witness->morphism.has_value());
  const auto& phi = d8.homs_to_sylow(*c.witness->subgroup)[*c.witness->morphism];
  CHECK_FALSE(reg.action(phi(c.witness->element)) == reg.action(c.witness->element));
}

TEST_CASE("invariance forms agree and imply compatibility over the battery") {
  for (const auto& inst : standard_instances()) {
    CAPTURE(inst.descriptor);
    CAPTURE(inst.p);
    const auto f = FusionSystem::build(group_from_descriptor(inst.descriptor), Prime(inst.p));
    auto battery = default_battery(f);
    battery.push_back({"regular", regular_quotient_module(f.sylow(), Subgroup::trivial(f.group_ptr()), f.prime()), {}});
    for (const auto& b : battery) {
      CAPTURE(b.id);
      const bool foc_form = is_F_invariant(b.module, f).ok;
      CHECK(foc_form == is_F_invariant_direct(b.module, f).ok);
      if (foc_form) {
        CHECK(is_fusion_compatible(b.module, f).ok);
        CHECK(is_fusion_compatible(b.module, f, true).ok);
      }
    }
  }
}

TEST_CASE("modules killing [S,S] are invariant for nilpotent fusion") {
  for (const char* d : {"D8", "Q8", "C9", "V4", "C4"}) {
    auto f = fs(d, d[1] == '9' ? 3 : 2);
    const FpModule m = regular_quotient_module(f.sylow(), derived_subgroup(f.sylow()), f.prime());
    CHECK(is_F_invariant(m, f).ok);
    CHECK(is_F_invariant_direct(m, f).ok);
  }
}
