#include <doctest.h>

#include <algorithm>
#include <map>

#include "catalog_oracle.hpp"
#include "fusionlab/catalog.hpp"
#include "fusionlab/cohomology.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/harness.hpp"

using namespace fusionlab;

namespace {

using Dims = std::vector<std::size_t>;

FusionSystem fs(const char* d, std::uint32_t p) { return FusionSystem::build(group_from_descriptor(d), Prime(p)); }

/// A subgroup rebuilt as a raw oracle group, with the library id of each raw
/// element.
struct Bridge {
  oracle::RawGroup raw;
  std::vector<ElementId> lib;
};

Bridge bridge(const Subgroup& s) {
  const Group& g = s.parent();
  std::vector<oracle::Perm> gens;
  for (auto x : s.generators()) gens.push_back(g.permutations()[x]);
  Bridge b{oracle::closure(g.degree(), gens), {}};
  std::map<Permutation, ElementId> ids;
  for (auto x : s.members()) ids[g.permutations()[x]] = x;
  for (const auto& perm : b.raw.elems) b.lib.push_back(ids.at(perm));
  return b;
}

Dims oracle_dims(const FpModule& m, int n_max) {
  const Bridge b = bridge(m.acting_group());
  auto act = [&](std::size_t x) {
    const FpMatrix& a = m.action(b.lib[x]);
    oracle::Dense d(m.dim(), std::vector<std::int64_t>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) d[r][c] = a.at(r, c);
    }
    return d;
  };
  return oracle::bar_cohomology_dims(b.raw, act, m.dim(), m.prime().value(), n_max);
}

std::size_t oracle_h1(const FpModule& m) {
  const Bridge b = bridge(m.acting_group());
  auto act = [&](std::size_t x) {
    const FpMatrix& a = m.action(b.lib[x]);
    oracle::Dense d(m.dim(), std::vector<std::int64_t>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) d[r][c] = a.at(r, c);
    }
    return d;
  };
  std::vector<std::size_t> gens;
  for (auto x : m.acting_group().generators()) {
    gens.push_back(b.raw.find(m.acting_group().parent().permutations()[x]));
  }
  return oracle::h1_by_crossed_homs(b.raw, gens, act, m.dim(), m.prime().value());
}

Dims dims(const FpModule& m, int n_max, Engine e) {
  auto c = make_complex(e, m, n_max);
  CHECK(c->square_zero());
  Dims out;
  for (int n = 0; n <= n_max; ++n) out.push_back(CohomologySpace(*c, n).dim());
  return out;
}

Dims stable_dims(FusionCohomology& fc, int n_max, bool all = false) {
  Dims out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(all ? fc.stable_elements_all_subgroups(n).dim() : fc.stable_elements(n).dim());
  }
  return out;
}

FpModule trivial_on_whole(const GroupPtr& g, Prime p) { return trivial_module(Subgroup::whole(g), p, 1); }

/// The sign character of a permutation group over F_p.
FpModule sign_module(const GroupPtr& g, Prime p) {
  const Subgroup whole = Subgroup::whole(g);
  std::vector<FpMatrix> mats;
  for (auto x : whole.members()) {
    const auto& perm = g->permutations()[x];
    std::vector<bool> seen(perm.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j], ++len) seen[j] = true;
      if (len) transpositions += len - 1;
    }
    mats.push_back(FpMatrix::from_rows(p, 1, {{transpositions % 2 ? p.value() - 1 : 1u}}));
  }
  return FpModule::from_action(whole, p, 1, std::move(mats), "sign");
}

FpModule jordan_c3() {
  auto c3 = group_from_descriptor("C3");
  const Prime p3(3);
  const std::vector<ElementId> gens{1};
  return FpModule::from_generators(Subgroup::whole(c3), p3, 2, gens, {FpMatrix::from_rows(p3, 2, {{1, 1}, {0, 1}})});
}

}  // namespace

TEST_CASE("cyclic and Klein four cohomology") {
  for (Engine e : {Engine::Bar, Engine::Resolution}) {
    CAPTURE(to_string(e));
    CHECK(dims(trivial_on_whole(group_from_descriptor("C3"), Prime(3)), 4, e) == Dims{1, 1, 1, 1, 1});
    CHECK(dims(trivial_on_whole(group_from_descriptor("C2"), Prime(2)), 4, e) == Dims{1, 1, 1, 1, 1});
    CHECK(dims(trivial_on_whole(group_from_descriptor("V4"), Prime(2)), 3, e) == Dims{1, 2, 3, 4});
  }
  // frozen from the oracle
  CHECK(oracle_dims(trivial_on_whole(group_from_descriptor("C3"), Prime(3)), 4) == Dims{1, 1, 1, 1, 1});
  CHECK(oracle_dims(trivial_on_whole(group_from_descriptor("V4"), Prime(2)), 3) == Dims{1, 2, 3, 4});
  CHECK(dims(trivial_module(Subgroup::whole(group_from_descriptor("V4")), Prime(2), 3), 0, Engine::Resolution) ==
        Dims{3});
}

TEST_CASE("engines agree with the unnormalized bar oracle") {
  struct Case {
    FpModule m;
    int n;
  };
  std::vector<Case> cases;
  cases.push_back({regular_module(group_from_descriptor("C3"), Prime(3)), 3});
  cases.push_back({jordan_c3(), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("C4"), Prime(2)), 3});
  cases.push_back({regular_module(group_from_descriptor("C2"), Prime(2)), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("D8"), Prime(2)), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("Q8"), Prime(2)), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("S3"), Prime(3)), 3});
  cases.push_back({sign_module(group_from_descriptor("S3"), Prime(3)), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("S3"), Prime(2)), 3});
  cases.push_back({trivial_on_whole(group_from_descriptor("A4"), Prime(2)), 2});
  cases.push_back({trivial_on_whole(group_from_descriptor("elementary_abelian 3 2"), Prime(3)), 2});
  for (const auto& c : cases) {
    CAPTURE(c.m.acting_group().parent().name());
    CAPTURE(c.m.dim());
    const Dims expected = oracle_dims(c.m, c.n);
    CHECK(dims(c.m, c.n, Engine::Bar) == expected);
    CHECK(dims(c.m, c.n, Engine::Resolution) == expected);
  }
}

TEST_CASE("direct whole-group cohomology") {
  auto s3 = group_from_descriptor("S3");
  const FpModule t3 = trivial_on_whole(s3, Prime(3));
  Dims d;
  for (int n = 0; n <= 3; ++n) d.push_back(group_cohomology_direct(t3, n).dim());
  CHECK(d == Dims{1, 0, 0, 1});
  const FpModule t2 = trivial_on_whole(group_from_descriptor("A4"), Prime(2));
  CHECK(group_cohomology_direct(t2, 1).dim() == 0);
  CHECK(group_cohomology_direct(t2, 2).dim() == 1);
  const FpModule c2 = trivial_on_whole(group_from_descriptor("C2"), Prime(2));
  for (int n = 0; n <= 4; ++n) CHECK(group_cohomology_direct(c2, n).dim() == 1);
}

TEST_CASE("H^1 by crossed homomorphisms") {
  std::vector<FpModule> ms;
  ms.push_back(sign_module(group_from_descriptor("S3"), Prime(3)));
  ms.push_back(trivial_on_whole(group_from_descriptor("S3"), Prime(3)));
  ms.push_back(jordan_c3());
  ms.push_back(regular_module(group_from_descriptor("V4"), Prime(2)));
  ms.push_back(trivial_on_whole(group_from_descriptor("D8"), Prime(2)));
  ms.push_back(sign_module(group_from_descriptor("A4"), Prime(2)));
  for (const auto& m : ms) {
    const std::size_t expected = oracle_h1(m);
    CHECK(cohomology(m.acting_group(), m, 1).dim() == expected);
    CHECK(cohomology(m.acting_group(), m, 1, {Engine::Bar, 1, {}}).dim() == expected);
  }
  CHECK(oracle_h1(sign_module(group_from_descriptor("S3"), Prime(3))) == 1);
}

TEST_CASE("H^0 is the fixed subspace") {
  for (const char* d : {"C3", "D8", "S3", "V4"}) {
    auto g = group_from_descriptor(d);
    for (std::uint32_t p : {2u, 3u}) {
      const FpModule reg = regular_module(g, Prime(p));
      CHECK(cohomology(Subgroup::whole(g), reg, 0).dim() == reg.fixed_points().dim());
      CHECK(cohomology(Subgroup::whole(g), reg, 0, {Engine::Bar, 0, {}}).dim() == reg.fixed_points().dim());
    }
  }
}

TEST_CASE("free modules are acyclic") {
  for (const char* d : {"C9", "D8", "Q8", "C4"}) {
    auto g = group_from_descriptor(d);
    const Prime p(d[1] == '9' ? 3 : 2);
    const FpModule reg = regular_module(g, p);
    CHECK(dims(reg, 4, Engine::Resolution) == Dims{1, 0, 0, 0, 0});
  }
}

TEST_CASE("d∘d vanishes and cochain dimensions") {
  const FpModule m = trivial_module(Subgroup::whole(group_from_descriptor("S3")), Prime(3), 2);
  BarComplex bar(m, 3);
  CHECK(bar.square_zero());
  for (int n = 0; n <= 4; ++n) {
    std::size_t expected = 2;
    for (int k = 0; k < n; ++k) expected *= 5;
    CHECK(bar.cochain_dim(n) == expected);
  }
  ResolutionComplex res(m, 3);
  CHECK(res.square_zero());
  CHECK(res.cochain_dim(0) == 2);
}

TEST_CASE("budget") {
  const FpModule m = trivial_on_whole(group_from_descriptor("S4"), Prime(2));
  Limits tiny;
  tiny.budget_mb = 1;
  CHECK_THROWS_AS(BarComplex(m, 3, tiny), BudgetError);
  try {
    BarComplex(m, 3, tiny);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("|P|=24") != std::string::npos);
  }
  CHECK(BarComplex::estimate_bytes(24, 1, 3) > BarComplex::estimate_bytes(24, 1, 2));
  CHECK(BarComplex::estimate_bytes(3, 1, 4) < 1e6);
  CHECK_NOTHROW(ResolutionComplex(m, 3, tiny));
  CHECK(engine_from_string("bar") == Engine::Bar);
  CHECK(engine_from_string("resolution") == Engine::Resolution);
  CHECK_THROWS_AS(engine_from_string("spectral"), InvalidInput);
}

TEST_CASE("restriction and fusion maps") {
  auto f = fs("S3", 3);
  for (Engine e : {Engine::Bar, Engine::Resolution}) {
    FusionCohomology fc(f, trivial_module(f.sylow(), f.prime(), 1), {e, 4, {}});
    const std::size_t s = f.sylow_index();
    for (int n = 0; n <= 4; ++n) {
      CHECK(fc.restriction_map(s, n).is_identity());
      CHECK(fc.phi_star(s, 0, n).is_identity());
    }
    // inversion acts by (-1)^k on H^{2k-1} and H^{2k}
    const std::vector<Residue> sign{1, 2, 2, 1, 1};
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(n);
      const FpMatrix inv = fc.phi_star(s, 1, n);
      REQUIRE(inv.rows() == 1);
      CHECK(inv.at(0, 0) == sign[static_cast<std::size_t>(n)]);
    }
    const FpMatrix diff = fc.restriction_map(s, 2) - fc.phi_star(s, 1, 2);
    CHECK(diff.at(0, 0) == 2);

    // H^0: restriction to the trivial subgroup is the inclusion M^S ⊆ M
    const FpMatrix r0 = fc.restriction_map(0, 0);
    CHECK(rref(r0).rank == 1);
  }
}

TEST_CASE("phi_star of an inclusion is restriction; functoriality") {
  auto f = fs("S4", 2);
  for (Engine e : {Engine::Resolution, Engine::Bar}) {
    CohomologyOptions opts{e, 2, {}};
    FusionCohomology fc(f, trivial_module(f.sylow(), f.prime(), 1), opts);
    for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
      const GroupHom inc = GroupHom::inclusion(f.subgroups()[i], f.sylow());
      for (int n = 0; n <= 2; ++n) CHECK(fc.phi_star(inc, n) == fc.restriction_map(i, n));
    }
  }
  // (β∘α)* = α*∘β* for automorphisms of S
  auto a4 = fs("A4", 2);
  FusionCohomology fc(a4, trivial_module(a4.sylow(), a4.prime(), 1));
  const auto& aut = a4.automizer(a4.sylow_index());
  for (const auto& a : aut) {
    for (const auto& b : aut) {
      for (int n = 1; n <= 3; ++n) CHECK(fc.phi_star(b.after(a), n) == fc.phi_star(a, n) * fc.phi_star(b, n));
    }
  }
  // a fusion morphism with image Q factors as res_Q followed by P → Q
  FusionCohomology fd(f, trivial_module(f.sylow(), f.prime(), 1), {Engine::Resolution, 2, {}});
  for (std::size_t i = 0; i < f.subgroups().size(); ++i) {
    for (std::size_t k = 0; k < f.homs_to_sylow(i).size(); ++k) {
      const GroupHom& phi = f.homs_to_sylow(i)[k];
      const std::size_t j = f.image_index(i, k);
      std::vector<ElementId> images;
      for (auto x : f.subgroups()[i].members()) images.push_back(phi(x));
      const GroupHom onto(f.subgroups()[i], f.subgroups()[j], images);
      for (int n = 1; n <= 2; ++n) {
        const CohomologySpace& hp = fd.space(i, n);
        const CohomologySpace& hq = fd.space(j, n);
        const auto pb = fd.complex(j).pullbacks(fd.complex(i), onto, n);
        const FpMatrix onto_star = induced_map(hq, hp, pb[static_cast<std::size_t>(n)]);
        CHECK(fd.phi_star(i, k, n) == onto_star * fd.restriction_map(j, n));
      }
    }
  }
}

TEST_CASE("stable elements examples") {
  auto s3 = fs("S3", 3);
  FusionCohomology a(s3, trivial_module(s3.sylow(), s3.prime(), 1));
  CHECK(stable_dims(a, 4) == Dims{1, 0, 0, 1, 1});

  auto a4 = fs("A4", 2);
  FusionCohomology b(a4, trivial_module(a4.sylow(), a4.prime(), 1));
  CHECK(b.stable_elements(1).dim() == 0);
  CHECK(stable_dims(b, 3) == Dims{1, 0, 1, 2});

  // nilpotent fusion: stable = whole space
  for (const char* d : {"D8", "Q8", "C9", "V4"}) {
    auto f = fs(d, d[1] == '9' ? 3 : 2);
    FusionCohomology fc(f, trivial_module(f.sylow(), f.prime(), 1), {Engine::Resolution, 3, {}});
    for (int n = 0; n <= 3; ++n) {
      CHECK(fc.stable_elements(n) == FpSubspace::whole(f.prime(), fc.sylow_space(n).dim()));
      CHECK(fc.stable_elements_all_subgroups(n) == fc.stable_elements(n));
    }
  }
}

TEST_CASE("stable elements agree across engines and quantifier domains") {
  for (const auto& inst : standard_instances()) {
    auto g = group_from_descriptor(inst.descriptor);
    if (g->order() > 24) continue;
    CAPTURE(inst.descriptor);
    CAPTURE(inst.p);
    const auto f = FusionSystem::build(g, Prime(inst.p));
    const FpModule t = trivial_module(f.sylow(), f.prime(), 1);
    FusionCohomology res(f, t, {Engine::Resolution, 2, {}});
    FusionCohomology bar(f, t, {Engine::Bar, 2, {}});
    CHECK(stable_dims(res, 2) == stable_dims(bar, 2));
    CHECK(stable_dims(res, 2, true) == stable_dims(res, 2));
  }
}

TEST_CASE("Cartan-Eilenberg: stable elements equal whole-group cohomology") {
  struct Case {
    const char* g;
    std::uint32_t p;
    int n;
  };
  for (const Case& c : {Case{"S3", 3, 3}, Case{"A4", 2, 2}, Case{"S3", 2, 3}, Case{"A4", 3, 3}, Case{"D8", 2, 2},
                        Case{"semidirect_cyclic 7 3 2", 3, 2}, Case{"S4", 3, 2}}) {
    CAPTURE(c.g);
    CAPTURE(c.p);
    auto g = group_from_descriptor(c.g);
    const auto f = FusionSystem::build(g, Prime(c.p));
    FusionCohomology fc(f, trivial_module(f.sylow(), f.prime(), 1));
    const FpModule whole = trivial_on_whole(g, Prime(c.p));
    for (int n = 0; n <= c.n; ++n) {
      CAPTURE(n);
      CHECK(fc.stable_elements(n).dim() == group_cohomology_direct(whole, n).dim());
    }
  }
}

TEST_CASE("incompatible modules are refused") {
  auto d8 = fs("D8", 2);
  const FpModule reg = regular_module(d8.group_ptr(), d8.prime());
  FusionCohomology fc(d8, reg);
  CHECK_FALSE(fc.centric_compatibility().ok);
  CHECK_THROWS_AS(fc.stable_elements(1), IncompatibleModule);
  CHECK_THROWS_AS(stable_elements(d8, reg, 1), IncompatibleModule);
  CHECK_FALSE(describe_witness(d8, *fc.centric_compatibility().witness).empty());
  // the full cohomology is still available
  CHECK(fc.sylow_space(1).dim() == 0);
}

TEST_CASE("twisted coefficients") {
  // inversion moves the regular F_3[C3], so S3 at 3 refuses it
  auto s3 = fs("S3", 3);
  const FpModule reg = regular_quotient_module(s3.sylow(), Subgroup::trivial(s3.group_ptr()), s3.prime());
  CHECK_FALSE(is_fusion_compatible(reg, s3).ok);
  CHECK_THROWS_AS(stable_elements(s3, reg, 1), IncompatibleModule);

  // S4 at 2 with F_2[S/foc]: stable dims frozen from the battery run, checked on both engines
  auto s4 = fs("S4", 2);
  const FpModule q = regular_quotient_module(s4.sylow(), focal_subgroup(s4), s4.prime());
  CHECK(q.dim() == 2);
  for (Engine e : {Engine::Resolution, Engine::Bar}) {
    FusionCohomology fc(s4, q, {e, 3, {}});
    CHECK(stable_dims(fc, 3) == Dims{1, 0, 1, 1});
  }
}

TEST_CASE("inner conjugation twists the coefficients") {
  // φ* is plain precomposition, so for s ∈ S the map c_s* is res followed by
  // m ↦ s·m on coefficients. On F_2[D8/K], K a Klein four, that automorphism
  // is nontrivial on H^n(P;M) and F_S(S) keeps only part of H^n(S;M).
  auto d8 = fs("D8", 2);
  std::size_t seen = 0;
  for (const auto& k : d8.subgroups()) {
    const bool klein = std::all_of(k.members().begin(), k.members().end(),
                                   [&](ElementId x) { return d8.group().element_order(x) <= 2; });
    if (k.order() != 4 || !klein) continue;
    ++seen;
    const FpModule m = regular_quotient_module(d8.sylow(), k, d8.prime());
    CHECK(is_F_invariant(m, d8).ok);
    FusionCohomology fc(d8, m, {Engine::Resolution, 3, {}});
    Dims full;
    for (int n = 0; n <= 3; ++n) full.push_back(fc.sylow_space(n).dim());
    CHECK(full == Dims{1, 2, 3, 4});
    CHECK(stable_dims(fc, 3) == Dims{1, 1, 2, 2});
    CHECK(stable_dims(fc, 3, true) == Dims{1, 1, 2, 2});
    FusionCohomology bar(d8, m, {Engine::Bar, 3, {}});
    CHECK(stable_dims(bar, 3) == Dims{1, 1, 2, 2});
  }
  CHECK(seen == 2);
}
