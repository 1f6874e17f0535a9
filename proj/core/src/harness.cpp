#include "fusionlab/harness.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "fusionlab/group_io.hpp"

namespace fusionlab {

std::string element_label(const Group& g, ElementId x) {
  if (!g.permutations().empty()) return format_cycles(g.permutations()[x]);
  return "#" + std::to_string(x);
}

std::vector<std::string> generator_labels(const Subgroup& s) {
  std::vector<std::string> out;
  for (auto x : s.generators()) out.push_back(element_label(s.parent(), x));
  return out;
}

// ---- oracles --------------------------------------------------------------

bool p_nilpotent_closure(const GroupPtr& g, Prime p) {
  std::vector<ElementId> coprime;
  for (ElementId x = 0; x < g->order(); ++x) {
    if (g->element_order(x) % p != 0) coprime.push_back(x);
  }
  for (auto a : coprime) {
    for (auto b : coprime) {
      if (g->element_order(g->mul(a, b)) % p == 0) return false;
    }
  }
  return true;
}

bool p_nilpotent_frobenius(const GroupPtr& g, Prime p, const Limits& limits) {
  const Subgroup whole = Subgroup::whole(g);
  const Subgroup s = sylow_subgroup(whole, p);
  for (const auto& q : all_subgroups(s, limits.subgroup_cap)) {
    const std::size_t n = normalizer(whole, q).order();
    const std::size_t c = centralizer(whole, q).order();
    if (!is_p_power(n / c, p)) return false;
  }
  return true;
}

// ---- battery --------------------------------------------------------------

namespace {

bool same_action(const FpModule& a, const FpModule& b) {
  if (!(a.acting_group() == b.acting_group()) || a.dim() != b.dim() || !(a.prime() == b.prime())) return false;
  for (auto x : a.acting_group().members()) {
    if (!(a.action(x) == b.action(x))) return false;
  }
  return true;
}

std::string fp_name(Prime p) { return "F" + std::to_string(p.value()); }

/// Every homomorphism S → F_p^× that kills foc, as 1-dim modules.
std::vector<BatteryModule> focal_characters(const FusionSystem& f, const Subgroup& foc) {
  const Prime p = f.prime();
  const Subgroup& s = f.sylow();
  const Quotient q = quotient_group(s, foc);
  const Subgroup top = Subgroup::whole(q.group);
  const auto gens = top.generators();

  std::vector<BatteryModule> out;
  std::vector<Residue> values(gens.size(), 1);
  while (true) {
    std::vector<FpMatrix> mats;
    for (auto v : values) mats.push_back(FpMatrix::from_triplets(p, 1, 1, {{0, 0, v}}));
    try {
      FpModule chi = FpModule::from_generators(top, p, 1, gens, mats);
      std::string id = "chi";
      std::string images;
      for (auto v : values) {
        id += "_" + std::to_string(v);
        images += (images.empty() ? "" : ",") + std::to_string(v);
      }
      FpModule pulled = pullback_module(chi, q.projection);
      pulled.set_label("character (" + images + ") of S/foc");
      out.push_back({id, std::move(pulled), {}});
    } catch (const InvalidInput&) {
      // values violate a relation of S/foc
    }
    std::size_t k = 0;
    while (k < values.size() && values[k] == p - 1) values[k++] = 1;
    if (k == values.size()) break;
    ++values[k];
  }
  return out;
}

}  // namespace

void add_to_battery(std::vector<BatteryModule>& battery, BatteryModule extra) {
  for (auto& b : battery) {
    if (same_action(b.module, extra.module)) {
      b.aliases.push_back(extra.id);
      return;
    }
  }
  battery.push_back(std::move(extra));
}

std::vector<BatteryModule> default_battery(const FusionSystem& f) {
  const Prime p = f.prime();
  const Subgroup& s = f.sylow();
  const Subgroup foc = focal_subgroup(f);
  const Subgroup hyp = hyperfocal_subgroup(f);

  std::vector<BatteryModule> battery;
  add_to_battery(battery, {"trivial", trivial_module(s, p, 1), {}});
  FpModule by_foc = regular_quotient_module(s, foc, p);
  by_foc.set_label(fp_name(p) + "[S/foc]");
  add_to_battery(battery, {"regular_S_mod_foc", std::move(by_foc), {}});
  FpModule by_hyp = regular_quotient_module(s, hyp, p);
  by_hyp.set_label(fp_name(p) + "[S/hyp]");
  add_to_battery(battery, {"regular_S_mod_hyp", std::move(by_hyp), {}});
  for (auto& chi : focal_characters(f, foc)) add_to_battery(battery, std::move(chi));
  return battery;
}

// ---- scans ----------------------------------------------------------------

std::string to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Holds: return "HOLDS";
    case ScanStatus::Violated: return "VIOLATED";
    case ScanStatus::Skipped: return "SKIPPED";
    case ScanStatus::Error: return "ERROR";
  }
  return "?";
}

std::string to_string(KeyStepStatus s) {
  switch (s) {
    case KeyStepStatus::Holds: return "HOLDS";
    case KeyStepStatus::Failed: return "FAILED";
    case KeyStepStatus::Skipped: return "SKIPPED";
    case KeyStepStatus::Error: return "ERROR";
  }
  return "?";
}

std::string to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Holds: return "HOLDS";
    case TheoremStatus::Violated: return "VIOLATED";
    case TheoremStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::vector<ModuleScan> vanishing_scan(const FusionSystem& f, const std::vector<BatteryModule>& battery,
                                           const CohomologyOptions& options) {
  std::vector<ModuleScan> out;
  for (const auto& b : battery) {
    ModuleScan row;
    row.id = b.id;
    row.aliases = b.aliases;
    row.label = b.module.label();
    row.dim = b.module.dim();
    row.f_invariant = is_F_invariant(b.module, f).ok;
    row.f_invariant_direct = is_F_invariant_direct(b.module, f).ok;
    try {
      FusionCohomology calc(f, b.module, options);
      row.compatible = calc.centric_compatibility().ok;
      row.compatible_all = calc.full_compatibility().ok;
      if (!row.compatible) row.incompatibility = describe_witness(f, *calc.centric_compatibility().witness);
      for (int n = 0; n <= options.max_degree; ++n) row.full_dims.push_back(calc.sylow_space(n).dim());
      if (row.compatible) {
        for (int n = 0; n <= options.max_degree; ++n) row.stable_dims.push_back(calc.stable_elements(n).dim());
        if (row.compatible_all) {
          for (int n = 0; n <= options.max_degree; ++n) {
            row.stable_all_dims.push_back(calc.stable_elements_all_subgroups(n).dim());
          }
        }
        for (int n = 1; n <= options.max_degree; ++n) {
          const bool zero = row.stable_dims[static_cast<std::size_t>(n)] == 0;
          if (zero && !row.vanishing_degree) row.vanishing_degree = n;
          if (!zero && !row.nonvanishing_degree) row.nonvanishing_degree = n;
        }
        row.status = row.vanishing_degree && row.nonvanishing_degree ? ScanStatus::Violated : ScanStatus::Holds;
      }
    } catch (const BudgetError& e) {
      row.status = ScanStatus::Error;
      row.error = e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

KeyStepReport key_step_check(const FusionSystem& f, const CohomologyOptions& options) {
  KeyStepReport r;
  FpModule m = regular_quotient_module(f.sylow(), hyperfocal_subgroup(f), f.prime());
  r.module_dim = m.dim();
  try {
    FusionCohomology calc(f, std::move(m), options);
    if (!calc.centric_compatibility().ok) {
      r.status = KeyStepStatus::Skipped;
      r.witness = describe_witness(f, *calc.centric_compatibility().witness);
      return r;
    }
    for (int n = 0; n <= options.max_degree; ++n) r.stable_dims.push_back(calc.stable_elements(n).dim());
    const bool ok = options.max_degree < 1 || r.stable_dims[1] == 0;
    r.status = ok ? KeyStepStatus::Holds : KeyStepStatus::Failed;
  } catch (const BudgetError& e) {
    r.status = KeyStepStatus::Error;
    r.witness = e.what();
  }
  return r;
}

// ---- theorem --------------------------------------------------------------

bool TheoremReport::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

int TheoremReport::exit_code() const {
  if (!consistent()) return 1;
  return theorem == TheoremStatus::Inconclusive ? 2 : 0;
}

namespace {

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

TheoremReport run_theorem_check(const std::string& descriptor, const FusionSystem& f,
                                const std::vector<BatteryModule>& battery, const CohomologyOptions& options) {
  TheoremReport r;
  const Group& g = f.group();
  r.descriptor = descriptor;
  r.group_name = g.name();
  r.group_order = g.order();
  r.p = f.prime();
  r.n_max = options.max_degree;
  r.engine = options.engine;

  const Subgroup foc = focal_subgroup(f);
  const Subgroup hyp = hyperfocal_subgroup(f);
  r.sylow_order = f.sylow().order();
  r.sylow_generators = generator_labels(f.sylow());
  r.focal_order = foc.order();
  r.focal_generators = generator_labels(foc);
  r.hyperfocal_order = hyp.order();
  r.hyperfocal_generators = generator_labels(hyp);
  r.subgroup_count = f.subgroups().size();
  const auto classes = centric_classes(f);
  r.conjugacy_class_count = classes.size();
  r.centric_class_count =
      static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.centric; }));
  r.centric_subgroup_count = centric_subgroups(f).size();

  const NilpotencyVerdict nil = is_nilpotent(f);
  r.nilpotent_fusion = nil.nilpotent;
  r.nilpotent_hyperfocal = hyp.is_trivial();
  r.nilpotent_closure = p_nilpotent_closure(f.group_ptr(), f.prime());
  r.nilpotent_frobenius = p_nilpotent_frobenius(f.group_ptr(), f.prime());
  if (!nil.nilpotent) {
    const auto& P = f.subgroups()[*nil.witness_subgroup];
    std::ostringstream os;
    os << "P = <";
    const auto gens = P.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << element_label(g, gens[i]);
    os << ">, φ:";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      os << (i ? ", " : " ") << element_label(g, gens[i]) << " ↦ " << element_label(g, (*nil.witness_morphism)(gens[i]));
    }
    r.nilpotency_witness = os.str();
  }

  const bool nilpotent = r.nilpotent_fusion;
  {
    const bool agree = r.nilpotent_fusion == r.nilpotent_hyperfocal && r.nilpotent_fusion == r.nilpotent_closure &&
                       r.nilpotent_fusion == r.nilpotent_frobenius;
    std::ostringstream os;
    os << "fusion=" << r.nilpotent_fusion << " hyperfocal=" << r.nilpotent_hyperfocal
       << " closure=" << r.nilpotent_closure << " frobenius=" << r.nilpotent_frobenius;
    r.checks.push_back({"nilpotency_methods_agree", agree, os.str()});
  }

  r.modules = vanishing_scan(f, battery, options);
  r.key_step = key_step_check(f, options);

  for (const auto& m : r.modules) {
    if (m.f_invariant != m.f_invariant_direct) {
      r.checks.push_back({"f_invariance_forms_agree:" + m.id, false, "focal and quantifier forms disagree"});
    }
    if (m.f_invariant && !m.compatible) {
      r.checks.push_back({"invariant_implies_compatible:" + m.id, false, m.incompatibility});
    }
    if (nilpotent && !m.stable_dims.empty() && m.stable_dims != m.full_dims) {
      r.checks.push_back({"nilpotent_stable_equals_full:" + m.id, false,
                          "stable " + dims_text(m.stable_dims) + " vs full " + dims_text(m.full_dims)});
    }
    if (nilpotent && m.status == ScanStatus::Violated) {
      r.checks.push_back({"nilpotent_no_violation:" + m.id, false,
                          "H^" + std::to_string(*m.vanishing_degree) + " = 0 but H^" +
                              std::to_string(*m.nonvanishing_degree) + " ≠ 0"});
    }
  }
  r.checks.push_back({"key_step_h1_vanishes", r.key_step.status != KeyStepStatus::Failed,
                      to_string(r.key_step.status) +
                          (r.key_step.stable_dims.empty() ? "" : " dims " + dims_text(r.key_step.stable_dims))});

  const bool violated = std::any_of(r.modules.begin(), r.modules.end(),
                                    [](const ModuleScan& m) { return m.status == ScanStatus::Violated; });
  if (nilpotent) {
    r.theorem = violated ? TheoremStatus::Violated : TheoremStatus::Holds;
  } else {
    r.theorem = violated ? TheoremStatus::Violated : TheoremStatus::Inconclusive;
  }
  return r;
}

std::string theorem_report_json(const TheoremReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "fusionlab.theorem/1";
  j["group"] = {{"descriptor", r.descriptor}, {"name", r.group_name}, {"order", r.group_order}};
  j["p"] = r.p;
  j["n_max"] = r.n_max;
  j["engine"] = to_string(r.engine);
  j["sylow"] = {{"order", r.sylow_order}, {"generators", r.sylow_generators}};
  j["focal"] = {{"order", r.focal_order}, {"generators", r.focal_generators}};
  j["hyperfocal"] = {{"order", r.hyperfocal_order}, {"generators", r.hyperfocal_generators}};
  j["subgroups_of_sylow"] = r.subgroup_count;
  j["conjugacy_classes"] = r.conjugacy_class_count;
  j["centric_classes"] = r.centric_class_count;
  j["centric_subgroups"] = r.centric_subgroup_count;
  j["nilpotency"] = {{"fusion", r.nilpotent_fusion},
                     {"hyperfocal", r.nilpotent_hyperfocal},
                     {"closure", r.nilpotent_closure},
                     {"frobenius", r.nilpotent_frobenius},
                     {"witness", r.nilpotency_witness.empty() ? ordered_json(nullptr) : ordered_json(r.nilpotency_witness)}};
  ordered_json mods = ordered_json::array();
  for (const auto& m : r.modules) {
    ordered_json e;
    e["id"] = m.id;
    e["aliases"] = m.aliases;
    e["label"] = m.label;
    e["dim"] = m.dim;
    e["f_invariant"] = m.f_invariant;
    e["f_invariant_direct"] = m.f_invariant_direct;
    e["compatible"] = m.compatible;
    e["compatible_all_subgroups"] = m.compatible_all;
    e["status"] = to_string(m.status);
    e["full_dims"] = m.full_dims;
    e["stable_dims"] = m.stable_dims.empty() ? ordered_json(nullptr) : ordered_json(m.stable_dims);
    e["stable_all_dims"] = m.stable_all_dims.empty() ? ordered_json(nullptr) : ordered_json(m.stable_all_dims);
    if (m.status == ScanStatus::Violated) {
      e["witness"] = {{"m", *m.vanishing_degree}, {"n", *m.nonvanishing_degree}};
    } else {
      e["witness"] = nullptr;
    }
    e["incompatibility"] = m.incompatibility.empty() ? ordered_json(nullptr) : ordered_json(m.incompatibility);
    e["error"] = m.error.empty() ? ordered_json(nullptr) : ordered_json(m.error);
    mods.push_back(std::move(e));
  }
  j["modules"] = std::move(mods);
  j["key_step"] = {{"status", to_string(r.key_step.status)},
                   {"module_dim", r.key_step.module_dim},
                   {"stable_dims", r.key_step.stable_dims},
                   {"witness", r.key_step.witness.empty() ? ordered_json(nullptr) : ordered_json(r.key_step.witness)}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["theorem"] = to_string(r.theorem);
  j["verdict"] = !r.consistent() ? "INCONSISTENT" : (r.exit_code() == 2 ? "INCONCLUSIVE" : "CONSISTENT");
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

std::string theorem_report_text(const TheoremReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "group " << r.descriptor << " (order " << r.group_order << "), p = " << r.p << ", n_max = " << r.n_max
     << ", engine " << to_string(r.engine) << "\n";
  os << "  |S| = " << r.sylow_order << ", |foc| = " << r.focal_order << ", |hyp| = " << r.hyperfocal_order
     << ", centric classes " << r.centric_class_count << " of " << r.conjugacy_class_count << "\n";
  os << "  nilpotent: fusion " << yn(r.nilpotent_fusion) << ", hyperfocal " << yn(r.nilpotent_hyperfocal)
     << ", closure " << yn(r.nilpotent_closure) << ", frobenius " << yn(r.nilpotent_frobenius) << "\n";
  if (!r.nilpotency_witness.empty()) os << "  non-S fusion: " << r.nilpotency_witness << "\n";
  for (const auto& m : r.modules) {
    os << "  module " << m.id;
    for (const auto& a : m.aliases) os << " = " << a;
    os << " [" << m.label << ", dim " << m.dim << "]: " << to_string(m.status);
    if (m.status == ScanStatus::Violated) os << " m=" << *m.vanishing_degree << " n=" << *m.nonvanishing_degree;
    os << "\n    H^n(S;M) " << dims_text(m.full_dims);
    if (!m.stable_dims.empty()) os << "  H^n(F^c;M) " << dims_text(m.stable_dims);
    os << "  F-invariant " << yn(m.f_invariant) << ", compatible " << yn(m.compatible) << "\n";
    if (!m.incompatibility.empty()) os << "    skipped: " << m.incompatibility << "\n";
    if (!m.error.empty()) os << "    error: " << m.error << "\n";
  }
  os << "  key step H^1(F^c;Fp[S/hyp]) = 0: " << to_string(r.key_step.status);
  if (!r.key_step.stable_dims.empty()) os << " dims " << dims_text(r.key_step.stable_dims);
  if (!r.key_step.witness.empty()) os << " (" << r.key_step.witness << ")";
  os << "\n";
  for (const auto& c : r.checks) {
    if (!c.ok) os << "  INCONSISTENT " << c.name << ": " << c.detail << "\n";
  }
  os << "vanishing criterion " << to_string(r.theorem) << (r.nilpotent_fusion ? " (nilpotent)" : " (not nilpotent)")
     << ", "
     << (!r.consistent() ? "INCONSISTENT" : (r.exit_code() == 2 ? "INCONCLUSIVE" : "CONSISTENT")) << "\n";
  return os.str();
}

}  // namespace fusionlab
