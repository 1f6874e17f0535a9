// fusionlab: command-line front end for fusion systems, twisted cohomology
// and the nilpotency criterion check.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fusionlab/catalog.hpp"
#include "fusionlab/cohomology.hpp"
#include "fusionlab/group_io.hpp"
#include "fusionlab/harness.hpp"
#include "fusionlab/module_io.hpp"

using namespace fusionlab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 64;

struct Common {
  std::string group;
  std::uint32_t p = 0;
  std::size_t budget_mb = Limits{}.budget_mb;
  std::size_t order_cap = Limits{}.order_cap;
  std::size_t subgroup_cap = Limits{}.subgroup_cap;
  std::string json_path;

  Limits limits() const { return Limits{order_cap, subgroup_cap, budget_mb}; }
};

void write_json(const Common& c, const std::string& text) {
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.json_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + c.json_path);
  out << text;
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

ordered_json subgroup_json(const Subgroup& s) {
  return {{"order", s.order()}, {"generators", generator_labels(s)}};
}

FusionSystem build(const Common& c) {
  GroupPtr g = resolve_group(c.group, c.limits());
  return FusionSystem::build(std::move(g), Prime(c.p), c.limits());
}

FpModule module_or_trivial(const FusionSystem& f, const std::string& path) {
  if (path.empty()) return trivial_module(f.sylow(), f.prime(), 1);
  return load_module_file(path, f);
}

int cmd_info(const Common& c) {
  const FusionSystem f = build(c);
  const Group& g = f.group();
  const Subgroup foc = focal_subgroup(f);
  const Subgroup hyp = hyperfocal_subgroup(f);
  const auto classes = centric_classes(f);
  const auto order = module_generator_order(f);

  std::cout << "group " << c.group << " [" << g.name() << "] order " << g.order() << ", p = " << c.p << "\n";
  std::cout << "S     order " << f.sylow().order();
  for (const auto& s : generator_labels(f.sylow())) std::cout << " " << s;
  std::cout << "\nfoc   order " << foc.order();
  for (const auto& s : generator_labels(foc)) std::cout << " " << s;
  std::cout << "\nhyp   order " << hyp.order();
  for (const auto& s : generator_labels(hyp)) std::cout << " " << s;
  std::cout << "\nmodule file generators:";
  for (auto x : order) std::cout << " " << element_label(g, x);
  std::cout << "\nsubgroups of S: " << f.subgroups().size() << ", F-conjugacy classes: " << classes.size() << "\n";

  ordered_json jc = ordered_json::array();
  for (const auto& cls : classes) {
    const Subgroup& rep = f.subgroups()[cls.members.front()];
    std::cout << "  class of order " << rep.order() << " (" << cls.members.size() << " subgroups) "
              << (cls.centric ? "centric" : "not centric");
    ordered_json e{{"order", rep.order()},
                   {"size", cls.members.size()},
                   {"representative", generator_labels(rep)},
                   {"centric", cls.centric}};
    if (!cls.centric) {
      std::cout << ": " << element_label(g, *cls.witness_element) << " centralizes a conjugate without lying in it";
      e["witness_element"] = element_label(g, *cls.witness_element);
      e["witness_subgroup"] = generator_labels(f.subgroups()[*cls.witness_subgroup]);
    }
    std::cout << "\n";
    jc.push_back(std::move(e));
  }

  ordered_json j;
  j["schema"] = "fusionlab.info/1";
  j["group"] = {{"descriptor", c.group}, {"name", g.name()}, {"order", g.order()}};
  j["p"] = c.p;
  j["sylow"] = subgroup_json(f.sylow());
  j["focal"] = subgroup_json(foc);
  j["hyperfocal"] = subgroup_json(hyp);
  ordered_json gens = ordered_json::array();
  for (auto x : order) gens.push_back(element_label(g, x));
  j["module_generators"] = std::move(gens);
  j["subgroups_of_sylow"] = f.subgroups().size();
  j["classes"] = std::move(jc);
  write_json(c, j.dump(2) + "\n");
  return 0;
}

int cmd_nilpotency(const Common& c) {
  const FusionSystem f = build(c);
  const NilpotencyVerdict v = is_nilpotent(f);
  const bool hyp = hyperfocal_subgroup(f).is_trivial();
  const bool closure = p_nilpotent_closure(f.group_ptr(), f.prime());
  const bool frob = p_nilpotent_frobenius(f.group_ptr(), f.prime(), c.limits());
  const bool agree = v.nilpotent == hyp && hyp == closure && closure == frob;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "fusion comparison  " << yn(v.nilpotent) << "\n"
            << "hyperfocal trivial " << yn(hyp) << "\n"
            << "p'-closure         " << yn(closure) << "\n"
            << "frobenius          " << yn(frob) << "\n";
  std::string witness;
  if (!v.nilpotent) {
    const Group& g = f.group();
    const Subgroup& P = f.subgroups()[*v.witness_subgroup];
    std::ostringstream os;
    const auto gens = P.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      os << (i ? "; " : "") << element_label(g, gens[i]) << " -> " << element_label(g, (*v.witness_morphism)(gens[i]));
    }
    witness = os.str();
    std::cout << "witness: P of order " << P.order() << ", " << witness << "\n";
  }
  std::cout << (agree ? "CONSISTENT" : "INCONSISTENT") << "\n";
  ordered_json j{{"schema", "fusionlab.nilpotency/1"},
                 {"group", c.group},
                 {"p", c.p},
                 {"fusion", v.nilpotent},
                 {"hyperfocal", hyp},
                 {"closure", closure},
                 {"frobenius", frob},
                 {"witness", witness.empty() ? ordered_json(nullptr) : ordered_json(witness)},
                 {"agree", agree}};
  write_json(c, j.dump(2) + "\n");
  return agree ? 0 : 1;
}

int cmd_cohomology(const Common& c, const std::string& module_path, int n_max, const std::string& engine, bool direct) {
  ordered_json j{{"schema", "fusionlab.cohomology/1"}, {"group", c.group}, {"p", c.p}, {"n_max", n_max}};
  if (direct) {
    if (!module_path.empty()) throw InvalidInput("--direct works with trivial coefficients only");
    GroupPtr g = resolve_group(c.group, c.limits());
    const FpModule m = trivial_module(Subgroup::whole(g), Prime(c.p), 1);
    std::vector<std::size_t> dims;
    for (int n = 0; n <= n_max; ++n) dims.push_back(group_cohomology_direct(m, n, c.limits()).dim());
    std::cout << "H^n(G;F" << c.p << ") n=0.." << n_max << ": " << dims_text(dims) << "\n";
    j["over"] = "G";
    j["engine"] = "bar";
    j["module"] = "trivial";
    j["dims"] = dims;
  } else {
    const FusionSystem f = build(c);
    const FpModule m = module_or_trivial(f, module_path);
    auto complex = make_complex(engine_from_string(engine), m, n_max, c.limits());
    std::vector<std::size_t> dims;
    for (int n = 0; n <= n_max; ++n) dims.push_back(CohomologySpace(*complex, n).dim());
    std::cout << "H^n(S;M) n=0.." << n_max << ": " << dims_text(dims) << "\n";
    j["over"] = "S";
    j["engine"] = engine;
    j["module"] = module_path.empty() ? std::string("trivial") : module_path;
    j["dims"] = dims;
  }
  write_json(c, j.dump(2) + "\n");
  return 0;
}

int cmd_stable(const Common& c, const std::string& module_path, int n_max, const std::string& engine, bool all) {
  const FusionSystem f = build(c);
  CohomologyOptions opts;
  opts.engine = engine_from_string(engine);
  opts.max_degree = n_max;
  opts.limits = c.limits();
  FusionCohomology calc(f, module_or_trivial(f, module_path), opts);
  std::vector<std::size_t> full, stable;
  for (int n = 0; n <= n_max; ++n) {
    full.push_back(calc.sylow_space(n).dim());
    stable.push_back((all ? calc.stable_elements_all_subgroups(n) : calc.stable_elements(n)).dim());
  }
  std::cout << "H^n(S;M)   n=0.." << n_max << ": " << dims_text(full) << "\n";
  std::cout << (all ? "H^n(F;M)   " : "H^n(F^c;M) ") << "n=0.." << n_max << ": " << dims_text(stable) << "\n";
  ordered_json j{{"schema", "fusionlab.stable/1"},
                 {"group", c.group},
                 {"p", c.p},
                 {"n_max", n_max},
                 {"engine", engine},
                 {"module", module_path.empty() ? std::string("trivial") : module_path},
                 {"subgroups", all ? "all" : "centric"},
                 {"full_dims", full},
                 {"stable_dims", stable}};
  write_json(c, j.dump(2) + "\n");
  return 0;
}

int cmd_theorem(const Common& c, const std::vector<std::string>& battery_args, int n_max, const std::string& engine) {
  const FusionSystem f = build(c);
  std::vector<BatteryModule> battery;
  const std::vector<std::string> args = battery_args.empty() ? std::vector<std::string>{"default"} : battery_args;
  for (const auto& a : args) {
    if (a == "default") {
      for (auto& b : default_battery(f)) add_to_battery(battery, std::move(b));
    } else {
      add_to_battery(battery, {a, load_module_file(a, f), {}});
    }
  }
  CohomologyOptions opts;
  opts.engine = engine_from_string(engine);
  opts.max_degree = n_max;
  opts.limits = c.limits();
  const TheoremReport r = run_theorem_check(c.group, f, battery, opts);
  std::cout << theorem_report_text(r);
  write_json(c, theorem_report_json(r));
  return r.exit_code();
}

int cmd_catalog(const Common& c) {
  ordered_json fams = ordered_json::array();
  std::cout << "families:\n";
  for (const auto& e : catalog_listing()) {
    std::cout << "  " << e.name << (e.params.empty() ? "" : " " + e.params) << "  " << e.description << "\n";
    fams.push_back({{"name", e.name}, {"params", e.params}, {"description", e.description}});
  }
  ordered_json inst = ordered_json::array();
  std::cout << "standard instances:\n";
  for (const auto& i : standard_instances()) {
    std::cout << "  " << i.descriptor << " p=" << i.p << "\n";
    inst.push_back({{"descriptor", i.descriptor}, {"p", i.p}});
  }
  write_json(c, ordered_json{{"schema", "fusionlab.catalog/1"}, {"families", fams}, {"instances", inst}}.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion systems, stable elements and the nilpotency criterion"};
  app.fallthrough();
  Common c;
  bool seed_catalog = false;
  app.add_option("--budget-mb", c.budget_mb, "memory budget for cochain matrices (MB)")->capture_default_str();
  app.add_option("--order-cap", c.order_cap, "largest group order accepted")->capture_default_str();
  app.add_option("--subgroup-cap", c.subgroup_cap, "largest group whose subgroups are enumerated")->capture_default_str();
  app.add_option("--json", c.json_path, "also write the result as JSON ('-' for stdout)");
  app.add_flag("--seed-catalog", seed_catalog, "list built-in groups and standard instances");
  app.require_subcommand(0, 1);

  auto group_args = [&](CLI::App* sub) {
    sub->add_option("group", c.group, "group file or catalog descriptor (e.g. S3, \"dihedral 8\")")->required();
    sub->add_option("-p,--prime", c.p, "the prime")->required();
  };

  auto* info = app.add_subcommand("info", "Sylow, focal and hyperfocal subgroups, centric classes");
  group_args(info);
  auto* nil = app.add_subcommand("nilpotency", "compare the four p-nilpotency tests");
  group_args(nil);

  std::string module_path, engine = "resolution";
  int n_max = 4;
  bool direct = false, all_subgroups = false;
  auto* coh = app.add_subcommand("cohomology", "dimensions of H^n(S;M)");
  group_args(coh);
  coh->add_option("-m,--module", module_path, "module file (default: trivial F_p)");
  coh->add_option("-n,--degree", n_max, "largest degree")->capture_default_str()->check(CLI::Range(0, 64));
  coh->add_option("--engine", engine, "cochain model: resolution or bar")->capture_default_str();
  coh->add_flag("--direct", direct, "H^n(G;F_p) of the whole group by bar cochains");

  auto* st = app.add_subcommand("stable", "dimensions of the stable elements H^n(F^c;M)");
  group_args(st);
  st->add_option("-m,--module", module_path, "module file (default: trivial F_p)");
  st->add_option("-n,--degree", n_max, "largest degree")->capture_default_str()->check(CLI::Range(0, 64));
  st->add_option("--engine", engine, "cochain model: resolution or bar")->capture_default_str();
  st->add_flag("--all-subgroups", all_subgroups, "quantify over every P ≤ S instead of the centric ones");

  std::vector<std::string> battery;
  auto* th = app.add_subcommand("theorem", "check the nilpotency criterion on one instance");
  group_args(th);
  th->add_option("--battery", battery, "'default' and/or module files");
  th->add_option("-n,--degree", n_max, "largest degree")->capture_default_str()->check(CLI::Range(1, 64));
  th->add_option("--engine", engine, "cochain model: resolution or bar")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (seed_catalog) return cmd_catalog(c);
    if (*info) return cmd_info(c);
    if (*nil) return cmd_nilpotency(c);
    if (*coh) return cmd_cohomology(c, module_path, n_max, engine, direct);
    if (*st) return cmd_stable(c, module_path, n_max, engine, all_subgroups);
    if (*th) return cmd_theorem(c, battery, n_max, engine);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
