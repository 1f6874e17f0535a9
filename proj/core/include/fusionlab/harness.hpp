#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusionlab/cohomology.hpp"
#include "fusionlab/fp_module.hpp"
#include "fusionlab/fusion_system.hpp"

namespace fusionlab {

// ---- p-nilpotency oracles -------------------------------------------------
// Both work on G directly and never look at fusion data.

/// The p′-elements of G form a subgroup (then it is a normal p-complement).
bool p_nilpotent_closure(const GroupPtr& g, Prime p);

/// Frobenius: N_G(Q)/C_G(Q) is a p-group for every p-subgroup Q. Every
/// p-subgroup is conjugate to one inside a fixed Sylow subgroup and the
/// quotient order is a conjugacy invariant, so those are the ones checked.
bool p_nilpotent_frobenius(const GroupPtr& g, Prime p, const Limits& limits = {});

// ---- module battery -------------------------------------------------------

struct BatteryModule {
  std::string id;
  FpModule module;
  std::vector<std::string> aliases;  // other battery ids with an identical action
};

/// trivial F_p, F_p[S/foc], F_p[S/hyp] and the 1-dimensional characters of
/// S/foc into F_p^×, with identical modules merged (first id wins).
std::vector<BatteryModule> default_battery(const FusionSystem& f);

/// Appends `extra`, merging it into an existing entry if the action agrees.
void add_to_battery(std::vector<BatteryModule>& battery, BatteryModule extra);

/// Dimension-by-degree scan of the vanishing criterion: "if H^m(F^c;M) = 0 for some
/// m > 0, then H^n(F^c;M) = 0 for every n > 0", checked for 1 ≤ m,n ≤ n_max.
enum class ScanStatus { Holds, Violated, Skipped, Error };
std::string to_string(ScanStatus s);

struct ModuleScan {
  std::string id;
  std::vector<std::string> aliases;
  std::string label;
  std::size_t dim = 0;
  bool f_invariant = false;         // foc acts trivially
  bool f_invariant_direct = false;  // quantifier form over all P, φ
  bool compatible = false;          // over centric subgroups
  bool compatible_all = false;      // over all subgroups
  std::string incompatibility;      // witness text when !compatible

  ScanStatus status = ScanStatus::Skipped;
  std::vector<std::size_t> full_dims;        // dim H^n(S;M), n = 0..n_max
  std::vector<std::size_t> stable_dims;      // dim H^n(F^c;M), empty when skipped
  std::vector<std::size_t> stable_all_dims;  // over all P ≤ S, empty unless compatible_all
  std::optional<int> vanishing_degree;       // m: first 0 < m ≤ n_max with H^m = 0
  std::optional<int> nonvanishing_degree;    // n: first 0 < n ≤ n_max with H^n ≠ 0
  std::string error;
};

std::vector<ModuleScan> vanishing_scan(const FusionSystem& f, const std::vector<BatteryModule>& battery,
                                           const CohomologyOptions& options);

enum class KeyStepStatus { Holds, Failed, Skipped, Error };
std::string to_string(KeyStepStatus s);

/// dim H^1(F^c; F_p[S/hyp]) = 0, with the module's stable dims for n ≤ n_max.
struct KeyStepReport {
  KeyStepStatus status = KeyStepStatus::Skipped;
  std::size_t module_dim = 0;
  std::vector<std::size_t> stable_dims;
  std::string witness;  // incompatibility witness or error text
};

KeyStepReport key_step_check(const FusionSystem& f, const CohomologyOptions& options);

// ---- theorem pipeline -----------------------------------------------------

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

enum class TheoremStatus { Holds, Violated, Inconclusive };
std::string to_string(TheoremStatus s);

struct TheoremReport {
  std::string descriptor;
  std::string group_name;
  std::size_t group_order = 0;
  std::uint32_t p = 0;
  int n_max = 0;
  Engine engine = Engine::Resolution;

  std::size_t sylow_order = 0;
  std::vector<std::string> sylow_generators;
  std::size_t focal_order = 0;
  std::vector<std::string> focal_generators;
  std::size_t hyperfocal_order = 0;
  std::vector<std::string> hyperfocal_generators;
  std::size_t subgroup_count = 0;
  std::size_t conjugacy_class_count = 0;
  std::size_t centric_class_count = 0;
  std::size_t centric_subgroup_count = 0;

  bool nilpotent_fusion = false;
  bool nilpotent_hyperfocal = false;
  bool nilpotent_closure = false;
  bool nilpotent_frobenius = false;
  std::string nilpotency_witness;

  std::vector<ModuleScan> modules;
  KeyStepReport key_step;
  std::vector<Check> checks;
  TheoremStatus theorem = TheoremStatus::Inconclusive;

  bool consistent() const;
  /// 0 consistent, 1 inconsistent, 2 consistent but inconclusive.
  int exit_code() const;
};

TheoremReport run_theorem_check(const std::string& descriptor, const FusionSystem& f,
                                const std::vector<BatteryModule>& battery, const CohomologyOptions& options);

/// Deterministic JSON (fixed key order, no timings).
std::string theorem_report_json(const TheoremReport& r);
std::string theorem_report_text(const TheoremReport& r);

/// Display helpers shared with the CLI.
std::string element_label(const Group& g, ElementId x);
std::vector<std::string> generator_labels(const Subgroup& s);

}  // namespace fusionlab
