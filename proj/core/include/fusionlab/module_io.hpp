#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionlab/fp_module.hpp"
#include "fusionlab/fusion_system.hpp"

namespace fusionlab {

/// The generators of S whose matrices a module file lists, in order. When S
/// is the whole group and the group came with generators, those are used in
/// input order; otherwise the greedy generating set Subgroup::generators().
std::vector<ElementId> module_generator_order(const FusionSystem& f);

/// Module file:
///   `module p=<p> dim=<d> generators=<k>`
///   then k blocks of d rows, each row d space-separated residues.
/// Blank lines and '#' comments are ignored.
FpModule parse_module_text(std::string_view text, const std::string& source, const Subgroup& acting,
                           std::span<const ElementId> gens);
FpModule load_module_file(const std::filesystem::path& path, const FusionSystem& f);

/// Writes `m` in the module file format against the given generators.
std::string format_module(const FpModule& m, std::span<const ElementId> gens);

}  // namespace fusionlab
