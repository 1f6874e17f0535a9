#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fusionlab/group.hpp"

namespace fusionlab {

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& perm);

/// Group input file:
///   line 1: `perm <degree>` or `catalog <name> [params]`
///   then (perm only) one generator per line in cycle notation.
/// Blank lines and lines starting with '#' are ignored.
GroupPtr parse_group_text(std::string_view text, const std::string& source, const Limits& limits = {});
GroupPtr load_group_file(const std::filesystem::path& path, const Limits& limits = {});

/// A path to an existing group file, otherwise a catalog descriptor.
GroupPtr resolve_group(const std::string& argument, const Limits& limits = {});

}  // namespace fusionlab
