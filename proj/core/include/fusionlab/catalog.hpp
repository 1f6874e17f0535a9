#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionlab/group.hpp"

namespace fusionlab {

/// A group presented by permutation generators.
struct PermPresentation {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::string name;
};

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string description;
};

/// Built-in families:
///   cyclic n, dihedral N (order N), quaternion 8, symmetric n (n ≤ 5),
///   alternating n (n ≤ 5), elementary_abelian p k, special_linear_2_3,
///   semidirect_cyclic n m r  (C_n ⋊ C_m, generator of C_m acting by x ↦ x^r),
///   direct A... x B...       (direct product of two catalog entries).
PermPresentation catalog_presentation(std::string_view name, std::span<const std::string> params);

GroupPtr group_from_catalog(std::string_view name, std::span<const std::string> params,
                            const Limits& limits = {});

/// Accepts "symmetric 3", "symmetric:3" or a short alias such as "S3", "A4",
/// "D8", "Q8", "C9", "V4", "SL23".
GroupPtr group_from_descriptor(std::string_view descriptor, const Limits& limits = {});

std::vector<CatalogEntry> catalog_listing();

/// (descriptor, prime) pairs used by the theorem battery and the test suites.
struct CatalogInstance {
  std::string descriptor;
  std::uint32_t p;
};
std::vector<CatalogInstance> standard_instances();

}  // namespace fusionlab
