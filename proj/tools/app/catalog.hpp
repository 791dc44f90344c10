#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plocal/group.hpp"
#include "plocal/permutation.hpp"

namespace plocal::app {

/// A group given by a catalog name or by explicit generators.
///
/// Grammar, factors joined by " x ":
///   sym:n  alt:n  (n <= 6)   cyc:n   dih:m (order m, m even, m >= 4)
///   triv   gens:n:<cycles>;<cycles>;...
struct GroupSpec {
  std::string text;
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

GroupSpec parse_group_spec(std::string_view text);
GroupPtr build_group(const GroupSpec& spec, std::size_t order_bound = kDefaultOrderBound);

/// Cycle notation with the degree taken from the largest point (at least 1).
Permutation parse_cycles(std::string_view text);

struct CatalogFamily {
  std::string syntax;
  std::string description;
};

std::vector<CatalogFamily> catalog_families();

/// The groups every verification suite runs over.
std::vector<std::string> acceptance_groups();

}  // namespace plocal::app
