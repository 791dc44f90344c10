#pragma once

#include <string>
#include <vector>

#include "plocal/group.hpp"
#include "plocal/permutation.hpp"

namespace plocal::testing {

inline GroupPtr make_group(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
  return PermutationGroup::enumerate(degree, gens);
}

inline ElemId element(const GroupPtr& g, const std::string& cycles) {
  return *g->find(Permutation::from_cycles(cycles, g->degree()));
}

inline Subgroup subgroup(const GroupPtr& g, const std::vector<std::string>& cycles) {
  std::vector<ElemId> gens;
  for (const auto& c : cycles) gens.push_back(element(g, c));
  return Subgroup::generated(g, gens);
}

inline GroupPtr s3() { return make_group(3, {"(1 2 3)", "(1 2)"}); }
inline GroupPtr s4() { return make_group(4, {"(1 2 3 4)", "(1 2)"}); }
inline GroupPtr a4() { return make_group(4, {"(1 2 3)", "(1 2 4)"}); }
inline GroupPtr d8() { return make_group(4, {"(1 2 3 4)", "(1 3)"}); }
inline GroupPtr d12() { return make_group(6, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}); }
inline GroupPtr z6() { return make_group(6, {"(1 2 3 4 5 6)"}); }
inline GroupPtr z3() { return make_group(3, {"(1 2 3)"}); }
inline GroupPtr z2() { return make_group(2, {"(1 2)"}); }
inline GroupPtr s3_x_z3() { return make_group(6, {"(1 2 3)", "(1 2)", "(4 5 6)"}); }

struct CatalogCase {
  const char* name;
  GroupPtr (*make)();
};

inline std::vector<CatalogCase> catalog_cases() {
  return {{"S3", s3}, {"S4", s4}, {"A4", a4}, {"D8", d8}, {"D12", d12}, {"Z6", z6}, {"S3xZ3", s3_x_z3}};
}

}  // namespace plocal::testing
