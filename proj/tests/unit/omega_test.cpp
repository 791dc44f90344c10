#include <gtest/gtest.h>

#include <set>

#include "plocal/errors.hpp"
#include "plocal/omega.hpp"
#include "unit/support.hpp"

namespace {

using namespace plocal;
using namespace plocal::testing;

// Intersections of every nonempty family of Sylow subgroups, by closing
// the Sylow list under pairwise intersection.
std::set<std::vector<ElemId>> brute_omega(const GroupPtr& g, unsigned p) {
  std::set<std::vector<ElemId>> seen;
  std::vector<Subgroup> work = sylow_conjugates(sylow_subgroup(g, p));
  for (const auto& s : work) seen.insert({s.members().begin(), s.members().end()});
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto x = intersection(work[i], work[j]);
      if (seen.insert({x.members().begin(), x.members().end()}).second) work.push_back(x);
    }
  return seen;
}

TEST(Omega, MatchesBruteIntersections) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto g = c.make();
      const auto omega = build_omega(g, p);
      const auto oracle = brute_omega(g, p);
      ASSERT_EQ(omega.size(), oracle.size()) << c.name << " p=" << p;
      for (const auto& m : omega.members())
        EXPECT_TRUE(oracle.contains({m.members().begin(), m.members().end()}));
      for (std::size_t i = 0; i < omega.size(); ++i)
        for (std::size_t j = 0; j < omega.size(); ++j)
          EXPECT_EQ(omega.leq(i, j), omega.members()[i].is_subgroup_of(omega.members()[j]));
      for (std::size_t i = 0; i < omega.size(); ++i) EXPECT_TRUE(omega.leq(omega.minimum(), i));
    }
}

TEST(Omega, SymmetricGroupOnFour) {
  const auto omega = build_omega(s4(), 2);
  ASSERT_EQ(omega.size(), 4u);
  EXPECT_EQ(omega.members()[omega.minimum()].order(), 4u);
  EXPECT_EQ(omega.classes().size(), 2u);
  EXPECT_EQ(chain_length(omega), 1u);
  EXPECT_EQ(omega.hasse_edges().size(), 3u);
  EXPECT_EQ(omega.inside_sylow().size(), 2u);
}

TEST(Omega, SymmetricGroupOnThree) {
  const auto omega = build_omega(s3(), 2);
  ASSERT_EQ(omega.size(), 4u);
  EXPECT_EQ(omega.members()[omega.minimum()].order(), 1u);
  EXPECT_EQ(chain_length(omega), 1u);
  EXPECT_EQ(build_omega(s3(), 3).size(), 1u);
  EXPECT_EQ(chain_length(build_omega(s3(), 3)), 0u);
}

TEST(Omega, ClassesArePartitionUnderConjugation) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto omega = build_omega(c.make(), p);
      std::size_t total = 0;
      for (const auto& cls : omega.classes()) {
        total += cls.size();
        for (std::size_t m : cls) EXPECT_TRUE(are_conjugate(omega.members()[cls[0]], omega.members()[m]));
      }
      EXPECT_EQ(total, omega.size());
      for (std::size_t a = 0; a < omega.classes().size(); ++a)
        for (std::size_t b = a + 1; b < omega.classes().size(); ++b)
          EXPECT_FALSE(are_conjugate(omega.members()[omega.classes()[a][0]], omega.members()[omega.classes()[b][0]]));
    }
}

TEST(Omega, CircClosureIsIntersectionOfOverSylows) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto g = c.make();
      const auto omega = build_omega(g, p);
      for (const auto& q : all_subgroups(omega.sylow())) {
        auto oracle = omega.sylow();
        for (const auto& s : omega.sylows())
          if (q.is_subgroup_of(s)) oracle = intersection(oracle, s);
        EXPECT_EQ(circ_closure(omega, q), oracle) << c.name;
      }
    }
}

TEST(Omega, CircRejectsNonPSubgroup) {
  const auto g = s3();
  const auto omega = build_omega(g, 2);
  EXPECT_THROW(circ_closure(omega, Subgroup::whole(g)), NotPSubgroup);
}

TEST(Omega, ClosurePropertiesHold) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto omega = build_omega(c.make(), p);
      const auto tests = all_subgroups(omega.sylow());
      const auto v = check_closure_properties(omega, tests);
      EXPECT_TRUE(v.ok()) << c.name << " p=" << p;
      EXPECT_EQ(v.subgroups_tested, tests.size());
    }
}

TEST(Omega, CentricityExamples) {
  const auto g = s4();
  EXPECT_TRUE(is_centric(subgroup(g, {"(1 2)(3 4)", "(1 3)(2 4)"}), 2));
  EXPECT_TRUE(is_centric(sylow_subgroup(g, 2), 2));
  EXPECT_FALSE(is_centric(subgroup(g, {"(1 2)"}), 2));
  EXPECT_FALSE(is_centric(subgroup(g, {"(1 2)(3 4)"}), 2));
  EXPECT_FALSE(is_centric(Subgroup::trivial(g), 2));
  EXPECT_TRUE(is_centric(subgroup(g, {"(1 2 3)"}), 3));
  // Centric by the Sylow-of-centralizer definition, checked directly.
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u})
      for (const auto& q : all_subgroups(sylow_subgroup(c.make(), p))) {
        const auto cg = centralizer(q);
        EXPECT_EQ(is_centric(q, p), p_part(cg.order(), p) == center(q).order()) << c.name;
      }
}

TEST(Omega, DecompositionOfCentricCentralizers) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto subs = all_subgroups(sylow_subgroup(c.make(), p));
      for (const auto& e : classify_centric(p, subs)) {
        if (!e.is_centric) continue;
        EXPECT_TRUE(decomposition_holds(e, p)) << c.name;
        EXPECT_EQ(e.center.order() * e.residual.order(), e.centralizer.order());
      }
    }
}

}  // namespace
