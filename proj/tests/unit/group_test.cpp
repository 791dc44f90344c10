#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "plocal/errors.hpp"
#include "plocal/group.hpp"
#include "unit/support.hpp"

namespace {

using namespace plocal;
using namespace plocal::testing;

// Closure by repeated multiplication until nothing new appears.
std::set<Permutation> brute_closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> out{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> current(out.begin(), out.end());
    for (const auto& a : current)
      for (const auto& g : gens) grew |= out.insert(a * g).second;
  }
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(Group, EnumerationMatchesBruteClosure) {
  for (const auto& c : catalog_cases()) {
    const auto g = c.make();
    const std::vector<Permutation> gens(g->generators().begin(), g->generators().end());
    const auto oracle = brute_closure(gens, g->degree());
    ASSERT_EQ(g->order(), oracle.size()) << c.name;
    for (const auto& x : g->elements()) EXPECT_TRUE(oracle.contains(x)) << c.name;
  }
}

TEST(Group, KnownOrders) {
  EXPECT_EQ(s3()->order(), 6u);
  EXPECT_EQ(s4()->order(), factorial(4));
  EXPECT_EQ(a4()->order(), 12u);
  EXPECT_EQ(d8()->order(), 8u);
  EXPECT_EQ(d12()->order(), 12u);
  EXPECT_EQ(s3_x_z3()->order(), 18u);
  EXPECT_EQ(make_group(5, {"(1 2 3 4 5)", "(1 2)"})->order(), 120u);
}

TEST(Group, OrderBound) {
  EXPECT_THROW(PermutationGroup::enumerate(
                   5, {Permutation::from_cycles("(1 2 3 4 5)", 5), Permutation::from_cycles("(1 2)", 5)}, 100),
               OrderBoundExceeded);
}

TEST(Group, MultiplicationTableAgreesWithPermutations) {
  const auto g = s4();
  EXPECT_EQ(g->element(PermutationGroup::identity()), Permutation::identity(4));
  for (ElemId a = 0; a < g->order(); ++a)
    for (ElemId b = 0; b < g->order(); ++b) EXPECT_EQ(g->element(g->mul(a, b)), g->element(a) * g->element(b));
}

TEST(Group, ConjugationComposes) {
  for (const auto& c : catalog_cases()) {
    const auto g = c.make();
    const auto subs = all_subgroups(Subgroup::whole(g));
    for (const auto& p : subs)
      for (ElemId x = 0; x < g->order(); x += 3)
        for (ElemId y = 0; y < g->order(); y += 5)
          EXPECT_EQ(conjugate(conjugate(p, x), y), conjugate(p, g->mul(x, y))) << c.name;
  }
}

TEST(Group, TransportersCompose) {
  const auto g = s4();
  const auto subs = all_subgroups(Subgroup::whole(g));
  for (std::size_t i = 0; i < subs.size(); i += 2)
    for (std::size_t j = 0; j < subs.size(); j += 3)
      for (std::size_t k = 0; k < subs.size(); k += 4) {
        const auto tij = transporter(subs[i], subs[j]);
        const auto tjk = transporter(subs[j], subs[k]);
        const auto tik = transporter(subs[i], subs[k]);
        for (ElemId a : tij)
          for (ElemId b : tjk) EXPECT_TRUE(std::binary_search(tik.begin(), tik.end(), g->mul(a, b)));
      }
}

TEST(Group, TransporterIsDefinition) {
  const auto g = d12();
  const auto subs = all_subgroups(Subgroup::whole(g));
  for (const auto& p : subs)
    for (const auto& q : subs) {
      std::vector<ElemId> oracle;
      for (ElemId x = 0; x < g->order(); ++x)
        if (conjugate(p, x).is_subgroup_of(q)) oracle.push_back(x);
      EXPECT_EQ(transporter(p, q), oracle);
    }
}

TEST(Group, LagrangeAndClosure) {
  for (const auto& c : catalog_cases()) {
    const auto g = c.make();
    for (const auto& h : all_subgroups(Subgroup::whole(g))) {
      EXPECT_TRUE(h.is_closed());
      EXPECT_EQ(g->order() % h.order(), 0u) << c.name;
    }
  }
}

TEST(Group, SubgroupCountsOfSmallGroups) {
  EXPECT_EQ(all_subgroups(Subgroup::whole(s3())).size(), 6u);
  EXPECT_EQ(all_subgroups(Subgroup::whole(s4())).size(), 30u);
  EXPECT_EQ(all_subgroups(Subgroup::whole(a4())).size(), 10u);
  EXPECT_EQ(all_subgroups(Subgroup::whole(d8())).size(), 10u);
  EXPECT_EQ(conjugacy_representatives(all_subgroups(Subgroup::whole(s4()))).size(), 11u);
}

TEST(Group, SylowTheorems) {
  for (const auto& c : catalog_cases()) {
    const auto g = c.make();
    for (unsigned p : {2u, 3u, 5u}) {
      const auto s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), p_part(g->order(), p)) << c.name << " p=" << p;
      EXPECT_TRUE(is_p_group(s, p));
      EXPECT_TRUE(is_sylow(s, p));
      const auto all = sylow_conjugates(s);
      EXPECT_EQ(all.size() % p, 1u % p);
      EXPECT_EQ(g->order() % all.size(), 0u);
      // Every p-subgroup lies in some Sylow subgroup, and all Sylows are conjugate.
      for (const auto& h : all_subgroups(Subgroup::whole(g))) {
        if (!is_p_group(h, p)) continue;
        EXPECT_TRUE(std::ranges::any_of(all, [&](const Subgroup& t) { return h.is_subgroup_of(t); }));
        if (h.order() == s.order()) EXPECT_TRUE(are_conjugate(h, s));
      }
    }
  }
}

TEST(Group, SylowCounts) {
  EXPECT_EQ(sylow_conjugates(sylow_subgroup(s4(), 2)).size(), 3u);
  EXPECT_EQ(sylow_conjugates(sylow_subgroup(s4(), 3)).size(), 4u);
  EXPECT_EQ(sylow_conjugates(sylow_subgroup(s3(), 2)).size(), 3u);
  EXPECT_EQ(sylow_conjugates(sylow_subgroup(a4(), 2)).size(), 1u);
}

TEST(Group, CentralizerNormalizerCenter) {
  const auto g = s4();
  const auto v4 = subgroup(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(centralizer(v4), v4);
  EXPECT_EQ(normalizer(v4).order(), 24u);
  const auto d = sylow_subgroup(g, 2);
  EXPECT_EQ(center(d).order(), 2u);
  EXPECT_EQ(center(Subgroup::whole(g)).order(), 1u);
  EXPECT_EQ(center(Subgroup::whole(z6())).order(), 6u);
  const auto t = subgroup(g, {"(1 2)"});
  EXPECT_EQ(centralizer(t).order(), 4u);
  EXPECT_EQ(normalizer(t), centralizer(t));
}

TEST(Group, OpResidual) {
  EXPECT_EQ(op_residual(Subgroup::whole(s4()), 2).order(), 12u);
  EXPECT_EQ(op_residual(Subgroup::whole(s4()), 3).order(), 24u);
  EXPECT_EQ(op_residual(Subgroup::whole(s3()), 3).order(), 6u);
  EXPECT_EQ(op_residual(Subgroup::whole(d8()), 2).order(), 1u);
  EXPECT_EQ(op_residual(Subgroup::whole(z6()), 2).order(), 3u);
}

TEST(Group, QuotientIsHomomorphism) {
  const auto g = s4();
  const auto v4 = subgroup(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto whole = Subgroup::whole(g);
  const auto q = quotient(whole, v4);
  ASSERT_EQ(q.group->order(), 6u);
  const auto m = whole.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto k = static_cast<std::size_t>(std::ranges::find(m, g->mul(m[i], m[j])) - m.begin());
      EXPECT_EQ(q.image[k], q.group->mul(q.image[i], q.image[j]));
    }
}

TEST(Group, PrimeHelpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(4));
  EXPECT_EQ(p_part(24, 2), 8u);
  EXPECT_EQ(p_part(24, 3), 3u);
  EXPECT_EQ(p_part(24, 5), 1u);
  EXPECT_TRUE(is_p_power(1, 3));
  EXPECT_FALSE(is_p_power(6, 2));
}

}  // namespace
