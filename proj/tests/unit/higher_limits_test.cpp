#include <gtest/gtest.h>

#include "plocal/errors.hpp"
#include "plocal/higher_limits.hpp"
#include "plocal/omega.hpp"
#include "unit/support.hpp"

namespace {

using namespace plocal;
using namespace plocal::testing;

using Dims = std::vector<std::size_t>;

DenseMatrix matrix(std::size_t n, std::vector<FpValue> entries) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = entries[i];
  return m;
}

// S_3 acting on the three nonzero vectors of F_2^2: (1 2 3) sends e1 -> e2 -> e1+e2.
ModuleData natural_module() {
  return ModuleData{2, {matrix(2, {0, 1, 1, 1}), matrix(2, {0, 1, 1, 0})}};
}

TEST(HigherLimits, InverseLimitIsDegreeZero) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto g = c.make();
      const auto orbit = p_subgroup_orbit_category(sylow_subgroup(g, p), p);
      for (std::size_t i = 0; i <= 2; ++i) {
        const auto f = cohomology_functor(orbit, p, i);
        EXPECT_EQ(higher_limits(f, 2).dims[0], inverse_limit_dimension(f)) << c.name;
      }
    }
}

TEST(HigherLimits, CohomologyDimensionsOfSmallGroups) {
  const auto d = sylow_subgroup(s4(), 2);
  EXPECT_EQ(GroupCohomology(d, 2, 0).dimension(), 1u);
  EXPECT_EQ(GroupCohomology(d, 2, 1).dimension(), 2u);
  EXPECT_EQ(GroupCohomology(d, 2, 2).dimension(), 3u);
  const auto z = Subgroup::whole(z3());
  EXPECT_EQ(GroupCohomology(z, 3, 1).dimension(), 1u);
  EXPECT_EQ(GroupCohomology(z, 3, 2).dimension(), 1u);
  EXPECT_EQ(GroupCohomology(z, 2, 2).dimension(), 0u);
  const auto v = subgroup(s4(), {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(GroupCohomology(v, 2, 2).dimension(), 3u);
}

TEST(HigherLimits, ConjugationActsTriviallyByInnerElements) {
  const auto d = sylow_subgroup(s4(), 2);
  const GroupCohomology h(d, 2, 1);
  for (ElemId g : d.members()) EXPECT_EQ(h.induced_from(h, g), DenseMatrix::identity(h.dimension()));
}

TEST(HigherLimits, CohomologyFunctorsAreFunctors) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto omega = build_omega(c.make(), p);
      const auto orbit = omega_orbit_category(omega);
      CohomologyCache cache(p, 2);
      EXPECT_TRUE(cohomology_functor(orbit, p, 2, {}, &cache).is_functor()) << c.name;
    }
}

TEST(HigherLimits, InvalidFunctorIsRejected) {
  const auto bz2 = build_group_category(z2());
  std::vector<DenseMatrix> mats(bz2->morphism_count());
  for (MorId f = 0; f < bz2->morphism_count(); ++f)
    mats[f] = bz2->is_identity(f) ? DenseMatrix::identity(1) : matrix(1, {2});
  const AbFunctor bad(bz2, 5, {1}, mats);
  EXPECT_FALSE(bad.is_functor());
  EXPECT_THROW(bad.verify(), NotAFunctor);
  const AbFunctor good(bz2, 3, {1}, mats);
  EXPECT_TRUE(good.is_functor());
}

TEST(HigherLimits, LambdaOfPPrimeGroupIsFixedPoints) {
  const auto g = z3();
  EXPECT_EQ(lambda_star(g, 2, ModuleData::trivial(*g)).dims, (Dims{1, 0, 0}));
}

TEST(HigherLimits, LambdaVanishesWithOrderPKernel) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto g = c.make();
      const auto m = ModuleData::trivial(*g);
      if (!kernel_has_order_p_element(*g, m, p)) continue;
      EXPECT_TRUE(lambda_star(g, p, m).vanishes()) << c.name << " p=" << p;
    }
}

TEST(HigherLimits, SteinbergModuleOfSymmetricGroupOnThree) {
  const auto g = s3();
  const auto m = natural_module();
  EXPECT_NO_THROW(module_action(*g, m, PrimeField(2)));
  EXPECT_FALSE(kernel_has_order_p_element(*g, m, 2));
  EXPECT_EQ(lambda_star(g, 2, m).dims, (Dims{0, 1, 0}));
}

TEST(HigherLimits, BadModuleIsRejected) {
  const auto g = s3();
  const ModuleData m{2, {matrix(2, {0, 1, 1, 0}), matrix(2, {0, 1, 1, 0})}};
  EXPECT_THROW(module_action(*g, m, PrimeField(2)), NotAFunctor);
}

TEST(HigherLimits, PuncturedFunctorsVanish) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto omega = build_omega(c.make(), p);
      for (const auto& cls : omega.classes()) {
        const auto& q = omega.members()[cls[0]];
        for (std::size_t i = 0; i <= 2; ++i) {
          const auto v = punctured_vanishing(omega, q, i);
          EXPECT_EQ(v.applicable, !is_centric(q, p));
          if (v.applicable) EXPECT_TRUE(v.ok()) << c.name << " p=" << p << " i=" << i;
        }
      }
    }
}

TEST(HigherLimits, NormalizerQuotientAgrees) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto s = sylow_subgroup(c.make(), p);
      for (const auto& q : conjugacy_representatives(all_subgroups(s)))
        for (std::size_t i = 0; i <= 1; ++i) {
          const auto v = normalizer_quotient_check(s, p, q, i);
          EXPECT_TRUE(v.ok()) << c.name << " p=" << p << " |Q|=" << q.order();
          EXPECT_EQ(v.quotient_order, normalizer(q).order() / q.order());
        }
    }
}

TEST(HigherLimits, RestrictionToUpwardClosedSupport) {
  const auto g = s3();
  const auto orbit = p_subgroup_orbit_category(sylow_subgroup(g, 2), 2);
  ASSERT_EQ(orbit->object_count(), 2u);
  const auto f = cohomology_functor(orbit, 2, 1, {false, true});
  const auto v = restriction_check(f, {1});
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.full, v.restricted);
  EXPECT_THROW(restriction_check(f, {0}), UpwardClosureViolated);
}

TEST(HigherLimits, FiltrationStagesPreserveLimits) {
  for (const auto& [make, p, stages] :
       std::vector<std::tuple<GroupPtr (*)(), unsigned, std::size_t>>{{s3, 2, 1}, {d12, 2, 1}, {a4, 3, 1}, {s4, 2, 0}}) {
    const auto omega = build_omega(make(), p);
    for (std::size_t i = 0; i <= 2; ++i) {
      const auto v = filtration_pipeline(omega, i);
      EXPECT_TRUE(v.ok());
      EXPECT_FALSE(v.first_failure().has_value());
      EXPECT_EQ(v.stages.size(), stages);
      EXPECT_EQ(v.centric_end, v.omega_end);
    }
  }
}

TEST(HigherLimits, ProfileText) {
  EXPECT_EQ(to_string(LimitsProfile{{1, 0, 0}}), "[1, 0, 0]");
  EXPECT_TRUE((LimitsProfile{{0, 0}}.vanishes()));
  EXPECT_FALSE((LimitsProfile{{0, 1}}.vanishes()));
}

}  // namespace
