#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"
#include "plocal/errors.hpp"
#include "plocal/homology.hpp"
#include "plocal/omega.hpp"
#include "unit/support.hpp"

namespace {

using namespace plocal;
using namespace plocal::testing;

using Dims = std::vector<std::size_t>;

Dims bar_dims(const GroupPtr& g, unsigned p, std::size_t top) {
  return fp_homology(bar_complex(g, p, top).complex).dims;
}

TEST(Homology, CyclicGroupOfOrderTwo) {
  EXPECT_EQ(bar_dims(z2(), 2, 5), (Dims{1, 1, 1, 1, 1}));
  EXPECT_EQ(bar_dims(z2(), 3, 4), (Dims{1, 0, 0, 0}));
}

TEST(Homology, SymmetricGroupOnThree) {
  EXPECT_EQ(bar_dims(s3(), 2, 4), (Dims{1, 1, 1, 1}));
  EXPECT_EQ(bar_dims(s3(), 3, 5), (Dims{1, 0, 0, 1, 1}));
}

TEST(Homology, PrimeToOrderIsAcyclic) {
  EXPECT_EQ(bar_dims(z3(), 2, 4), (Dims{1, 0, 0, 0}));
}

TEST(Homology, NormalizedBarMatchesUnnormalizedOracle) {
  for (const auto& [make, p, top] : std::vector<std::tuple<GroupPtr (*)(), unsigned, std::size_t>>{
           {s3, 2, 4}, {s3, 3, 4}, {z6, 2, 3}, {z6, 3, 3}, {d8, 2, 3}, {a4, 2, 3}, {a4, 3, 3}}) {
    const auto g = make();
    EXPECT_EQ(bar_dims(g, p, top), oracle::bar_homology(*g, p, top)) << "order " << g->order() << " p=" << p;
  }
}

TEST(Homology, BoundarySquaresToZero) {
  for (const auto& c : catalog_cases())
    for (unsigned p : {2u, 3u}) {
      const auto omega = build_omega(c.make(), p);
      const std::vector<Subgroup> members(omega.members().begin(), omega.members().end());
      EXPECT_TRUE(nerve_complex(build_transporter(members), p, 3).complex.squares_to_zero()) << c.name;
      EXPECT_TRUE(nerve_complex(build_orbit(members), p, 3).complex.squares_to_zero()) << c.name;
    }
}

TEST(Homology, TerminalObjectMakesNerveContractible) {
  for (const auto& c : catalog_cases()) {
    const auto g = c.make();
    // The whole group is terminal in the orbit category.
    const auto o = build_orbit(all_subgroups(Subgroup::whole(g)));
    EXPECT_EQ(fp_homology(nerve_complex(o, 2, 3).complex).dims, (Dims{1, 0, 0})) << c.name;
  }
}

TEST(Homology, NormalSylowTransporterIsBar) {
  // A_4 at 2: the Sylow subgroup is normal and Ω is a single object.
  const auto g = a4();
  const auto t = build_transporter({sylow_subgroup(g, 2)});
  EXPECT_EQ(fp_homology(nerve_complex(t, 2, 4).complex).dims, bar_dims(g, 2, 4));
}

TEST(Homology, SkeletonInclusionIsIsomorphism) {
  const auto g = s4();
  std::vector<Subgroup> objs;
  for (auto& h : all_subgroups(Subgroup::whole(g)))
    if (is_p_group(h, 2) && is_centric(h, 2)) objs.push_back(h);
  const auto t = build_transporter(objs);
  const auto sk = skeleton(t);
  const auto a = nerve_complex(sk.category, 2, 3);
  const auto b = nerve_complex(t, 2, 3);
  const auto f = induced_chain_map(sk.inclusion, a, b);
  EXPECT_TRUE(f.commutes_with(a.complex, b.complex));
  const auto v = homology_iso_verdict(a.complex, b.complex, f);
  EXPECT_EQ(v.certified_max, 1u);
  EXPECT_TRUE(v.all_iso());
}

TEST(Homology, PointIntoClassifyingSpaceIsNotIso) {
  const auto point = build_group_category(PermutationGroup::enumerate(1, {}));
  const auto bz2 = build_group_category(z2());
  CategoryFunctor f{point, bz2, {0}, {bz2->identity(0)}};
  const auto a = nerve_complex(point, 2, 4);
  const auto b = nerve_complex(bz2, 2, 4);
  const auto v = homology_iso_verdict(a.complex, b.complex, induced_chain_map(f, a, b));
  ASSERT_EQ(v.iso.size(), 3u);
  EXPECT_TRUE(v.iso[0]);
  EXPECT_FALSE(v.iso[1]);
  EXPECT_FALSE(v.all_iso());
  // Over F_3 the map is an isomorphism.
  const auto a3 = nerve_complex(point, 3, 4);
  const auto b3 = nerve_complex(bz2, 3, 4);
  EXPECT_TRUE(homology_iso_verdict(a3.complex, b3.complex, induced_chain_map(f, a3, b3)).all_iso());
}

TEST(Homology, ConeOfIdentityIsAcyclic) {
  const auto c = bar_complex(s3(), 2, 4);
  const auto id = induced_chain_map(identity_functor(c.index->category_ptr()), c, c);
  const auto cone = mapping_cone(c.complex, c.complex, id);
  EXPECT_TRUE(cone.squares_to_zero());
  for (std::size_t d : fp_homology(cone).dims) EXPECT_EQ(d, 0u);
}

TEST(Homology, ChainIndexLookup) {
  const auto t = build_transporter(all_subgroups(sylow_subgroup(s4(), 2)));
  const ChainIndex index(t, 3);
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t k = 0; k < index.count(d); k += 7) EXPECT_EQ(index.index(index.chain(d, k)), k);
}

TEST(Homology, BudgetIsEnforced) {
  EXPECT_THROW(bar_complex(s4(), 2, 4, 1000), BudgetExceeded);
}

TEST(Homology, ComplexTextRoundTrip) {
  const auto c = nerve_complex(build_orbit(all_subgroups(Subgroup::whole(s3()))), 3, 3).complex;
  std::stringstream buffer;
  write_complex_text(buffer, c);
  const auto back = read_complex_text(buffer);
  EXPECT_EQ(back.dims, c.dims);
  EXPECT_EQ(back.maps, c.maps);
  EXPECT_EQ(back.prime, c.prime);
}

TEST(Homology, FrozenGoldenMatchesOracle) {
  std::ifstream in(std::string(PLOCAL_GOLDEN_DIR) + "/sym4_p2.json");
  ASSERT_TRUE(in.good());
  const auto golden = nlohmann::json::parse(in)["bar_homology"].get<Dims>();
  EXPECT_EQ(golden, oracle::bar_homology(*s4(), 2, 3));
  EXPECT_EQ(golden, bar_dims(s4(), 2, 3));
}

}  // namespace
