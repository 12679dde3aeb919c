#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "twc/census.hpp"
#include "twc/families.hpp"

using namespace twc;

namespace {

std::shared_ptr<const Field> field(std::uint32_t q) { return std::make_shared<const Field>(Field::make(q)); }

std::multiset<std::uint64_t> sizes(const CensusResult& c) {
  std::multiset<std::uint64_t> s;
  for (const CensusOrbit& o : c.orbits) s.insert(o.size);
  return s;
}

// Orbit sizes of the E_nGamma lines from point-set images under every element.
std::multiset<std::uint64_t> slow_sizes(const CubicModel& m) {
  const Field& f = m.field();
  const auto group = enumerate_group(f);
  std::vector<Mat4> mats;
  for (const GroupElement& g : group) mats.push_back(action_matrix(f, g));
  std::set<LineKey> seen;
  std::multiset<std::uint64_t> out;
  for_each_line(f, [&](const ProjLine& l) {
    if (!m.is_EnG(l.key) || seen.contains(l.key)) return;
    std::set<LineKey> orb;
    for (const Mat4& a : mats) orb.insert(line_through(f, act_point(f, a, l.a), act_point(f, a, l.b)).key);
    seen.insert(orb.begin(), orb.end());
    out.insert(orb.size());
  });
  return out;
}

}  // namespace

TEST(Census, FiveMatchesPointSetOrbits) {
  const CubicModel m(field(5));
  const CensusResult c = run_census(m);
  EXPECT_EQ(c.q, 5u);
  EXPECT_EQ(c.total, 480u);
  EXPECT_EQ(sizes(c), slow_sizes(m));
}

TEST(Census, SevenHasTheA4Orbit) {
  const CubicModel m(field(7));
  const CensusResult c = run_census(m);
  EXPECT_EQ(c.total, 2016u);
  EXPECT_EQ(c.orbits.size(), 12u);
  EXPECT_EQ(sizes(c), slow_sizes(m));
  int with_lrho = 0;
  for (const CensusOrbit& o : c.orbits) {
    if (o.lrho.empty()) continue;
    ++with_lrho;
    EXPECT_EQ(o.lrho.size(), 2u);
    const bool has3 = std::find(o.lrho.begin(), o.lrho.end(), 3u) != o.lrho.end();
    if (has3) {
      EXPECT_EQ(o.size, 28u);
      EXPECT_TRUE(std::find(o.lrho.begin(), o.lrho.end(), 4u) != o.lrho.end());
    }
  }
  EXPECT_EQ(with_lrho, 3);
}

TEST(Census, EightPutsEveryLRhoInOneOrbit) {
  const CubicModel m(field(8));
  const CensusResult c = run_census(m);
  EXPECT_EQ(c.total, 3528u);
  std::uint64_t sum = 0;
  int holders = 0;
  for (const CensusOrbit& o : c.orbits) {
    sum += o.size;
    EXPECT_EQ(504u % o.size, 0u);
    if (!o.lrho.empty()) {
      ++holders;
      EXPECT_EQ(o.size, 504u);
      EXPECT_EQ(o.lrho.size(), 7u);
      EXPECT_TRUE(o.has_L);
    }
  }
  EXPECT_EQ(sum, c.total);
  EXPECT_EQ(holders, 1);
}

TEST(Census, ElevenPlacesEllMinusThirdWithTheLRho) {
  const CubicModel m(field(11));
  const CensusResult c = run_census(m);
  const std::uint32_t third = m.field().neg(m.field().inv(m.field().from_int(3))).code;
  for (const CensusOrbit& o : c.orbits) {
    if (o.lrho.empty()) continue;
    EXPECT_EQ(o.size, 660u);
    EXPECT_TRUE(std::find(o.ellmu.begin(), o.ellmu.end(), third) != o.ellmu.end());
  }
}

TEST(Census, DeterministicOrder) {
  const CubicModel m(field(7));
  const CensusResult a = run_census(m), b = run_census(m);
  ASSERT_EQ(a.orbits.size(), b.orbits.size());
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    EXPECT_EQ(a.orbits[i].representative, b.orbits[i].representative);
    EXPECT_EQ(a.orbits[i].size, b.orbits[i].size);
  }
  for (std::size_t i = 1; i < a.orbits.size(); ++i)
    EXPECT_LT(line_index(m.field(), a.orbits[i - 1].representative), line_index(m.field(), a.orbits[i].representative));
}

TEST(Census, CapAndCharacteristicThree) {
  const CubicModel m(field(5));
  EXPECT_THROW(run_census(m, 100), CensusCapExceeded);
  EXPECT_THROW(run_census(CubicModel(field(9))), std::domain_error);
}
