#include <gtest/gtest.h>

#include <memory>

#include "twc/twisted.hpp"

using namespace twc;

namespace {

Elem E(std::uint32_t c) { return Elem{c}; }

std::shared_ptr<const Field> field(std::uint32_t q) { return std::make_shared<const Field>(Field::make(q)); }

// pi(1, -3t, 3t^2, -t^3) evaluated directly at x, or x3 for t = infinity.
bool on_osculating(const Field& f, const ProjPoint& P, CubicParam t) {
  if (!t) return P.x[3].code == 0;
  const Elem s = *t;
  const Elem v = f.add(f.sub(P.x[0], f.mul(f.from_int(3), f.mul(s, P.x[1]))),
                       f.sub(f.mul(f.from_int(3), f.mul(f.mul(s, s), P.x[2])), f.mul(f.pow(s, 3), P.x[3])));
  return v.code == 0;
}

// Type from first principles: on C, on a tangent, else the number of osculating planes.
PointType classify_slow(const CubicModel& m, const ProjPoint& P) {
  const Field& f = m.field();
  for (const CubicParam& t : m.params())
    if (cubic_point(f, t) == P) return PointType::C;
  for (const CubicParam& t : m.params())
    if (on_line(f, P, tangent_line(f, t).key)) return PointType::T;
  int n = 0;
  for (const CubicParam& t : m.params()) n += on_osculating(f, P, t) ? 1 : 0;
  switch (n) {
    case 0: return PointType::ZeroGamma;
    case 1: return PointType::OneGamma;
    case 3: return PointType::ThreeGamma;
  }
  throw std::logic_error("unexpected osculating count");
}

}  // namespace

TEST(Cubic, PointsAndTangentsAtSpecialParameters) {
  const Field f = Field::make(7);
  EXPECT_EQ(cubic_point(f, E(0)), make_point(f, {E(0), E(0), E(0), E(1)}));
  EXPECT_EQ(cubic_point(f, std::nullopt), make_point(f, {E(1), E(0), E(0), E(0)}));
  EXPECT_EQ(cubic_point(f, E(2)), make_point(f, {E(1), E(4), E(2), E(1)}));
  EXPECT_EQ(tangent_line(f, std::nullopt).key, (LineKey{{E(1), E(0), E(0), E(0), E(0), E(0)}}));
  EXPECT_EQ(osculating_plane(f, std::nullopt), make_plane(f, {E(0), E(0), E(0), E(1)}));
  // T_0: x0 = 0 and x1 = 0.
  for (const ProjPoint& P : points_on(f, tangent_line(f, E(0)))) {
    EXPECT_EQ(P.x[0], Field::zero());
    EXPECT_EQ(P.x[1], Field::zero());
  }
  EXPECT_EQ(canonical_key(f, chord_coordinates(f, E(0), E(0))), tangent_line(f, E(0)).key);
}

TEST(Cubic, OsculatingPlaneMeetsCubicOnlyAtItsPoint) {
  for (std::uint32_t q : {5u, 7u, 8u}) {
    const CubicModel m(field(q));
    const Field& f = m.field();
    for (const CubicParam& t : m.params()) {
      const ProjPlane pl = osculating_plane(f, t);
      EXPECT_TRUE(line_in_plane(f, tangent_line(f, t).key, pl));
      int hits = 0;
      for (const ProjPoint& P : m.points()) hits += incident(f, P, pl) ? 1 : 0;
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(Chords, CountsAtQ5) {
  const CubicModel m(field(5));
  int real = 0, tangent = 0, imaginary = 0;
  for (const auto& [key, kind] : m.chords()) {
    real += kind == ChordKind::Real;
    tangent += kind == ChordKind::Tangent;
    imaginary += kind == ChordKind::Imaginary;
  }
  EXPECT_EQ(real, 15);
  EXPECT_EQ(tangent, 6);
  EXPECT_EQ(imaginary, 10);
  EXPECT_EQ(m.axes().size(), m.chords().size());
}

TEST(Chords, RealChordsJoinTwoCubicPoints) {
  const CubicModel m(field(7));
  const Field& f = m.field();
  const auto& pts = m.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const LineKey k = line_through(f, pts[i], pts[j]).key;
      ASSERT_TRUE(m.chords().contains(k));
      EXPECT_EQ(m.chords().at(k), ChordKind::Real);
    }
}

TEST(Axes, ArePolarImagesOfChords) {
  for (std::uint32_t q : {5u, 7u, 8u}) {
    const CubicModel m(field(q));
    const Field& f = m.field();
    for (const auto& [key, kind] : m.chords()) {
      const LineKey img = null_polarity_line(f, line_from_key(f, key)).key;
      EXPECT_TRUE(m.axes().contains(img));
      if (kind == ChordKind::Tangent) EXPECT_EQ(img, key);
    }
  }
}

TEST(Axes, CoordinateFormIsAnAxis) {
  const CubicModel m(field(7));
  const Field& f = m.field();
  for (Elem b1 : f.elements())
    for (Elem b2 : f.elements()) EXPECT_TRUE(m.axes().contains(canonical_key(f, axis_coordinates(f, b1, b2))));
}

TEST(QuadraticRoots, EvenAndOddRules) {
  const Field f8 = Field::make(8), f7 = Field::make(7);
  for (const Field* f : {&f8, &f7})
    for (Elem a1 : f->elements())
      for (Elem a2 : f->elements()) {
        int n = 0;
        for (Elem x : f->elements()) n += f->add(f->sub(f->mul(x, x), f->mul(a1, x)), a2).code == 0;
        EXPECT_EQ(quadratic_root_count(*f, a1, a2), n);
      }
}

TEST(PlaneCensus, MatchesTheTypeFormulas) {
  const CubicModel m(field(7));
  EXPECT_EQ(m.plane_census(), (std::array<std::uint64_t, 5>{8, 56, 56, 168, 112}));
  for (std::uint32_t q : {4u, 5u, 8u, 11u, 13u, 16u}) {
    const CubicModel mq(field(q));
    const std::uint64_t Q = q;
    const std::array<std::uint64_t, 5> expect{Q + 1, Q * (Q + 1), (Q * Q * Q - Q) / 6, (Q * Q * Q - Q) / 2,
                                              (Q * Q * Q - Q) / 3};
    EXPECT_EQ(mq.plane_census(), expect) << "q=" << q;
    for (PlaneType t : kPlaneTypes) EXPECT_EQ(plane_orbit_size(q, t), expect[static_cast<std::size_t>(t)]);
  }
}

TEST(PlaneCensus, ThreeCubicPointsGiveA3CPlane) {
  const CubicModel m(field(7));
  const Field& f = m.field();
  const ProjLine l = line_through(f, cubic_point(f, E(0)), cubic_point(f, E(1)));
  for (const ProjPlane& pl : planes_through(f, l))
    if (incident(f, cubic_point(f, E(2)), pl)) EXPECT_EQ(m.classify_plane(pl), PlaneType::ThreeC);
}

TEST(PointTypes, AgreeWithFirstPrinciples) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u}) {
    const CubicModel m(field(q));
    for (const ProjPoint& P : all_points(m.field())) ASSERT_EQ(m.classify_point(P), classify_slow(m, P)) << "q=" << q;
  }
}

TEST(PointTypes, CensusIsDualToPlaneCensus) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 11u, 13u, 16u}) {
    const CubicModel m(field(q));
    const auto pts = m.point_census();
    const auto pls = m.plane_census();
    EXPECT_EQ(pts[static_cast<std::size_t>(PointType::C)], pls[static_cast<std::size_t>(PlaneType::Gamma)]);
    EXPECT_EQ(pts[static_cast<std::size_t>(PointType::T)], pls[static_cast<std::size_t>(PlaneType::TwoC)]);
    EXPECT_EQ(pts[static_cast<std::size_t>(PointType::ThreeGamma)], pls[static_cast<std::size_t>(PlaneType::ThreeC)]);
    EXPECT_EQ(pts[static_cast<std::size_t>(PointType::OneGamma)], pls[static_cast<std::size_t>(PlaneType::OneBarC)]);
    EXPECT_EQ(pts[static_cast<std::size_t>(PointType::ZeroGamma)], pls[static_cast<std::size_t>(PlaneType::ZeroC)]);
    for (PointType t : kPointTypes) EXPECT_EQ(m.points_of_type(t).size(), pts[static_cast<std::size_t>(t)]);
  }
}

TEST(PointTypes, KPointsOfLRho) {
  for (std::uint32_t q : {5u, 7u, 8u, 13u, 16u}) {
    const CubicModel m(field(q));
    const Field& f = m.field();
    for (Elem rho : f.nonzero()) {
      EXPECT_EQ(m.classify_point(make_point(f, {E(0), E(0), E(1), E(0)})), PointType::T);
      const PointType k0 = m.classify_point(make_point(f, {rho, E(0), E(0), E(1)}));
      if (!f.is_cube(rho))
        EXPECT_EQ(k0, PointType::ZeroGamma);
      else if (f.xi() == 1)
        EXPECT_EQ(k0, PointType::ThreeGamma);
    }
  }
}

TEST(PointTypes, CharacteristicThreeIsRejected) {
  const CubicModel m(field(9));
  EXPECT_THROW(m.classify_point(make_point(m.field(), {E(1), E(0), E(0), E(1)})), std::domain_error);
  EXPECT_THROW(m.point_census(), std::domain_error);
  EXPECT_THROW(m.is_EnG(tangent_line(m.field(), E(0)).key), std::domain_error);
  EXPECT_TRUE(m.axes().empty());
}

TEST(EnG, LRhoIsExternalAndTangentIsNot) {
  for (std::uint32_t q : {5u, 7u, 8u}) {
    const CubicModel m(field(q));
    const Field& f = m.field();
    for (Elem rho : f.nonzero())
      EXPECT_TRUE(m.is_EnG(line_through(f, make_point(f, {rho, E(0), E(0), E(1)}),
                                        make_point(f, {E(0), E(0), E(1), E(0)}))
                               .key));
    EXPECT_FALSE(m.is_EnG(tangent_line(f, E(0)).key));
  }
}

TEST(EnG, CountMatchesClassSize) {
  for (std::uint32_t q : {4u, 5u, 7u}) {
    const CubicModel m(field(q));
    std::uint64_t n = 0;
    for_each_line(m.field(), [&](const ProjLine& l) { n += m.is_EnG(l.key); });
    const std::uint64_t Q = q;
    EXPECT_EQ(n, (Q * Q - Q) * (Q * Q - 1));
  }
}

TEST(CharThree, LRhoLiesInAnOsculatingPlane) {
  const Field f9 = Field::make(9);
  const OsculatingWitness w = lies_in_osc_plane_char3(f9, Field::one());
  EXPECT_EQ(w.t, Field::one());
  EXPECT_TRUE(w.contained);
  const Field f27 = Field::make(27);
  for (Elem rho : f27.nonzero()) {
    const OsculatingWitness v = lies_in_osc_plane_char3(f27, rho);
    EXPECT_EQ(f27.pow(v.t, 3), rho);
    EXPECT_TRUE(v.contained);
  }
  EXPECT_THROW(lies_in_osc_plane_char3(Field::make(7), Field::one()), std::domain_error);
}

TEST(Names, AreStable) {
  EXPECT_EQ(name(PlaneType::OneBarC), "1barC");
  EXPECT_EQ(name(PointType::ThreeGamma), "3Gamma");
}
