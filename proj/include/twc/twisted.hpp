#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twc/gf.hpp"
#include "twc/pg3.hpp"

namespace twc {

/// Parameter of a point of the cubic: a field element, or nullopt for infinity.
using CubicParam = std::optional<Elem>;

enum class PlaneType : std::uint8_t { Gamma, TwoC, ThreeC, OneBarC, ZeroC };
enum class PointType : std::uint8_t { C, T, ZeroGamma, OneGamma, ThreeGamma };
enum class ChordKind : std::uint8_t { Real, Tangent, Imaginary };

inline constexpr std::array<PlaneType, 5> kPlaneTypes = {PlaneType::Gamma, PlaneType::TwoC, PlaneType::ThreeC,
                                                        PlaneType::OneBarC, PlaneType::ZeroC};
inline constexpr std::array<PointType, 5> kPointTypes = {PointType::C, PointType::T, PointType::ZeroGamma,
                                                        PointType::OneGamma, PointType::ThreeGamma};

std::string_view name(PlaneType t);
std::string_view name(PointType t);

/// Number of planes (resp. points) of each type, as a function of q alone.
std::uint64_t plane_orbit_size(std::uint32_t q, PlaneType t);
std::uint64_t point_orbit_size(std::uint32_t q, PointType t);

/// P(t) = (t^3, t^2, t, 1), P(inf) = (1, 0, 0, 0).
ProjPoint cubic_point(const Field& f, CubicParam t);
/// Tangent with coordinate vector (t^4, 2t^3, 3t^2, t^2, -2t, 1); (1,0,0,0,0,0) at infinity.
ProjLine tangent_line(const Field& f, CubicParam t);
Plucker tangent_coordinates(const Field& f, CubicParam t);
/// pi(1, -3t, 3t^2, -t^3); pi(0,0,0,1) at infinity. In characteristic 2 this
/// is pi(1, t, t^2, t^3).
ProjPlane osculating_plane(const Field& f, CubicParam t);

/// Coordinate vector of the chord with a1 = t1 + t2, a2 = t1 t2.
Plucker chord_coordinates(const Field& f, Elem a1, Elem a2);
/// Coordinate vector (b2^2, b1 b2, 3 b2, (b1^2 - b2)/3, -b1, 1) of an axis.
Plucker axis_coordinates(const Field& f, Elem b1, Elem b2);

/// Number of roots in GF(q) of x^2 - a1 x + a2. Even q uses the trace test.
int quadratic_root_count(const Field& f, Elem a1, Elem a2);

/// The twisted cubic in canonical form together with its chords, axes and
/// the point/plane type tables.
///
/// Immutable after construction; classification calls are table lookups.
class CubicModel {
 public:
  explicit CubicModel(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }

  /// Parameters in order: field elements by code, then infinity.
  const std::vector<CubicParam>& params() const { return params_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<ProjLine>& tangents() const { return tangents_; }
  const std::vector<ProjPlane>& osculating_planes() const { return osc_; }

  /// All chords: real, tangent and imaginary (q^2 + q + 1 lines).
  const std::unordered_map<LineKey, ChordKind, LineKeyHash>& chords() const { return chords_; }
  /// All axes, the null-polarity images of the chords. Empty when 3 | q.
  const std::unordered_set<LineKey, LineKeyHash>& axes() const { return axes_; }

  bool on_cubic(const ProjPoint& pt) const;
  PlaneType classify_plane(const ProjPlane& pl) const;
  /// Throws std::domain_error when 3 | q.
  PointType classify_point(const ProjPoint& pt) const;
  /// Number of osculating planes through a point.
  int osculating_count(const ProjPoint& pt) const;

  /// External line, in no osculating plane, neither chord nor axis.
  /// Throws std::domain_error when 3 | q.
  bool is_EnG(const LineKey& key) const;

  std::array<std::uint64_t, 5> plane_census() const;
  /// Throws std::domain_error when 3 | q.
  std::array<std::uint64_t, 5> point_census() const;

  /// Dense indices (see vec_index) of every point of a type, ascending.
  const std::vector<std::size_t>& points_of_type(PointType t) const;
  const std::vector<std::size_t>& planes_of_type(PlaneType t) const;

 private:
  void require_point_types() const;

  std::shared_ptr<const Field> field_;
  std::vector<CubicParam> params_;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> tangents_;
  std::vector<ProjPlane> osc_;
  std::unordered_map<LineKey, ChordKind, LineKeyHash> chords_;
  std::unordered_set<LineKey, LineKeyHash> axes_;
  std::vector<std::uint8_t> plane_type_;
  std::vector<std::uint8_t> point_type_;
  std::vector<std::uint8_t> osc_count_;
  std::array<std::vector<std::size_t>, 5> points_by_type_;
  std::array<std::vector<std::size_t>, 5> planes_by_type_;
};

/// For 3 | q: the parameter t of the osculating plane containing L_rho
/// (the cube root of rho) and whether containment holds at every point.
struct OsculatingWitness {
  Elem t;
  bool contained;
};
OsculatingWitness lies_in_osc_plane_char3(const Field& f, Elem rho);

}  // namespace twc
