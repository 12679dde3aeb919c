#include "twc/twisted.hpp"

#include <stdexcept>
#include <string>

namespace twc {

std::string_view name(PlaneType t) {
  switch (t) {
    case PlaneType::Gamma: return "Gamma";
    case PlaneType::TwoC: return "2C";
    case PlaneType::ThreeC: return "3C";
    case PlaneType::OneBarC: return "1barC";
    case PlaneType::ZeroC: return "0C";
  }
  return "?";
}

std::string_view name(PointType t) {
  switch (t) {
    case PointType::C: return "C";
    case PointType::T: return "T";
    case PointType::ZeroGamma: return "0Gamma";
    case PointType::OneGamma: return "1Gamma";
    case PointType::ThreeGamma: return "3Gamma";
  }
  return "?";
}

std::uint64_t plane_orbit_size(std::uint32_t q, PlaneType t) {
  const std::uint64_t Q = q;
  const std::uint64_t g = Q * Q * Q - Q;
  switch (t) {
    case PlaneType::Gamma: return Q + 1;
    case PlaneType::TwoC: return Q * Q + Q;
    case PlaneType::ThreeC: return g / 6;
    case PlaneType::OneBarC: return g / 2;
    case PlaneType::ZeroC: return g / 3;
  }
  return 0;
}

std::uint64_t point_orbit_size(std::uint32_t q, PointType t) {
  switch (t) {
    case PointType::C: return plane_orbit_size(q, PlaneType::Gamma);
    case PointType::T: return plane_orbit_size(q, PlaneType::TwoC);
    case PointType::ThreeGamma: return plane_orbit_size(q, PlaneType::ThreeC);
    case PointType::OneGamma: return plane_orbit_size(q, PlaneType::OneBarC);
    case PointType::ZeroGamma: return plane_orbit_size(q, PlaneType::ZeroC);
  }
  return 0;
}

ProjPoint cubic_point(const Field& f, CubicParam t) {
  if (!t) return make_point(f, {Field::one(), Field::zero(), Field::zero(), Field::zero()});
  const Elem t2 = f.mul(*t, *t);
  return make_point(f, {f.mul(t2, *t), t2, *t, Field::one()});
}

ProjLine tangent_line(const Field& f, CubicParam t) {
  const ProjPoint P = cubic_point(f, t);
  if (!t) return line_through(f, P, make_point(f, {Field::zero(), Field::one(), Field::zero(), Field::zero()}));
  // derivative of (t^3, t^2, t, 1)
  const Elem three = f.from_int(3);
  const Elem two = f.from_int(2);
  const ProjPoint D = make_point(f, {f.mul(three, f.mul(*t, *t)), f.mul(two, *t), Field::one(), Field::zero()});
  return line_through(f, P, D);
}

Plucker tangent_coordinates(const Field& f, CubicParam t) {
  if (!t) return {Field::one(), Field::zero(), Field::zero(), Field::zero(), Field::zero(), Field::zero()};
  const Elem t2 = f.mul(*t, *t);
  const Elem t3 = f.mul(t2, *t);
  return {f.mul(t3, *t),        f.mul(f.from_int(2), t3), f.mul(f.from_int(3), t2), t2,
          f.neg(f.mul(f.from_int(2), *t)), Field::one()};
}

ProjPlane osculating_plane(const Field& f, CubicParam t) {
  if (!t) return make_plane(f, {Field::zero(), Field::zero(), Field::zero(), Field::one()});
  const Elem three = f.from_int(3);
  const Elem t2 = f.mul(*t, *t);
  return make_plane(f, {Field::one(), f.neg(f.mul(three, *t)), f.mul(three, t2), f.neg(f.mul(t2, *t))});
}

Plucker chord_coordinates(const Field& f, Elem a1, Elem a2) {
  return {f.mul(a2, a2), f.mul(a1, a2), f.sub(f.mul(a1, a1), a2), a2, f.neg(a1), Field::one()};
}

Plucker axis_coordinates(const Field& f, Elem b1, Elem b2) {
  if (f.p() == 3) throw std::domain_error("axes need q not divisible by 3");
  const Elem three = f.from_int(3);
  return {f.mul(b2, b2), f.mul(b1, b2), f.mul(three, b2), f.div(f.sub(f.mul(b1, b1), b2), three), f.neg(b1),
          Field::one()};
}

int quadratic_root_count(const Field& f, Elem a1, Elem a2) {
  if (f.even()) {
    if (a1.code == 0) return 1;
    return f.abs_trace(f.div(a2, f.mul(a1, a1))) == 0 ? 2 : 0;
  }
  const Elem disc = f.sub(f.mul(a1, a1), f.mul(f.from_int(4), a2));
  return f.eta(disc) + 1;
}

CubicModel::CubicModel(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  const Field& f = *field_;
  for (Elem e : f.elements()) params_.emplace_back(e);
  params_.emplace_back(std::nullopt);
  for (const CubicParam& t : params_) {
    points_.push_back(cubic_point(f, t));
    tangents_.push_back(tangent_line(f, t));
    osc_.push_back(osculating_plane(f, t));
  }

  for (Elem a1 : f.elements()) {
    for (Elem a2 : f.elements()) {
      const int roots = quadratic_root_count(f, a1, a2);
      const ChordKind kind = roots == 2 ? ChordKind::Real : roots == 1 ? ChordKind::Tangent : ChordKind::Imaginary;
      chords_.emplace(canonical_key(f, chord_coordinates(f, a1, a2)), kind);
    }
  }
  const ProjPoint at_inf = points_.back();
  for (std::size_t i = 0; i + 1 < points_.size(); ++i)
    chords_.emplace(line_through(f, at_inf, points_[i]).key, ChordKind::Real);
  chords_.emplace(tangents_.back().key, ChordKind::Tangent);
  const std::size_t q = f.q();
  if (chords_.size() != q * q + q + 1) throw std::logic_error("chord keys are not distinct");

  if (f.p() != 3) {
    for (const auto& [key, kind] : chords_) axes_.insert(null_polarity_line(f, line_from_key(f, key)).key);
    if (axes_.size() != chords_.size()) throw std::logic_error("axis keys are not distinct");
  }

  const std::size_t n = point_count(f.q());
  plane_type_.assign(n, 0);
  std::vector<std::uint8_t> is_osc(n, 0);
  for (const ProjPlane& pl : osc_) is_osc[vec_index(f, pl.c)] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const ProjPlane pl{vec_at(f, i)};
    PlaneType t;
    if (is_osc[i] != 0) {
      t = PlaneType::Gamma;
    } else {
      int hits = 0;
      for (const ProjPoint& P : points_) hits += incident(f, P, pl) ? 1 : 0;
      switch (hits) {
        case 0: t = PlaneType::ZeroC; break;
        case 1: t = PlaneType::OneBarC; break;
        case 2: t = PlaneType::TwoC; break;
        case 3: t = PlaneType::ThreeC; break;
        default: throw std::logic_error("plane meets the cubic in more than three points");
      }
    }
    plane_type_[i] = static_cast<std::uint8_t>(t);
    planes_by_type_[static_cast<std::size_t>(t)].push_back(i);
  }

  osc_count_.assign(n, 0);
  for (const ProjPlane& pl : osc_)
    for (const ProjPoint& P : points_in(f, pl)) ++osc_count_[vec_index(f, P.x)];

  if (f.p() == 3) return;
  constexpr std::uint8_t kUnset = 0xff;
  point_type_.assign(n, kUnset);
  for (const ProjPoint& P : points_) point_type_[vec_index(f, P.x)] = static_cast<std::uint8_t>(PointType::C);
  for (const ProjLine& tl : tangents_) {
    for (const ProjPoint& P : points_on(f, tl)) {
      std::uint8_t& slot = point_type_[vec_index(f, P.x)];
      if (slot == kUnset) slot = static_cast<std::uint8_t>(PointType::T);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (point_type_[i] == kUnset) {
      switch (osc_count_[i]) {
        case 0: point_type_[i] = static_cast<std::uint8_t>(PointType::ZeroGamma); break;
        case 1: point_type_[i] = static_cast<std::uint8_t>(PointType::OneGamma); break;
        case 3: point_type_[i] = static_cast<std::uint8_t>(PointType::ThreeGamma); break;
        default:
          throw std::logic_error("point off the tangents lies on " + std::to_string(osc_count_[i]) +
                                 " osculating planes");
      }
    }
    points_by_type_[point_type_[i]].push_back(i);
  }
}

void CubicModel::require_point_types() const {
  if (point_type_.empty()) throw std::domain_error("point types are defined only for q not divisible by 3");
}

bool CubicModel::on_cubic(const ProjPoint& pt) const {
  for (const ProjPoint& P : points_)
    if (P == pt) return true;
  return false;
}

PlaneType CubicModel::classify_plane(const ProjPlane& pl) const {
  return static_cast<PlaneType>(plane_type_[vec_index(*field_, pl.c)]);
}

PointType CubicModel::classify_point(const ProjPoint& pt) const {
  require_point_types();
  return static_cast<PointType>(point_type_[vec_index(*field_, pt.x)]);
}

int CubicModel::osculating_count(const ProjPoint& pt) const { return osc_count_[vec_index(*field_, pt.x)]; }

bool CubicModel::is_EnG(const LineKey& key) const {
  require_point_types();
  const Field& f = *field_;
  for (const ProjPoint& P : points_)
    if (on_line(f, P, key)) return false;
  for (const ProjPlane& pl : osc_)
    if (line_in_plane(f, key, pl)) return false;
  return !chords_.contains(key) && !axes_.contains(key);
}

std::array<std::uint64_t, 5> CubicModel::plane_census() const {
  std::array<std::uint64_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = planes_by_type_[i].size();
  return out;
}

std::array<std::uint64_t, 5> CubicModel::point_census() const {
  require_point_types();
  std::array<std::uint64_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = points_by_type_[i].size();
  return out;
}

const std::vector<std::size_t>& CubicModel::points_of_type(PointType t) const {
  require_point_types();
  return points_by_type_[static_cast<std::size_t>(t)];
}

const std::vector<std::size_t>& CubicModel::planes_of_type(PlaneType t) const {
  return planes_by_type_[static_cast<std::size_t>(t)];
}

OsculatingWitness lies_in_osc_plane_char3(const Field& f, Elem rho) {
  if (f.p() != 3) throw std::domain_error("L_rho lies in an osculating plane only when 3 | q");
  if (rho.code == 0) throw std::domain_error("rho must be nonzero");
  const auto roots = f.cube_roots(rho);
  if (roots.size() != 1) throw std::logic_error("cube roots are unique in characteristic 3");
  const ProjPlane pl = osculating_plane(f, roots.front());
  const ProjLine l = line_through(f, make_point(f, {rho, Field::zero(), Field::zero(), Field::one()}),
                                  make_point(f, {Field::zero(), Field::zero(), Field::one(), Field::zero()}));
  bool contained = true;
  for (const ProjPoint& P : points_on(f, l)) contained = contained && incident(f, P, pl);
  return {roots.front(), contained};
}

}  // namespace twc
