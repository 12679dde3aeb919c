#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "twc/gf.hpp"

namespace twc {

using Vec4 = std::array<Elem, 4>;

/// Plücker coordinates in the order (l01, l02, l03, l12, l31, l23), where
/// l_ij = x_i y_j - x_j y_i for spanning points x, y.
using Plucker = std::array<Elem, 6>;

/// A point of PG(3,q), scaled so its first nonzero coordinate is 1.
struct ProjPoint {
  Vec4 x{};
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// A plane c0 x0 + c1 x1 + c2 x2 + c3 x3 = 0, canonicalized like points.
struct ProjPlane {
  Vec4 c{};
  friend bool operator==(const ProjPlane&, const ProjPlane&) = default;
};

/// Canonical Plücker vector of a line: first nonzero entry equal to 1.
struct LineKey {
  Plucker k{};
  friend bool operator==(const LineKey&, const LineKey&) = default;
  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

struct LineKeyHash {
  std::size_t operator()(const LineKey& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Elem e : key.k) {
      h ^= e.code;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// A line: two distinct spanning points together with the canonical key.
struct ProjLine {
  ProjPoint a;
  ProjPoint b;
  LineKey key;
};

/// Canonical point from homogeneous coordinates. Throws on the zero vector.
ProjPoint make_point(const Field& f, const Vec4& x);
/// Canonical plane from coefficients. Throws on the zero vector.
ProjPlane make_plane(const Field& f, const Vec4& c);

Elem dot(const Field& f, const Vec4& x, const Vec4& y);
bool incident(const Field& f, const ProjPoint& pt, const ProjPlane& pl);

/// Unnormalized Plücker coordinates of the line through x and y.
Plucker plucker(const Field& f, const Vec4& x, const Vec4& y);
/// Scales a nonzero Plücker vector to canonical form.
LineKey canonical_key(const Field& f, const Plucker& l);

/// The line through two distinct points. Throws std::invalid_argument if
/// P = Q.
ProjLine line_through(const Field& f, const ProjPoint& P, const ProjPoint& Q);
/// Recovers two spanning points from a key.
ProjLine line_from_key(const Field& f, const LineKey& key);

bool on_line(const Field& f, const ProjPoint& pt, const LineKey& key);
bool line_in_plane(const Field& f, const LineKey& key, const ProjPlane& pl);

/// The q+1 points of a line: b, then a + lambda b in code order of lambda.
std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l);
/// The q+1 planes through a line.
std::vector<ProjPlane> planes_through(const Field& f, const ProjLine& l);
/// The q^2+q+1 points of a plane.
std::vector<ProjPoint> points_in(const Field& f, const ProjPlane& pl);

/// Common line of two distinct planes. Throws if the planes coincide.
ProjLine plane_meet(const Field& f, const ProjPlane& u, const ProjPlane& v);

/// Bilinear pairing of two Plücker vectors; zero iff the lines meet.
Elem mutual_invariant(const Field& f, const Plucker& l, const Plucker& m);

/// Image of a point under the null polarity of the twisted cubic:
/// P(x0,x1,x2,x3) -> pi(x3, -3x2, 3x1, -x0). Throws for characteristic 3.
ProjPlane null_polarity_point(const Field& f, const ProjPoint& pt);
/// Image of a line: the meet of the polar planes of two of its points.
ProjLine null_polarity_line(const Field& f, const ProjLine& l);

/// Basis of the solutions x of <row, x> = 0 for every given row.
std::vector<Vec4> null_space(const Field& f, std::span<const Vec4> rows);

std::size_t point_count(std::uint32_t q);
std::size_t line_count(std::uint32_t q);

/// Dense indices: points (and planes, with the same encoding) map onto
/// [0, q^3+q^2+q+1) and lines onto [0, (q^2+1)(q^2+q+1)).
std::size_t vec_index(const Field& f, const Vec4& canonical);
Vec4 vec_at(const Field& f, std::size_t index);
std::size_t line_index(const Field& f, const LineKey& key);

std::vector<ProjPoint> all_points(const Field& f);
std::vector<ProjPlane> all_planes(const Field& f);
/// Calls `visit` once per line of PG(3,q), in line_index order.
void for_each_line(const Field& f, const std::function<void(const ProjLine&)>& visit);
std::vector<ProjLine> all_lines(const Field& f);

}  // namespace twc
