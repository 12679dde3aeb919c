#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twc/group.hpp"
#include "twc/twisted.hpp"

namespace twc {

/// Incidence counts of one line orbit against the point and plane orbits.
///
/// Pb[t]: points of type t on an orbit line; Lb[t]: orbit lines through a
/// point of type t. Pi / Lambda are the same for planes. Arrays are indexed
/// by the underlying value of PointType / PlaneType.
struct IncidenceProfile {
  std::array<std::uint64_t, 5> Pb{};
  std::array<std::uint64_t, 5> Lb{};
  std::array<std::uint64_t, 5> Pi{};
  std::array<std::uint64_t, 5> Lambda{};
  std::uint64_t orbit_size = 0;

  friend bool operator==(const IncidenceProfile&, const IncidenceProfile&) = default;

  std::uint64_t pb(PointType t) const { return Pb[static_cast<std::size_t>(t)]; }
  std::uint64_t lb(PointType t) const { return Lb[static_cast<std::size_t>(t)]; }
  std::uint64_t pi(PlaneType t) const { return Pi[static_cast<std::size_t>(t)]; }
  std::uint64_t lambda(PlaneType t) const { return Lambda[static_cast<std::size_t>(t)]; }
};

/// The plane type paired with a point type by the null polarity.
PlaneType dual_type(PointType t);

/// Counts by classification of the points and planes on `line`, and by
/// scanning the orbit against a random representative of each point and
/// plane type. A second random orbit line and second representatives must
/// give the same numbers, otherwise std::logic_error is thrown.
/// Throws std::domain_error when 3 | q and std::invalid_argument when `line`
/// is not in the orbit.
IncidenceProfile profile_bruteforce(const CubicModel& model, const Orbit& orb, const LineKey& line,
                                    std::uint64_t seed);

/// Closed forms for the orbit of L_rho, q even.
IncidenceProfile profile_closed_even(const Field& f, Elem rho);
/// Closed forms for the orbit of L_rho, q odd and 3 not dividing q.
IncidenceProfile profile_closed_odd(const Field& f, Elem rho);
/// Even or odd closed form as appropriate.
IncidenceProfile profile_closed(const Field& f, Elem rho);

/// Completes a profile from Pb_T, Pb_1Gamma and the orbit size. Throws
/// std::domain_error if a quotient is not an integer.
IncidenceProfile derive_from_partial(std::uint32_t q, std::uint64_t pb_t, std::uint64_t pb_1gamma,
                                     std::uint64_t orbit_size);

/// Names of the structural relations the profile violates (empty if none):
/// sum rules, vanishing C / Gamma entries, Lb = Pb |O| / |M| and its plane
/// twin, the Pb_3Gamma / Pb_0Gamma relations, duality, double counting.
std::vector<std::string> relation_failures(std::uint32_t q, const IncidenceProfile& p);

/// One line per field, "Pb_T=1 Lb_T=7 ...".
std::string describe(const IncidenceProfile& p);

}  // namespace twc
