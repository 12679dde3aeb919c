#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "twc/gf.hpp"
#include "twc/group.hpp"
#include "twc/pg3.hpp"

namespace twc {

/// L_rho, the line through K_{rho,0} = P(rho,0,0,1) and K_{rho,inf} = P(0,0,1,0).
struct LRhoSpec {
  Elem rho;
  ProjLine line;
  int r_class = 0;
  /// Whether -2 rho is a cube; false for even q, where -2 rho = 0.
  bool minus2rho_is_cube = false;
};

/// Throws std::domain_error for rho = 0 (L_0 is the tangent T_0).
LRhoSpec l_rho(const Field& f, Elem rho);
/// K_{rho,gamma} = P(rho,0,gamma,1); nullopt gives K_{rho,inf}.
ProjPoint k_point(const Field& f, Elem rho, CubicParam gamma);

/// ell_mu, the line through P(0,mu,0,1) and P(1,0,1,0).
struct EllMuSpec {
  Elem mu;
  ProjLine line;
  bool upsilon = false;
};

/// mu in F_q^* \ {1}, and additionally mu != 1/9 for odd q with 3 not dividing q.
bool ell_mu_admissible(const Field& f, Elem mu);
/// Throws std::domain_error outside the admissible range.
EllMuSpec ell_mu(const Field& f, Elem mu);
/// mu = -1/3, q = 1 (mod 12) and -1/3 a fourth power.
bool upsilon(const Field& f, Elem mu);

/// The line L = Q_0 Q_inf through P(1,0,0,1) and P(0,0,1,0).
ProjLine script_line(const Field& f);

struct StabPrediction {
  std::uint64_t order = 0;
  StabilizerTag tag = StabilizerTag::Trivial;
};

/// Closed-form orbit size and stabilizer of L_rho. Throws std::domain_error
/// when 3 | q or rho = 0.
std::uint64_t predicted_orbit_size_lrho(const Field& f, Elem rho);
StabPrediction predicted_stab_lrho(const Field& f, Elem rho);
/// Closed-form size of the orbit of ell_mu. Throws std::domain_error for
/// inadmissible mu.
std::uint64_t predicted_orbit_size_ellmu(const Field& f, Elem mu);
/// Closed-form size of the orbit of L. Throws std::domain_error when 3 | q.
std::uint64_t predicted_orbit_size_L(const Field& f);

/// How the lines L_rho, rho in F_q^*, split into G_q-orbits.
struct PartitionPrediction {
  int orbit_count = 1;
  /// For q = 1 (mod 3): predicted orbit size for each class R_0, R_1, R_2.
  std::array<std::uint64_t, 3> class_sizes{};
  /// For odd q = 1 (mod 3): psi = log(-2) mod 3 and the class R_m on which
  /// -2 rho is a cube.
  std::optional<int> psi;
  std::optional<int> cube_class;
  /// Odd q = -1 (mod 12): the single orbit is the orbit of ell_{-1/3}.
  bool single_orbit_is_ellmu = false;
  /// q = 1 (mod 12) with -1/3 a fourth power: the cube-class orbit is the
  /// orbit of ell_{-1/3}.
  bool cube_orbit_is_ellmu = false;
};

/// Throws std::domain_error when 3 | q.
PartitionPrediction orbit_partition_prediction(const Field& f);

}  // namespace twc
