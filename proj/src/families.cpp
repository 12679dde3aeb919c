#include "twc/families.hpp"

#include <stdexcept>

namespace twc {
namespace {

void require_xi(const Field& f) {
  if (f.xi() == 0) throw std::domain_error("requires q not divisible by 3");
}

std::uint64_t group_order(const Field& f) {
  const std::uint64_t q = f.q();
  return q * q * q - q;
}

Elem minus_third(const Field& f) { return f.neg(f.inv(f.from_int(3))); }

}  // namespace

ProjPoint k_point(const Field& f, Elem rho, CubicParam gamma) {
  if (!gamma) return make_point(f, {Field::zero(), Field::zero(), Field::one(), Field::zero()});
  return make_point(f, {rho, Field::zero(), *gamma, Field::one()});
}

LRhoSpec l_rho(const Field& f, Elem rho) {
  if (rho.code == 0) throw std::domain_error("rho = 0 gives the tangent T_0");
  LRhoSpec s;
  s.rho = rho;
  s.line = line_through(f, k_point(f, rho, Field::zero()), k_point(f, rho, std::nullopt));
  s.r_class = f.r_class(rho);
  if (!f.even() && f.p() != 3) s.minus2rho_is_cube = f.is_cube(f.mul(f.from_int(-2), rho));
  return s;
}

bool ell_mu_admissible(const Field& f, Elem mu) {
  if (mu.code == 0 || mu == Field::one()) return false;
  if (!f.even() && f.xi() != 0 && mu == f.inv(f.from_int(9))) return false;
  return true;
}

bool upsilon(const Field& f, Elem mu) {
  if (f.q() % 12 != 1) return false;
  const Elem t = minus_third(f);
  return mu == t && f.is_power(t, 4);
}

EllMuSpec ell_mu(const Field& f, Elem mu) {
  if (!ell_mu_admissible(f, mu)) throw std::domain_error("mu outside F_q^* \\ {1} (and 1/9 for odd q)");
  EllMuSpec s;
  s.mu = mu;
  s.line = line_through(f, make_point(f, {Field::zero(), mu, Field::zero(), Field::one()}),
                        make_point(f, {Field::one(), Field::zero(), Field::one(), Field::zero()}));
  s.upsilon = upsilon(f, mu);
  return s;
}

ProjLine script_line(const Field& f) { return l_rho(f, Field::one()).line; }

StabPrediction predicted_stab_lrho(const Field& f, Elem rho) {
  require_xi(f);
  if (rho.code == 0) throw std::domain_error("rho must be nonzero");
  if (f.xi() == 1) {
    if (!f.even() && f.is_cube(f.mul(f.from_int(-2), rho))) return {12, StabilizerTag::A4};
    return {3, StabilizerTag::C3};
  }
  if (f.even()) return {1, StabilizerTag::Trivial};
  return {2, StabilizerTag::C2};
}

std::uint64_t predicted_orbit_size_lrho(const Field& f, Elem rho) {
  return group_order(f) / predicted_stab_lrho(f, rho).order;
}

std::uint64_t predicted_orbit_size_ellmu(const Field& f, Elem mu) {
  if (!ell_mu_admissible(f, mu)) throw std::domain_error("mu outside the admissible range");
  const std::uint64_t g = group_order(f);
  if (f.even() || f.eta(mu) == -1) return g / 2;
  if (f.xi() == 0) return g / 4;
  return upsilon(f, mu) ? g / 12 : g / 4;
}

std::uint64_t predicted_orbit_size_L(const Field& f) {
  require_xi(f);
  const std::uint64_t g = group_order(f);
  if (f.xi() == 1) return (!f.even() && f.is_cube(f.from_int(2))) ? g / 12 : g / 3;
  return f.even() ? g : g / 2;
}

PartitionPrediction orbit_partition_prediction(const Field& f) {
  require_xi(f);
  PartitionPrediction out;
  const std::uint64_t g = group_order(f);
  if (f.xi() == -1) {
    out.orbit_count = 1;
    out.single_orbit_is_ellmu = !f.even() && f.q() % 12 == 11;
    return out;
  }
  out.orbit_count = 3;
  out.class_sizes = {g / 3, g / 3, g / 3};
  if (!f.even()) {
    const int psi = static_cast<int>(f.dlog(f.from_int(-2)) % 3);
    const int m = (3 - psi) % 3;
    out.psi = psi;
    out.cube_class = m;
    out.class_sizes[static_cast<std::size_t>(m)] = g / 12;
    out.cube_orbit_is_ellmu = upsilon(f, minus_third(f));
  }
  return out;
}

}  // namespace twc
