#include "twc/counts.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace twc {
namespace {

void require_odd_xi(const Field& f) {
  if (f.even() || f.xi() == 0) throw std::domain_error("requires odd q not divisible by 3");
}

void require_mu(const Field& f, Elem mu) {
  if (mu.code == 0 || mu == Field::one()) throw std::domain_error("mu must lie in GF(q)^* \\ {1}");
  if (!f.even() && f.xi() != 0 && mu == f.inv(f.from_int(9))) throw std::domain_error("mu = 1/9 is excluded");
}

void require_even(const Field& f) {
  if (!f.even()) throw std::domain_error("requires even q");
}

void require_even_square(const Field& f) {
  if (!f.even() || f.m() % 2 != 0) throw std::domain_error("requires q = 2^(2m)");
}

void require_nonzero(Elem x, const char* what) {
  if (x.code == 0) throw std::domain_error(std::string(what) + " must be nonzero");
}

Elem cube(const Field& f, Elem x) { return f.mul(f.mul(x, x), x); }

// Distinct roots of t^3 + b t^2 + c t + d over the field (or over F^* if
// skip_zero), by evaluation.
int cubic_roots(const Field& f, Elem b, Elem c, Elem d, bool skip_zero) {
  int n = 0;
  for (std::uint32_t code = skip_zero ? 1 : 0; code < f.q(); ++code) {
    const Elem t{code};
    const Elem v = f.add(f.mul(f.add(f.mul(f.add(t, b), t), c), t), d);
    n += v.code == 0 ? 1 : 0;
  }
  return n;
}

}  // namespace

int n_rho_brute(const Field& f, Elem rho) {
  int n = 0;
  const Elem two_rho = f.mul(f.from_int(2), rho);
  for (Elem t : f.elements()) {
    const Elem t4 = f.pow(t, 4);
    n += f.add(t4, f.mul(two_rho, t)).code == 0 ? 1 : 0;
  }
  return n;
}

int n_rho_closed(const Field& f, Elem rho) {
  if (f.xi() == 0) throw std::domain_error("requires q not divisible by 3");
  require_nonzero(rho, "rho");
  if (f.even() || !f.is_cube(f.mul(f.from_int(-2), rho))) return 1;
  return f.xi() == -1 ? 2 : 4;
}

int n_mu_brute(const Field& f, Elem mu) {
  require_odd_xi(f);
  require_mu(f, mu);
  const Elem lin = f.sub(f.mul(f.from_int(3), mu), Field::one());
  int n = 0;
  for (Elem t : f.elements()) {
    const Elem t2 = f.mul(t, t);
    n += f.add(f.sub(f.mul(t2, t2), f.mul(lin, t2)), mu).code == 0 ? 1 : 0;
  }
  return n;
}

int n_mu_sqrt(const Field& f, Elem mu) {
  require_odd_xi(f);
  require_mu(f, mu);
  const Elem three_mu_1 = f.sub(f.mul(f.from_int(3), mu), Field::one());
  const Elem S = f.mul(f.sub(mu, Field::one()), f.sub(f.mul(f.from_int(9), mu), Field::one()));
  const Elem half = f.inv(f.from_int(2));
  std::set<Elem> ts;
  for (Elem r : f.sqrt(S)) {
    const Elem A = f.mul(half, f.add(three_mu_1, r));
    for (Elem t : f.sqrt(A)) ts.insert(t);
  }
  return static_cast<int>(ts.size());
}

int n_mu_closed(const Field& f, Elem mu) {
  require_mu(f, mu);
  if (f.even()) return 2;
  require_odd_xi(f);
  const Elem three_mu_1 = f.sub(f.mul(f.from_int(3), mu), Field::one());
  const Elem S = f.mul(f.sub(mu, Field::one()), f.sub(f.mul(f.from_int(9), mu), Field::one()));
  if (f.eta(S) != 1) return 0;
  const Elem r = f.sqrt(S).front();
  const Elem half = f.inv(f.from_int(2));
  const int ep = f.eta(f.mul(half, f.add(three_mu_1, r)));
  const int em = f.eta(f.mul(half, f.sub(three_mu_1, r)));
  if (ep == 1 && em == 1) return 4;
  if (ep == 1 || em == 1) return 2;
  return 0;
}

std::uint64_t w_tilde_brute(const Field& f, Elem rho) {
  require_even(f);
  require_nonzero(rho, "rho");
  std::uint64_t n = 0;
  for (Elem g : f.elements()) n += f.abs_trace(f.add(f.div(cube(f, g), rho), Field::one())) == 1 ? 1 : 0;
  return n;
}

std::uint64_t w_tilde_closed(const Field& f, Elem rho) {
  require_even(f);
  require_nonzero(rho, "rho");
  const std::uint64_t q = f.q();
  if (f.m() % 2 == 1) return q / 2;
  const std::uint32_t m = f.m() / 2;
  const std::uint64_t root = 1ull << m;
  const bool m_even = m % 2 == 0;
  if (f.is_cube(rho)) return m_even ? q / 2 + root : q / 2 - root;
  return m_even ? q / 2 - root / 2 : q / 2 + root / 2;
}

long long carlitz_brute(const Field& f, Elem a) {
  require_even_square(f);
  require_nonzero(a, "a");
  long long s = 0;
  for (Elem x : f.elements()) s += f.abs_trace(f.mul(a, cube(f, x))) == 0 ? 1 : -1;
  return s;
}

long long carlitz_closed(const Field& f, Elem a) {
  require_even_square(f);
  require_nonzero(a, "a");
  const std::uint32_t m = f.m() / 2;
  const long long sign = m % 2 == 0 ? 1 : -1;
  if (f.is_cube(a)) return -sign * (1ll << (m + 1));
  return sign * (1ll << m);
}

long long w_tilde_from_carlitz(const Field& f, Elem rho) {
  require_even_square(f);
  const long long S = carlitz_brute(f, f.inv(rho));
  if (S % 2 != 0) throw std::logic_error("Carlitz sum is odd");
  return static_cast<long long>(f.q() / 2) - S / 2;
}

RootCensus root_census_even(const Field& f, Elem rho) {
  require_even(f);
  require_nonzero(rho, "rho");
  RootCensus rc;
  rc.roots.assign(f.q(), -1);
  for (Elem g : f.elements()) {
    const int n = cubic_roots(f, g, Field::zero(), rho, false);
    rc.roots[g.code] = n;
    ++rc.N[static_cast<std::size_t>(n)];
  }
  return rc;
}

RootCensus root_census_odd(const Field& f, Elem rho) {
  require_odd_xi(f);
  require_nonzero(rho, "rho");
  RootCensus rc;
  rc.roots.assign(f.q(), -1);
  for (Elem g : f.nonzero()) {
    const int n = cubic_roots(f, f.neg(f.mul(f.from_int(3), g)), Field::zero(), f.neg(rho), true);
    rc.roots[g.code] = n;
    ++rc.N[static_cast<std::size_t>(n)];
  }
  return rc;
}

std::uint64_t n_q_rho(const Field& f, Elem rho) {
  require_odd_xi(f);
  require_nonzero(rho, "rho");
  const Elem four_over_rho = f.div(f.from_int(4), rho);
  std::uint64_t n = 0;
  for (Elem g : f.nonzero()) n += f.eta(f.add(Field::one(), f.mul(four_over_rho, cube(f, g)))) == -1 ? 1 : 0;
  return n;
}

bool single_root_predicted(const Field& f, Elem rho, Elem gamma) {
  require_nonzero(rho, "rho");
  if (f.even()) return f.abs_trace(f.add(f.div(cube(f, gamma), rho), Field::one())) == 1;
  require_odd_xi(f);
  require_nonzero(gamma, "gamma");
  const Elem g3 = cube(f, gamma);
  if (f.add(f.mul(f.from_int(4), g3), rho).code == 0) return false;
  const int e = f.eta(f.add(Field::one(), f.div(f.mul(f.from_int(4), g3), rho)));
  return f.xi() == -1 ? e == 1 : e == -1;
}

}  // namespace twc
