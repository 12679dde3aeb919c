#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "twc/gf.hpp"

namespace twc {

/// Roots of t^4 + 2 rho t in GF(q), counted by evaluation.
int n_rho_brute(const Field& f, Elem rho);
/// 1 if q is even or -2 rho is a non-cube; else 2 (q = -1 mod 3) or 4.
/// Throws std::domain_error when 3 | q or rho = 0.
int n_rho_closed(const Field& f, Elem rho);

/// Number of t in GF(q) with t^2 = (3mu - 1 +- sqrt(S)) / 2, S = (mu-1)(9mu-1),
/// counted by evaluating t^4 - (3mu - 1) t^2 + mu over the field.
/// Odd q with 3 not dividing q only; throws std::domain_error otherwise.
int n_mu_brute(const Field& f, Elem mu);
/// The same count obtained by taking the nested square roots literally.
int n_mu_sqrt(const Field& f, Elem mu);
/// Character table: 0, 2 or 4 from eta(S), eta(A+), eta(A-). Returns the
/// constant 2 for even q.
int n_mu_closed(const Field& f, Elem mu);
/// All three throw std::domain_error for mu = 0, mu = 1, or mu = 1/9 with q odd.

/// #{gamma in GF(q) : Tr(gamma^3 / rho + 1) = 1}. Even q only.
std::uint64_t w_tilde_brute(const Field& f, Elem rho);
/// q/2 for q = 2^(2m-1); q/2 + (-1)^m sqrt(q) (rho a cube) or
/// q/2 - (-1)^m sqrt(q)/2 (non-cube) for q = 2^(2m).
std::uint64_t w_tilde_closed(const Field& f, Elem rho);

/// S(a, 0) = sum over x of (-1)^Tr(a x^3). q = 2^(2m) only.
long long carlitz_brute(const Field& f, Elem a);
/// (-1)^(m+1) 2^(m+1) for a cube, (-1)^m 2^m otherwise.
long long carlitz_closed(const Field& f, Elem a);
/// 2^(2m-1) - S(1/rho, 0)/2.
long long w_tilde_from_carlitz(const Field& f, Elem rho);

/// Distinct-root counts of a cubic family indexed by gamma.
struct RootCensus {
  /// roots[gamma.code]; -1 where gamma is outside the family's range.
  std::vector<int> roots;
  /// N[m] = number of gamma with exactly m distinct roots.
  std::array<std::uint64_t, 4> N{};
};

/// t^3 + gamma t^2 + rho over gamma in GF(q), q even.
RootCensus root_census_even(const Field& f, Elem rho);
/// t^3 - 3 gamma t^2 - rho over gamma in GF(q)^*, q odd and 3 not dividing q.
RootCensus root_census_odd(const Field& f, Elem rho);

/// N_{q,rho} = #{gamma != 0 : eta(1 + 4 gamma^3 / rho) = -1}. Odd q.
std::uint64_t n_q_rho(const Field& f, Elem rho);
/// Predicted "exactly one root" for a single gamma. Even q: the trace test
/// Tr(gamma^3/rho + 1) = 1. Odd q: 4 gamma^3 + rho != 0 and
/// 1 + 4 gamma^3/rho a square (q = -1 mod 3) or non-square (q = 1 mod 3).
bool single_root_predicted(const Field& f, Elem rho, Elem gamma);

}  // namespace twc
