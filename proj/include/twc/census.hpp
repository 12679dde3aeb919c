#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "twc/group.hpp"
#include "twc/twisted.hpp"

namespace twc {

/// Default upper bound on (q^2+1)(q^2+q+1) for a census run (covers q <= 32).
inline constexpr std::uint64_t kDefaultCensusCap = 2'000'000;

/// Raised when PG(3,q) has more lines than the configured cap.
class CensusCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CensusOrbit {
  LineKey representative;
  std::uint64_t size = 0;
  /// Codes of the rho (resp. mu) whose L_rho (resp. ell_mu) lies in the orbit.
  std::vector<std::uint32_t> lrho;
  std::vector<std::uint32_t> ellmu;
  bool has_L = false;
};

struct CensusResult {
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  /// In order of discovery by ascending line index of the representative.
  std::vector<CensusOrbit> orbits;
};

/// Partitions every E_nGamma-line of PG(3,q) into G_q-orbits. Throws
/// CensusCapExceeded if the number of lines exceeds `cap`, and
/// std::domain_error when 3 | q.
CensusResult run_census(const CubicModel& model, std::uint64_t cap = kDefaultCensusCap);

}  // namespace twc
