#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "twc/census.hpp"
#include "twc/gf.hpp"
#include "twc/group.hpp"
#include "twc/twisted.hpp"

namespace twc {

/// One compared quantity. `param` is an element code or null.
struct Row {
  std::uint32_t q = 0;
  std::string family;
  nlohmann::ordered_json param;
  std::string quantity;
  nlohmann::ordered_json predicted;
  nlohmann::ordered_json computed;
  bool match = false;
  /// Set instead of predicted/computed when the row could not be evaluated.
  std::string error;
};

enum class CheckStatus : std::uint8_t { Pass, Fail, Skip };
std::string_view name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::uint32_t q = 0;
  CheckStatus status = CheckStatus::Pass;
  /// Skip reason, or the first failure.
  std::string detail;
  std::vector<Row> rows;
  double seconds = 0;
};

/// Fields, cubic models and groups shared between checks, built on first use.
class Workbench {
 public:
  explicit Workbench(unsigned threads = 1, std::uint64_t seed = 1, std::uint64_t census_cap = kDefaultCensusCap);

  std::shared_ptr<const Field> field(std::uint32_t q);
  const CubicModel& model(std::uint32_t q);
  const Group& group(std::uint32_t q);
  unsigned threads() const { return threads_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t census_cap() const { return census_cap_; }

 private:
  unsigned threads_;
  std::uint64_t seed_;
  std::uint64_t census_cap_;
  std::mutex mu_;
  std::map<std::uint32_t, std::shared_ptr<const Field>> fields_;
  std::map<std::uint32_t, std::unique_ptr<CubicModel>> models_;
  std::map<std::uint32_t, std::unique_ptr<Group>> groups_;
};

/// Identifiers of the per-q checks, in the order verify runs them.
const std::vector<std::string>& check_ids();

/// Runs one per-q check. Checks that do not apply to q are skipped with a
/// reason. Exceptions from the library are caught and reported as failures.
/// Throws std::invalid_argument for an unknown id.
CheckResult run_check(Workbench& wb, const std::string& id, std::uint32_t q);

/// Every check of check_ids() for one q.
std::vector<CheckResult> run_all_checks(Workbench& wb, std::uint32_t q);

/// Compares a census with the predicted sizes of the orbits of L_rho, ell_mu
/// and L, and its total with (q^2-q)(q^2-1).
std::vector<Row> census_rows(const Field& f, const CensusResult& res);

/// Evaluates the fourth-power condition on -1/3 for each q of the list and
/// reports the first q = 1 (mod 12) where it holds (0 if none).
struct UpsilonScan {
  std::vector<std::pair<std::uint32_t, bool>> evaluated;
  std::uint32_t first = 0;
};
UpsilonScan scan_upsilon(const std::vector<std::uint32_t>& qs);

}  // namespace twc
