#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twc/checks.hpp"
#include "twc/incidence.hpp"

namespace twc {

enum class Family : std::uint8_t { LRho, EllMu, LScript };
std::string_view name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Brute-force and closed-form values for one family at one q. `params` are
/// element codes; empty means every admissible parameter. Parameters outside
/// the family's domain, and every L_rho when 3 | q, produce error rows with
/// quantity "domain-error"; library exceptions give quantity "exception".
std::vector<Row> report_rows(Workbench& wb, std::uint32_t q, Family family, const std::vector<std::uint32_t>& params);

nlohmann::ordered_json row_json(const Row& r);
nlohmann::ordered_json profile_json(const IncidenceProfile& p);
nlohmann::ordered_json stab_json(std::uint64_t order, StabilizerTag tag);

/// Flat projection: q,family,param,quantity,predicted,computed,match,error.
std::string rows_csv(const std::vector<Row>& rows);

/// One line per row.
std::string rows_text(const std::vector<Row>& rows);

}  // namespace twc
