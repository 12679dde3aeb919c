#include <gtest/gtest.h>

#include <algorithm>

#include "twc/report.hpp"

using namespace twc;

namespace {

const Row* find(const std::vector<Row>& rows, std::string_view quantity, std::uint32_t param) {
  for (const Row& r : rows)
    if (r.quantity == quantity && r.param == param) return &r;
  return nullptr;
}

}  // namespace

TEST(Report, EveryLRhoRowMatchesAtQ8) {
  Workbench wb;
  const auto rows = report_rows(wb, 8, Family::LRho, {});
  EXPECT_EQ(rows.size(), 7u * 5u);
  for (const Row& r : rows) EXPECT_TRUE(r.match) << r.quantity << " " << r.param.dump();
  const Row* w = find(rows, "W-tilde", 1);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->computed, 4);
}

TEST(Report, StabilizerAtQ7) {
  Workbench wb;
  const auto rows = report_rows(wb, 7, Family::LRho, {3});
  const Row* size = find(rows, "orbit-size", 3);
  const Row* stab = find(rows, "stabilizer", 3);
  ASSERT_NE(size, nullptr);
  ASSERT_NE(stab, nullptr);
  EXPECT_EQ(size->computed, 28);
  EXPECT_EQ(stab->computed, stab_json(12, StabilizerTag::A4));
  EXPECT_TRUE(stab->match);
}

TEST(Report, EllMuAndScriptLine) {
  Workbench wb;
  for (Family fam : {Family::EllMu, Family::LScript})
    for (const Row& r : report_rows(wb, 5, fam, {})) EXPECT_TRUE(r.match) << name(fam) << " " << r.quantity;
  const auto rows = report_rows(wb, 5, Family::EllMu, {1});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].quantity, "domain-error");
}

TEST(Report, CharacteristicThreeGivesDomainErrors) {
  Workbench wb;
  const auto rows = report_rows(wb, 9, Family::LRho, {});
  ASSERT_EQ(rows.size(), 8u);
  const Field f = Field::make(9);
  const std::string prefix = "L_rho lies in osculating plane pi_osc(";
  for (const Row& r : rows) {
    EXPECT_EQ(r.quantity, "domain-error");
    EXPECT_FALSE(r.match);
    ASSERT_EQ(r.error.rfind(prefix, 0), 0u) << r.error;
    const std::uint32_t t = static_cast<std::uint32_t>(std::stoul(r.error.substr(prefix.size())));
    EXPECT_EQ(f.pow(Elem{t}, 3).code, r.param.get<std::uint32_t>());
  }
}

TEST(Report, RowJsonKeysInOrder) {
  Workbench wb;
  const auto rows = report_rows(wb, 5, Family::LRho, {1});
  const auto j = row_json(rows.front());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"q", "family", "param", "quantity", "predicted", "computed", "match"}));
}

TEST(Report, RepeatedRunsGiveIdenticalJson) {
  Workbench a(1, 7), b(2, 7);
  nlohmann::ordered_json ja = nlohmann::ordered_json::array(), jb = nlohmann::ordered_json::array();
  for (const Row& r : report_rows(a, 13, Family::LRho, {})) ja.push_back(row_json(r));
  for (const Row& r : report_rows(b, 13, Family::LRho, {})) jb.push_back(row_json(r));
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(Report, CsvHasHeaderAndOneLinePerRow) {
  Workbench wb;
  const auto rows = report_rows(wb, 7, Family::LScript, {});
  const std::string csv = rows_csv(rows);
  EXPECT_EQ(csv.rfind("q,family,param,quantity,predicted,computed,match,error\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
}

TEST(Report, FamilyNames) {
  EXPECT_EQ(parse_family("lrho"), Family::LRho);
  EXPECT_EQ(parse_family("ellmu"), Family::EllMu);
  EXPECT_EQ(parse_family("lscript"), Family::LScript);
  EXPECT_FALSE(parse_family("nope").has_value());
  EXPECT_EQ(name(Family::EllMu), "ellmu");
}

TEST(Checks, RunAtQ7AndSkipRules) {
  Workbench wb;
  for (const CheckResult& r : run_all_checks(wb, 7)) {
    if (r.id == "trace-count" || r.id == "carlitz-sum" || r.id == "char3-osculating")
      EXPECT_EQ(r.status, CheckStatus::Skip) << r.id;
    else
      EXPECT_EQ(r.status, CheckStatus::Pass) << r.id << ": " << r.detail;
  }
  EXPECT_THROW(run_check(wb, "no-such-check", 7), std::invalid_argument);
}

TEST(Checks, CharacteristicThreeRunsOnlyTheOsculatingCheck) {
  Workbench wb;
  for (const CheckResult& r : run_all_checks(wb, 9))
    EXPECT_EQ(r.status, r.id == "char3-osculating" ? CheckStatus::Pass : CheckStatus::Skip) << r.id;
}

TEST(Checks, UpsilonScanFinds37) {
  const UpsilonScan s = scan_upsilon({13, 25, 37, 49, 61});
  EXPECT_EQ(s.first, 37u);
  ASSERT_FALSE(s.evaluated.empty());
  EXPECT_EQ(s.evaluated.front(), (std::pair<std::uint32_t, bool>{13, false}));
}
