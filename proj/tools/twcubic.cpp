// Command-line front end: report, verify and census.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twc/census.hpp"
#include "twc/checks.hpp"
#include "twc/gf.hpp"
#include "twc/report.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint32_t kMinQ = 3;
constexpr std::uint32_t kMaxQ = 128;

struct RunConfig {
  std::string mode;
  std::vector<std::uint32_t> qs;
  std::string family = "lrho";
  std::string params = "all";
  std::string format = "text";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::uint64_t census_cap = twc::kDefaultCensusCap;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TWC_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("TWC_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint32_t> parse_params(const std::string& s) {
  std::vector<std::uint32_t> out;
  if (s == "all") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw ConfigError("--param expects 'all' or a comma-separated list of element codes, got '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("--param list is empty");
  return out;
}

void validate(const RunConfig& cfg) {
  if (cfg.qs.empty()) throw ConfigError("--q needs at least one value");
  for (std::uint32_t q : cfg.qs) {
    if (!twc::prime_power(q)) throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
    if (q < kMinQ || q > kMaxQ)
      throw ConfigError("q=" + std::to_string(q) + " is outside the supported range [" + std::to_string(kMinQ) + ", " +
                        std::to_string(kMaxQ) + "]");
    if (cfg.mode == "census") {
      if (q % 3 == 0) throw ConfigError("the census needs q not divisible by 3 (q=" + std::to_string(q) + ")");
      if (twc::line_count(q) > cfg.census_cap)
        throw ConfigError("q=" + std::to_string(q) + ": PG(3,q) has " + std::to_string(twc::line_count(q)) +
                          " lines, above --census-cap " + std::to_string(cfg.census_cap));
    }
  }
  if (!twc::parse_family(cfg.family)) throw ConfigError("unknown family '" + cfg.family + "'");
}

json meta_json(const RunConfig& cfg, unsigned threads) {
  json m;
  m["command"] = cfg.mode;
  m["q"] = cfg.qs;
  if (cfg.mode == "report") {
    m["family"] = cfg.family;
    m["param"] = cfg.params;
  }
  m["seed"] = cfg.seed;
  m["threads"] = threads;
  return m;
}

void emit_rows(const RunConfig& cfg, json doc, const std::vector<twc::Row>& rows) {
  if (cfg.format == "csv") {
    std::cout << twc::rows_csv(rows);
  } else if (cfg.format == "text") {
    std::cout << twc::rows_text(rows);
  } else {
    doc["rows"] = json::array();
    for (const twc::Row& r : rows) doc["rows"].push_back(twc::row_json(r));
    std::cout << doc.dump(2) << '\n';
  }
}

int cmd_report(const RunConfig& cfg, twc::Workbench& wb) {
  const auto start = std::chrono::steady_clock::now();
  const twc::Family fam = *twc::parse_family(cfg.family);
  const auto params = parse_params(cfg.params);
  std::vector<twc::Row> rows;
  for (std::uint32_t q : cfg.qs) {
    auto part = twc::report_rows(wb, q, fam, params);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  bool failed = false;
  for (const twc::Row& r : rows)
    failed = failed || (r.error.empty() && !r.match) || r.quantity == "exception";
  json doc;
  doc["meta"] = meta_json(cfg, wb.threads());
  doc["meta"]["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit_rows(cfg, doc, rows);
  return failed ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg, twc::Workbench& wb) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<twc::CheckResult> results;
  for (std::uint32_t q : cfg.qs) {
    auto part = twc::run_all_checks(wb, q);
    results.insert(results.end(), part.begin(), part.end());
  }
  std::vector<std::string> failing;
  std::vector<twc::Row> rows;
  for (const auto& r : results) {
    if (r.status == twc::CheckStatus::Fail) failing.push_back(r.id + "@q=" + std::to_string(r.q));
    rows.insert(rows.end(), r.rows.begin(), r.rows.end());
  }

  if (cfg.format == "text") {
    for (const auto& r : results) {
      std::cout << '[' << twc::name(r.status) << "] q=" << r.q << ' ' << r.id;
      if (r.status != twc::CheckStatus::Skip) std::cout << " (" << r.rows.size() << " rows, " << r.seconds << " s)";
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << '\n';
    }
    if (failing.empty()) {
      std::cout << "all checks passed\n";
    } else {
      std::cout << "failed:";
      for (const auto& id : failing) std::cout << ' ' << id;
      std::cout << '\n';
    }
  } else if (cfg.format == "csv") {
    std::cout << twc::rows_csv(rows);
  } else {
    json doc;
    doc["meta"] = meta_json(cfg, wb.threads());
    doc["meta"]["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["checks"] = json::array();
    for (const auto& r : results)
      doc["checks"].push_back(
          {{"id", r.id}, {"q", r.q}, {"status", twc::name(r.status)}, {"detail", r.detail}, {"seconds", r.seconds}});
    doc["failed"] = failing;
    doc["rows"] = json::array();
    for (const twc::Row& r : rows) doc["rows"].push_back(twc::row_json(r));
    std::cout << doc.dump(2) << '\n';
  }
  return failing.empty() ? 0 : 1;
}

int cmd_census(const RunConfig& cfg, twc::Workbench& wb) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<twc::Row> rows;
  json orbits = json::array();
  for (std::uint32_t q : cfg.qs) {
    const twc::CensusResult res = twc::run_census(wb.model(q), cfg.census_cap);
    auto part = twc::census_rows(*wb.field(q), res);
    rows.insert(rows.end(), part.begin(), part.end());
    std::map<std::uint64_t, std::uint64_t> sizes;
    for (const auto& o : res.orbits) ++sizes[o.size];
    json sz = json::object();
    for (const auto& [size, n] : sizes) sz[std::to_string(size)] = n;
    json flagged = json::array();
    for (const auto& o : res.orbits) {
      if (o.lrho.empty() && o.ellmu.empty() && !o.has_L) continue;
      flagged.push_back({{"size", o.size}, {"lrho", o.lrho}, {"ellmu", o.ellmu}, {"L", o.has_L}});
    }
    orbits.push_back({{"q", q}, {"total", res.total}, {"orbit_count", res.orbits.size()}, {"sizes", sz},
                      {"flagged", flagged}});
  }
  bool failed = false;
  for (const twc::Row& r : rows) failed = failed || !r.match;

  if (cfg.format == "json") {
    json doc;
    doc["meta"] = meta_json(cfg, wb.threads());
    doc["meta"]["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["census"] = orbits;
    doc["rows"] = json::array();
    for (const twc::Row& r : rows) doc["rows"].push_back(twc::row_json(r));
    std::cout << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << twc::rows_csv(rows);
  } else {
    for (const auto& c : orbits) {
      std::cout << "q=" << c["q"] << ": " << c["orbit_count"] << " orbits, total " << c["total"] << "\n  sizes:";
      for (const auto& [size, n] : c["sizes"].items()) std::cout << ' ' << size << 'x' << n;
      std::cout << '\n';
      for (const auto& o : c["flagged"])
        std::cout << "  size " << o["size"] << " lrho=" << o["lrho"].dump() << " ellmu=" << o["ellmu"].dump()
                  << (o["L"].get<bool>() ? " L" : "") << '\n';
    }
    std::cout << twc::rows_text(rows);
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line orbits of the twisted cubic in PG(3,q): reports, verification and census"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.qs, "Field orders, comma-separated")->required()->delimiter(',');
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", cfg.threads, "Worker threads (default: TWC_THREADS or all cores)");
    sub->add_option("--seed", cfg.seed, "Seed for representative sampling");
    sub->add_option("--census-cap", cfg.census_cap, "Largest number of lines a census may enumerate");
  };
  CLI::App* report = app.add_subcommand("report", "Brute-force and closed-form values per parameter");
  add_common(report);
  report->add_option("--family", cfg.family, "lrho, ellmu or lscript")
      ->check(CLI::IsMember({"lrho", "ellmu", "lscript"}));
  report->add_option("--param", cfg.params, "'all' or comma-separated element codes");
  CLI::App* verify = app.add_subcommand("verify", "Run every check for each q");
  add_common(verify);
  CLI::App* census = app.add_subcommand("census", "Partition all E_nGamma-lines into orbits");
  add_common(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.mode = app.get_subcommands().front()->get_name();

  try {
    validate(cfg);
    if (cfg.mode == "report") (void)parse_params(cfg.params);
    twc::Workbench wb(resolve_threads(cfg.threads), cfg.seed, cfg.census_cap);
    if (cfg.mode == "report") return cmd_report(cfg, wb);
    if (cfg.mode == "verify") return cmd_verify(cfg, wb);
    return cmd_census(cfg, wb);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
