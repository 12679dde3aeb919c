#include "twc/report.hpp"

#include <sstream>

#include "twc/counts.hpp"
#include "twc/families.hpp"

namespace twc {
namespace {

using json = nlohmann::ordered_json;

Row make_row(std::uint32_t q, Family fam, json param, std::string quantity, json predicted, json computed) {
  Row r;
  r.q = q;
  r.family = std::string(name(fam));
  r.param = std::move(param);
  r.quantity = std::move(quantity);
  r.match = predicted == computed;
  r.predicted = std::move(predicted);
  r.computed = std::move(computed);
  return r;
}

Row error_row(std::uint32_t q, Family fam, json param, std::string message, const char* kind = "domain-error") {
  Row r;
  r.q = q;
  r.family = std::string(name(fam));
  r.param = std::move(param);
  r.quantity = kind;
  r.error = std::move(message);
  return r;
}

std::uint64_t t_points(const CubicModel& model, const LineKey& key) {
  const Field& f = model.field();
  std::uint64_t n = 0;
  for (const ProjPoint& P : points_on(f, line_from_key(f, key))) n += model.classify_point(P) == PointType::T ? 1 : 0;
  return n;
}

void lrho_rows(Workbench& wb, std::uint32_t q, Elem rho, std::vector<Row>& out) {
  const CubicModel& model = wb.model(q);
  const Group& g = wb.group(q);
  const Field& f = model.field();
  const Family fam = Family::LRho;
  const LineKey key = l_rho(f, rho).line.key;
  const auto orb = g.orbit_of_line(key);
  out.push_back(make_row(q, fam, rho.code, "orbit-size", predicted_orbit_size_lrho(f, rho), orb->size()));

  const StabPrediction sp = predicted_stab_lrho(f, rho);
  const auto stab = g.stabilizer_of(key);
  out.push_back(make_row(q, fam, rho.code, "stabilizer", stab_json(sp.order, sp.tag),
                         stab_json(stab.size(), stabilizer_structure(order_census(f, stab)))));

  out.push_back(make_row(q, fam, rho.code, "n-rho", n_rho_closed(f, rho), n_rho_brute(f, rho)));
  if (f.even()) {
    out.push_back(make_row(q, fam, rho.code, "W-tilde", w_tilde_closed(f, rho), w_tilde_brute(f, rho)));
  } else if (f.xi() == 1) {
    out.push_back(make_row(q, fam, rho.code, "N_q_rho", n_q_rho(f, rho), root_census_odd(f, rho).N[1]));
  }
  const std::uint64_t seed = wb.seed() ^ (std::uint64_t{q} << 32) ^ rho.code;
  out.push_back(make_row(q, fam, rho.code, "incidence-profile", profile_json(profile_closed(f, rho)),
                         profile_json(profile_bruteforce(model, *orb, key, seed))));
}

void ellmu_rows(Workbench& wb, std::uint32_t q, Elem mu, std::vector<Row>& out) {
  const CubicModel& model = wb.model(q);
  const Group& g = wb.group(q);
  const Field& f = model.field();
  const Family fam = Family::EllMu;
  const LineKey key = ell_mu(f, mu).line.key;
  const auto orb = g.orbit_of_line(key);
  const std::uint64_t pred = predicted_orbit_size_ellmu(f, mu);
  const std::uint64_t Q = q;
  out.push_back(make_row(q, fam, mu.code, "orbit-size", pred, orb->size()));
  out.push_back(make_row(q, fam, mu.code, "stabilizer-order", (Q * Q * Q - Q) / pred, orb->stab_order()));
  if (f.even())
    out.push_back(make_row(q, fam, mu.code, "n-mu", n_mu_closed(f, mu), t_points(model, key)));
  else
    out.push_back(make_row(q, fam, mu.code, "n-mu", n_mu_closed(f, mu), n_mu_brute(f, mu)));
}

void lscript_rows(Workbench& wb, std::uint32_t q, std::vector<Row>& out) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  const Family fam = Family::LScript;
  const LineKey key = script_line(f).key;
  const auto orb = g.orbit_of_line(key);
  out.push_back(make_row(q, fam, nullptr, "orbit-size", predicted_orbit_size_L(f), orb->size()));
  const StabPrediction sp = predicted_stab_lrho(f, Field::one());
  out.push_back(make_row(q, fam, nullptr, "stabilizer", stab_json(sp.order, sp.tag),
                         stab_json(orb->stab_order(), stabilizer_structure(*orb))));
  out.push_back(make_row(q, fam, nullptr, "n-rho", n_rho_closed(f, Field::one()), n_rho_brute(f, Field::one())));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string plain(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string_view name(Family f) {
  switch (f) {
    case Family::LRho: return "lrho";
    case Family::EllMu: return "ellmu";
    case Family::LScript: return "lscript";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "lrho") return Family::LRho;
  if (s == "ellmu") return Family::EllMu;
  if (s == "lscript") return Family::LScript;
  return std::nullopt;
}

json profile_json(const IncidenceProfile& p) {
  json j;
  j["orbit_size"] = p.orbit_size;
  for (PointType t : kPointTypes) j["Pb_" + std::string(name(t))] = p.pb(t);
  for (PointType t : kPointTypes) j["Lb_" + std::string(name(t))] = p.lb(t);
  for (PlaneType t : kPlaneTypes) j["Pi_" + std::string(name(t))] = p.pi(t);
  for (PlaneType t : kPlaneTypes) j["Lambda_" + std::string(name(t))] = p.lambda(t);
  return j;
}

json stab_json(std::uint64_t order, StabilizerTag tag) { return json{{"order", order}, {"tag", name(tag)}}; }

std::vector<Row> report_rows(Workbench& wb, std::uint32_t q, Family family, const std::vector<std::uint32_t>& params) {
  const Field& f = *wb.field(q);
  std::vector<Row> out;
  if (family == Family::LScript) {
    if (f.xi() == 0) {
      out.push_back(error_row(q, family, nullptr, "L lies in osculating plane pi_osc(" +
                                                      std::to_string(lies_in_osc_plane_char3(f, Field::one()).t.code) +
                                                      ")"));
      return out;
    }
    try {
      lscript_rows(wb, q, out);
    } catch (const std::exception& e) {
      out.push_back(error_row(q, family, nullptr, e.what(), "exception"));
    }
    return out;
  }

  std::vector<std::uint32_t> codes = params;
  if (codes.empty()) {
    for (Elem x : f.nonzero())
      if (family == Family::LRho || ell_mu_admissible(f, x)) codes.push_back(x.code);
  }
  for (std::uint32_t c : codes) {
    if (c == 0 || c >= q) {
      out.push_back(error_row(q, family, c, "parameter must be a nonzero element code below " + std::to_string(q)));
      continue;
    }
    const Elem x = f.at(c);
    try {
      if (family == Family::LRho) {
        if (f.xi() == 0) {
          const OsculatingWitness w = lies_in_osc_plane_char3(f, x);
          out.push_back(error_row(q, family, c, "L_rho lies in osculating plane pi_osc(" + std::to_string(w.t.code) + ")"));
          continue;
        }
        lrho_rows(wb, q, x, out);
      } else {
        if (!ell_mu_admissible(f, x)) {
          out.push_back(error_row(q, family, c, "mu is not admissible (mu = 1, or mu = 1/9 for odd q)"));
          continue;
        }
        if (f.xi() == 0) {
          out.push_back(error_row(q, family, c, "orbit data for ell_mu needs q not divisible by 3"));
          continue;
        }
        ellmu_rows(wb, q, x, out);
      }
    } catch (const std::exception& e) {
      out.push_back(error_row(q, family, c, e.what(), "exception"));
    }
  }
  return out;
}

json row_json(const Row& r) {
  json j;
  j["q"] = r.q;
  j["family"] = r.family;
  j["param"] = r.param;
  j["quantity"] = r.quantity;
  j["predicted"] = r.predicted;
  j["computed"] = r.computed;
  j["match"] = r.match;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string rows_csv(const std::vector<Row>& rows) {
  std::ostringstream os;
  os << "q,family,param,quantity,predicted,computed,match,error\n";
  for (const Row& r : rows) {
    os << r.q << ',' << csv_cell(r.family) << ',' << (r.param.is_null() ? "" : csv_cell(plain(r.param))) << ','
       << csv_cell(r.quantity) << ',' << csv_cell(r.predicted.is_null() ? "" : plain(r.predicted)) << ','
       << csv_cell(r.computed.is_null() ? "" : plain(r.computed)) << ',' << (r.match ? "true" : "false") << ','
       << csv_cell(r.error) << '\n';
  }
  return os.str();
}

std::string rows_text(const std::vector<Row>& rows) {
  std::ostringstream os;
  for (const Row& r : rows) {
    os << "q=" << r.q << ' ' << r.family;
    if (!r.param.is_null()) os << " param=" << plain(r.param);
    os << ' ' << r.quantity << ": ";
    if (!r.error.empty())
      os << "ERROR " << r.error;
    else
      os << "predicted " << plain(r.predicted) << ", computed " << plain(r.computed) << (r.match ? "  ok" : "  MISMATCH");
    os << '\n';
  }
  return os.str();
}

}  // namespace twc
