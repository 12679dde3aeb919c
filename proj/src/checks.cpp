#include "twc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "twc/counts.hpp"
#include "twc/families.hpp"
#include "twc/incidence.hpp"
#include "twc/report.hpp"

namespace twc {
namespace {

using json = nlohmann::ordered_json;

// Collects rows for one check.
class Sheet {
 public:
  Sheet(CheckResult& r) : r_(r) {}

  void row(std::string family, json param, std::string quantity, json predicted, json computed) {
    Row w;
    w.q = r_.q;
    w.family = std::move(family);
    w.param = std::move(param);
    w.quantity = std::move(quantity);
    w.match = predicted == computed;
    w.predicted = std::move(predicted);
    w.computed = std::move(computed);
    r_.rows.push_back(std::move(w));
  }

  void error(std::string family, json param, std::string quantity, std::string message) {
    Row w;
    w.q = r_.q;
    w.family = std::move(family);
    w.param = std::move(param);
    w.quantity = std::move(quantity);
    w.error = std::move(message);
    r_.rows.push_back(std::move(w));
  }

 private:
  CheckResult& r_;
};

json census_json(const std::map<int, std::uint64_t>& c) {
  json j = json::object();
  for (const auto& [k, n] : c) j[std::to_string(k)] = n;
  return j;
}

std::uint64_t t_points_on(const CubicModel& model, const LineKey& key) {
  const Field& f = model.field();
  std::uint64_t n = 0;
  for (const ProjPoint& P : points_on(f, line_from_key(f, key))) n += model.classify_point(P) == PointType::T ? 1 : 0;
  return n;
}

std::uint64_t tangents_meeting(const CubicModel& model, const Plucker& coords) {
  const Field& f = model.field();
  std::uint64_t n = 0;
  for (const CubicParam& t : model.params())
    n += mutual_invariant(f, coords, tangent_coordinates(f, t)).code == 0 ? 1 : 0;
  return n;
}

std::vector<Elem> admissible_mus(const Field& f) {
  std::vector<Elem> out;
  for (Elem mu : f.nonzero())
    if (ell_mu_admissible(f, mu)) out.push_back(mu);
  return out;
}

// Sorted list of sorted code lists.
using Partition = std::vector<std::vector<std::uint32_t>>;

Partition partition_by(const Field& f, const std::function<std::size_t(Elem)>& label) {
  std::map<std::size_t, std::vector<std::uint32_t>> parts;
  for (Elem rho : f.nonzero()) parts[label(rho)].push_back(rho.code);
  Partition out;
  for (auto& [k, v] : parts) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

json partition_json(const Partition& p) {
  json j = json::array();
  for (const auto& part : p) j.push_back(part);
  return j;
}

bool divisible_by_three(std::uint32_t q) { return q % 3 == 0; }

std::string skip_reason(const std::string& id, const Field& f, const Workbench& wb) {
  const std::uint32_t q = f.q();
  if (id == "char3-osculating") return divisible_by_three(q) ? "" : "applies only when 3 | q";
  if (divisible_by_three(q)) return "requires q not divisible by 3";
  if (id == "trace-count" && !f.even()) return "applies only to even q";
  if (id == "carlitz-sum" && !(f.even() && f.m() % 2 == 0)) return "applies only to q = 2^(2m)";
  if ((id == "engamma-count" || id == "census") && line_count(q) > wb.census_cap())
    return "PG(3," + std::to_string(q) + ") has " + std::to_string(line_count(q)) + " lines, above the cap of " +
           std::to_string(wb.census_cap());
  return "";
}

// ---- individual checks ---------------------------------------------------

void plane_census(Workbench& wb, std::uint32_t q, Sheet& s) {
  const auto census = wb.model(q).plane_census();
  for (PlaneType t : kPlaneTypes)
    s.row("cubic", nullptr, "planes-" + std::string(name(t)), plane_orbit_size(q, t),
          census[static_cast<std::size_t>(t)]);
}

void point_census(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const auto points = model.point_census();
  const auto planes = model.plane_census();
  for (PointType t : kPointTypes) {
    const auto i = static_cast<std::size_t>(t);
    s.row("cubic", nullptr, "points-" + std::string(name(t)), point_orbit_size(q, t), points[i]);
    s.row("cubic", nullptr, "points-" + std::string(name(t)) + "-vs-dual-planes",
          planes[static_cast<std::size_t>(dual_type(t))], points[i]);
  }
}

void engamma_count(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const Field& f = model.field();
  std::uint64_t n = 0;
  for_each_line(f, [&](const ProjLine& l) { n += model.is_EnG(l.key) ? 1 : 0; });
  const std::uint64_t Q = q;
  s.row("cubic", nullptr, "EnG-lines", (Q * Q - Q) * (Q * Q - 1), n);
  for (Elem rho : f.nonzero()) s.row("lrho", rho.code, "is-EnG", true, model.is_EnG(l_rho(f, rho).line.key));
  for (Elem mu : admissible_mus(f)) s.row("ellmu", mu.code, "is-EnG", true, model.is_EnG(ell_mu(f, mu).line.key));
}

void lrho_orbit_size(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  for (Elem rho : f.nonzero())
    s.row("lrho", rho.code, "orbit-size", predicted_orbit_size_lrho(f, rho),
          g.orbit_of_line(l_rho(f, rho).line.key)->size());
}

void lrho_stabilizer(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  for (Elem rho : f.nonzero()) {
    const StabPrediction pred = predicted_stab_lrho(f, rho);
    const auto stab = g.stabilizer_of(l_rho(f, rho).line.key);
    const auto census = order_census(f, stab);
    try {
      s.row("lrho", rho.code, "stabilizer", stab_json(pred.order, pred.tag),
            stab_json(stab.size(), stabilizer_structure(census)));
    } catch (const std::logic_error& e) {
      s.error("lrho", rho.code, "stabilizer", e.what());
    }
    if (pred.order == 12)
      s.row("lrho", rho.code, "A4-order-census", json{{"1", 1}, {"2", 3}, {"3", 8}}, census_json(census));
  }
}

void lrho_partition(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  const PartitionPrediction pred = orbit_partition_prediction(f);

  std::vector<std::shared_ptr<const Orbit>> orbits;
  std::map<std::uint32_t, std::size_t> orbit_index;
  for (Elem rho : f.nonzero()) {
    const LineKey key = l_rho(f, rho).line.key;
    std::size_t i = 0;
    while (i < orbits.size() && !orbits[i]->contains(key)) ++i;
    if (i == orbits.size()) orbits.push_back(g.orbit_of_line(key));
    orbit_index[rho.code] = i;
  }
  s.row("lrho", nullptr, "orbit-count", pred.orbit_count, orbits.size());

  const Partition by_orbit = partition_by(f, [&](Elem rho) { return orbit_index.at(rho.code); });
  std::vector<std::uint64_t> per_orbit;
  for (const auto& part : by_orbit) per_orbit.push_back(part.size());
  s.row("lrho", nullptr, "lines-per-orbit", std::vector<std::uint64_t>(pred.orbit_count, (q - 1) / pred.orbit_count),
        per_orbit);

  if (f.xi() != 1) return;
  const Partition by_class = partition_by(f, [&](Elem rho) { return static_cast<std::size_t>(f.r_class(rho)); });
  s.row("lrho", nullptr, "orbits-vs-R-classes", partition_json(by_class), partition_json(by_orbit));

  // Another primitive element relabels the classes but must give the same partition.
  const Field alt = Field::make(q, 1);
  const Partition by_alt = partition_by(alt, [&](Elem rho) { return static_cast<std::size_t>(alt.r_class(rho)); });
  s.row("lrho", nullptr, "partition-alpha-independent", partition_json(by_class), partition_json(by_alt));

  for (Elem rho : f.nonzero()) {
    const auto i = static_cast<std::size_t>(f.r_class(rho));
    s.row("lrho", rho.code, "class-orbit-size", pred.class_sizes[i], orbits[orbit_index.at(rho.code)]->size());
  }
  if (pred.cube_class) {
    // The class whose -2 rho are cubes, found by direct cube tests.
    std::set<int> cube_classes;
    for (Elem rho : f.nonzero())
      if (f.is_cube(f.mul(f.from_int(-2), rho))) cube_classes.insert(f.r_class(rho));
    s.row("lrho", nullptr, "cube-class", json::array({*pred.cube_class}), cube_classes);
    std::set<int> alt_cube;
    for (Elem rho : alt.nonzero())
      if (alt.is_cube(alt.mul(alt.from_int(-2), rho))) alt_cube.insert(alt.r_class(rho));
    s.row("lrho", nullptr, "cube-class-alt-generator", json::array({orbit_partition_prediction(alt).cube_class.value()}),
          alt_cube);
  }
}

void ellmu_orbit_size(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  for (Elem mu : admissible_mus(f)) {
    const auto orb = g.orbit_of_line(ell_mu(f, mu).line.key);
    s.row("ellmu", mu.code, "orbit-size", predicted_orbit_size_ellmu(f, mu), orb->size());
  }
}

void lscript_orbit_size(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  const auto orb = g.orbit_of_line(script_line(f).key);
  s.row("lscript", nullptr, "orbit-size", predicted_orbit_size_L(f), orb->size());
  s.row("lscript", nullptr, "equals-L_1", true, orb->contains(l_rho(f, Field::one()).line.key));
}

void tangent_roots(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const Field& f = model.field();
  for (Elem rho : f.nonzero()) {
    const int closed = n_rho_closed(f, rho);
    const ProjLine line = l_rho(f, rho).line;
    s.row("lrho", rho.code, "n-rho-brute", closed, n_rho_brute(f, rho));
    s.row("lrho", rho.code, "T-points-on-line", closed, t_points_on(model, line.key));
    s.row("lrho", rho.code, "tangents-meeting", closed, tangents_meeting(model, line.key.k));
  }
}

void ellmu_roots(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const Field& f = model.field();
  for (Elem mu : admissible_mus(f)) {
    const int closed = n_mu_closed(f, mu);
    if (!f.even()) {
      s.row("ellmu", mu.code, "n-mu-brute", closed, n_mu_brute(f, mu));
      s.row("ellmu", mu.code, "n-mu-sqrt", closed, n_mu_sqrt(f, mu));
    }
    const LineKey key = ell_mu(f, mu).line.key;
    s.row("ellmu", mu.code, "T-points-on-line", closed, t_points_on(model, key));
    s.row("ellmu", mu.code, "tangents-meeting", closed, tangents_meeting(model, key.k));
  }
}

void trace_count(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Field& f = *wb.field(q);
  for (Elem rho : f.nonzero()) s.row("lrho", rho.code, "W-tilde", w_tilde_closed(f, rho), w_tilde_brute(f, rho));
}

void carlitz_sum(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Field& f = *wb.field(q);
  for (Elem a : f.nonzero()) s.row("carlitz", a.code, "S(a,0)", carlitz_closed(f, a), carlitz_brute(f, a));
  for (Elem rho : f.nonzero())
    s.row("lrho", rho.code, "W-tilde-from-carlitz", static_cast<long long>(w_tilde_brute(f, rho)),
          w_tilde_from_carlitz(f, rho));
}

void root_census(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Field& f = *wb.field(q);
  for (Elem rho : f.nonzero()) {
    const RootCensus rc = f.even() ? root_census_even(f, rho) : root_census_odd(f, rho);
    std::uint64_t mismatches = 0;
    for (Elem gamma : f.elements()) {
      const int r = rc.roots[gamma.code];
      if (r < 0) continue;
      mismatches += (r == 1) != single_root_predicted(f, rho, gamma) ? 1 : 0;
    }
    s.row("lrho", rho.code, "single-root-criterion-mismatches", 0, mismatches);
    const std::uint64_t total = rc.N[0] + rc.N[1] + rc.N[2] + rc.N[3];
    s.row("lrho", rho.code, "gamma-count", f.even() ? q : q - 1, total);
    std::uint64_t n1;
    if (f.even())
      n1 = w_tilde_closed(f, rho);
    else if (f.xi() == -1)
      n1 = (q - 3) / 2;
    else
      n1 = n_q_rho(f, rho);
    s.row("lrho", rho.code, "N_1", n1, rc.N[1]);
  }
}

void incidence_profile(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const Group& g = wb.group(q);
  const Field& f = model.field();
  for (Elem rho : f.nonzero()) {
    const LineKey key = l_rho(f, rho).line.key;
    const auto orb = g.orbit_of_line(key);
    const IncidenceProfile brute = profile_bruteforce(model, *orb, key, wb.seed() ^ (std::uint64_t{q} << 32) ^ rho.code);
    s.row("lrho", rho.code, "profile", profile_json(profile_closed(f, rho)), profile_json(brute));
    s.row("lrho", rho.code, "relations-violated", json::array(), relation_failures(q, brute));
    s.row("lrho", rho.code, "derived-from-partial", profile_json(brute),
          profile_json(derive_from_partial(q, brute.pb(PointType::T), brute.pb(PointType::OneGamma), orb->size())));

    const RootCensus rc = f.even() ? root_census_even(f, rho) : root_census_odd(f, rho);
    const std::uint64_t shift = (!f.even() && f.xi() == -1) ? 1 : 0;
    s.row("lrho", rho.code, "Pb_1Gamma-vs-single-roots", rc.N[1] + shift, brute.pb(PointType::OneGamma));

    if (!f.even() && f.xi() == 1) {
      const std::uint64_t n = n_q_rho(f, rho);
      s.row("lrho", rho.code, "N mod 3", 0, n % 3);
      if (l_rho(f, rho).minus2rho_is_cube) s.row("lrho", rho.code, "N mod 6", 0, n % 6);
    }
  }
}

bool fourth_power_brute(const Field& f, Elem x) {
  for (Elem y : f.nonzero())
    if (f.pow(y, 4) == x) return true;
  return false;
}

void coincidence(Workbench& wb, std::uint32_t q, Sheet& s) {
  const Group& g = wb.group(q);
  const Field& f = g.field();
  const Elem third = f.neg(f.inv(f.from_int(3)));
  const PartitionPrediction pred = orbit_partition_prediction(f);
  if (!f.even()) {
    const bool ups = q % 12 == 1 && fourth_power_brute(f, third);
    s.row("ellmu", third.code, "upsilon", upsilon(f, third), ups);
  }

  const auto mus = admissible_mus(f);
  std::vector<std::shared_ptr<const Orbit>> seen;
  for (Elem rho : f.nonzero()) {
    const LineKey key = l_rho(f, rho).line.key;
    if (std::any_of(seen.begin(), seen.end(), [&](const auto& o) { return o->contains(key); })) continue;
    const auto orb = g.orbit_of_line(key);
    seen.push_back(orb);

    const bool cube_orbit = pred.cube_class && f.r_class(rho) == *pred.cube_class;
    json expected = json::array();
    if ((pred.single_orbit_is_ellmu) || (cube_orbit && pred.cube_orbit_is_ellmu)) expected.push_back(third.code);
    json found = json::array();
    for (Elem mu : mus)
      if (orb->contains(ell_mu(f, mu).line.key)) found.push_back(mu.code);
    s.row("lrho", rho.code, "ellmu-in-orbit", expected, found);
  }
}

void char3_osculating(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  const Field& f = model.field();
  for (Elem rho : f.nonzero()) {
    const OsculatingWitness w = lies_in_osc_plane_char3(f, rho);
    s.row("lrho", rho.code, "cube-root", rho.code, f.pow(w.t, 3).code);
    const ProjLine line = l_rho(f, rho).line;
    const ProjPlane osc = osculating_plane(f, w.t);
    bool all = true;
    for (const ProjPoint& P : points_on(f, line)) all = all && incident(f, P, osc);
    s.row("lrho", rho.code, "in-osculating-plane", w.contained, all);
    s.row("lrho", rho.code, "in-osculating-plane-pointwise", true, all);
  }
  std::string computed = "accepted";
  try {
    (void)model.is_EnG(l_rho(f, Field::one()).line.key);
  } catch (const std::domain_error&) {
    computed = "domain_error";
  }
  s.row("lrho", nullptr, "is-EnG-rejects-char-3", "domain_error", computed);
}

void census(Workbench& wb, std::uint32_t q, Sheet& s) {
  const CubicModel& model = wb.model(q);
  for (Row& r : census_rows(model.field(), run_census(model, wb.census_cap())))
    s.row(std::move(r.family), std::move(r.param), std::move(r.quantity), std::move(r.predicted),
          std::move(r.computed));
}

using CheckFn = void (*)(Workbench&, std::uint32_t, Sheet&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"plane-census", plane_census},
      {"point-census", point_census},
      {"engamma-count", engamma_count},
      {"lrho-orbit-size", lrho_orbit_size},
      {"lrho-stabilizer", lrho_stabilizer},
      {"lrho-partition", lrho_partition},
      {"ellmu-orbit-size", ellmu_orbit_size},
      {"lscript-orbit-size", lscript_orbit_size},
      {"tangent-roots", tangent_roots},
      {"ellmu-roots", ellmu_roots},
      {"trace-count", trace_count},
      {"carlitz-sum", carlitz_sum},
      {"root-census", root_census},
      {"incidence-profile", incidence_profile},
      {"coincidence", coincidence},
      {"char3-osculating", char3_osculating},
      {"census", census},
  };
  return r;
}

}  // namespace

std::string_view name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

Workbench::Workbench(unsigned threads, std::uint64_t seed, std::uint64_t census_cap)
    : threads_(std::max(1u, threads)), seed_(seed), census_cap_(census_cap) {}

std::shared_ptr<const Field> Workbench::field(std::uint32_t q) {
  std::lock_guard lock(mu_);
  auto& slot = fields_[q];
  if (!slot) slot = std::make_shared<const Field>(Field::make(q));
  return slot;
}

const CubicModel& Workbench::model(std::uint32_t q) {
  auto f = field(q);
  std::lock_guard lock(mu_);
  auto& slot = models_[q];
  if (!slot) slot = std::make_unique<CubicModel>(f);
  return *slot;
}

const Group& Workbench::group(std::uint32_t q) {
  auto f = field(q);
  std::lock_guard lock(mu_);
  auto& slot = groups_[q];
  if (!slot) slot = std::make_unique<Group>(f, threads_);
  return *slot;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

CheckResult run_check(Workbench& wb, const std::string& id, std::uint32_t q) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == id; });
  if (it == reg.end()) throw std::invalid_argument("unknown check '" + id + "'");

  CheckResult r;
  r.id = id;
  r.q = q;
  const auto start = std::chrono::steady_clock::now();
  const std::string skip = skip_reason(id, *wb.field(q), wb);
  if (!skip.empty()) {
    r.status = CheckStatus::Skip;
    r.detail = skip;
    return r;
  }
  Sheet sheet(r);
  try {
    it->second(wb, q, sheet);
  } catch (const std::exception& e) {
    sheet.error("check", nullptr, id, e.what());
  }
  r.status = CheckStatus::Pass;
  for (const Row& row : r.rows) {
    if (!row.error.empty() || !row.match) {
      r.status = CheckStatus::Fail;
      r.detail = row.family + (row.param.is_null() ? "" : " " + row.param.dump()) + " " + row.quantity + ": " +
                 (row.error.empty() ? "predicted " + row.predicted.dump() + ", computed " + row.computed.dump()
                                    : row.error);
      break;
    }
  }
  if (r.status == CheckStatus::Pass && r.rows.empty()) {
    r.status = CheckStatus::Fail;
    r.detail = "no rows produced";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_all_checks(Workbench& wb, std::uint32_t q) {
  std::vector<CheckResult> out;
  for (const std::string& id : check_ids()) out.push_back(run_check(wb, id, q));
  return out;
}

std::vector<Row> census_rows(const Field& f, const CensusResult& res) {
  CheckResult r;
  r.q = f.q();
  Sheet s(r);
  const std::uint64_t Q = f.q();
  s.row("census", nullptr, "total", (Q * Q - Q) * (Q * Q - 1), res.total);

  std::map<std::uint32_t, std::uint64_t> rho_size, mu_size;
  std::uint64_t L_size = 0;
  std::uint64_t rho_orbits = 0;
  for (const CensusOrbit& o : res.orbits) {
    for (auto c : o.lrho) rho_size[c] = o.size;
    for (auto c : o.ellmu) mu_size[c] = o.size;
    if (o.has_L) L_size = o.size;
    rho_orbits += o.lrho.empty() ? 0 : 1;
  }
  auto found = [](const std::map<std::uint32_t, std::uint64_t>& m, std::uint32_t c) -> json {
    auto it = m.find(c);
    return it == m.end() ? json(nullptr) : json(it->second);
  };
  s.row("census", nullptr, "orbits-with-lrho", orbit_partition_prediction(f).orbit_count, rho_orbits);
  for (Elem rho : f.nonzero())
    s.row("lrho", rho.code, "census-orbit-size", predicted_orbit_size_lrho(f, rho), found(rho_size, rho.code));
  for (Elem mu : admissible_mus(f))
    s.row("ellmu", mu.code, "census-orbit-size", predicted_orbit_size_ellmu(f, mu), found(mu_size, mu.code));
  s.row("lscript", nullptr, "census-orbit-size", predicted_orbit_size_L(f), L_size);
  return r.rows;
}

UpsilonScan scan_upsilon(const std::vector<std::uint32_t>& qs) {
  UpsilonScan out;
  for (std::uint32_t q : qs) {
    const Field f = Field::make(q);
    bool holds = false;
    if (q % 12 == 1) holds = fourth_power_brute(f, f.neg(f.inv(f.from_int(3))));
    out.evaluated.emplace_back(q, holds);
    if (holds && out.first == 0) out.first = q;
  }
  return out;
}

}  // namespace twc
