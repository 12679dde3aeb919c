#include "twc/incidence.hpp"

#include <random>
#include <stdexcept>

#include "twc/counts.hpp"

namespace twc {
namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den, const char* what) {
  if (den == 0 || num % den != 0)
    throw std::domain_error(std::string(what) + ": " + std::to_string(num) + " / " + std::to_string(den) +
                            " is not an integer");
  return num / den;
}

std::size_t idx(PointType t) { return static_cast<std::size_t>(t); }
std::size_t idx(PlaneType t) { return static_cast<std::size_t>(t); }

struct LineCounts {
  std::array<std::uint64_t, 5> Pb{};
  std::array<std::uint64_t, 5> Pi{};
};

LineCounts count_on_line(const CubicModel& model, const LineKey& key) {
  const Field& f = model.field();
  const ProjLine line = line_from_key(f, key);
  LineCounts out;
  for (const ProjPoint& P : points_on(f, line)) ++out.Pb[idx(model.classify_point(P))];
  for (const ProjPlane& pl : planes_through(f, line)) ++out.Pi[idx(model.classify_plane(pl))];
  return out;
}

std::uint64_t lines_through(const Field& f, const Orbit& orb, const ProjPoint& P) {
  std::uint64_t n = 0;
  for (const LineKey& k : orb.members) n += on_line(f, P, k) ? 1 : 0;
  return n;
}

std::uint64_t lines_in(const Field& f, const Orbit& orb, const ProjPlane& pl) {
  std::uint64_t n = 0;
  for (const LineKey& k : orb.members) n += line_in_plane(f, k, pl) ? 1 : 0;
  return n;
}

// Fills the point side from Pb and orbit size, then mirrors to planes.
IncidenceProfile complete(std::uint32_t q, std::array<std::uint64_t, 5> pb, std::uint64_t orbit_size) {
  IncidenceProfile p;
  p.orbit_size = orbit_size;
  p.Pb = pb;
  for (PointType t : kPointTypes) {
    p.Lb[idx(t)] = exact_div(p.Pb[idx(t)] * orbit_size, point_orbit_size(q, t), "Lb");
    p.Pi[idx(dual_type(t))] = p.Pb[idx(t)];
    p.Lambda[idx(dual_type(t))] = p.Lb[idx(t)];
  }
  return p;
}

}  // namespace

PlaneType dual_type(PointType t) {
  switch (t) {
    case PointType::C: return PlaneType::Gamma;
    case PointType::T: return PlaneType::TwoC;
    case PointType::ZeroGamma: return PlaneType::ZeroC;
    case PointType::OneGamma: return PlaneType::OneBarC;
    case PointType::ThreeGamma: return PlaneType::ThreeC;
  }
  return PlaneType::Gamma;
}

IncidenceProfile profile_bruteforce(const CubicModel& model, const Orbit& orb, const LineKey& line,
                                    std::uint64_t seed) {
  const Field& f = model.field();
  if (f.xi() == 0) throw std::domain_error("incidence profiles need q not divisible by 3");
  if (!orb.contains(line)) throw std::invalid_argument("line is not a member of the orbit");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  IncidenceProfile p;
  p.orbit_size = orb.size();
  const LineCounts first = count_on_line(model, line);
  p.Pb = first.Pb;
  p.Pi = first.Pi;
  const LineCounts second = count_on_line(model, orb.members[pick(orb.members.size())]);
  if (second.Pb != first.Pb || second.Pi != first.Pi)
    throw std::logic_error("point or plane counts differ between two lines of one orbit");

  for (PointType t : kPointTypes) {
    const auto& pts = model.points_of_type(t);
    const std::uint64_t a = lines_through(f, orb, ProjPoint{vec_at(f, pts[pick(pts.size())])});
    const std::uint64_t b = lines_through(f, orb, ProjPoint{vec_at(f, pts[pick(pts.size())])});
    if (a != b) throw std::logic_error("orbit lines through two " + std::string(name(t)) + "-points differ");
    p.Lb[idx(t)] = a;
  }
  for (PlaneType t : kPlaneTypes) {
    const auto& pls = model.planes_of_type(t);
    const std::uint64_t a = lines_in(f, orb, ProjPlane{vec_at(f, pls[pick(pls.size())])});
    const std::uint64_t b = lines_in(f, orb, ProjPlane{vec_at(f, pls[pick(pls.size())])});
    if (a != b) throw std::logic_error("orbit lines in two " + std::string(name(t)) + "-planes differ");
    p.Lambda[idx(t)] = a;
  }
  return p;
}

IncidenceProfile profile_closed_even(const Field& f, Elem rho) {
  if (!f.even()) throw std::domain_error("requires even q");
  const std::uint64_t q = f.q();
  const std::uint64_t g = q * q * q - q;
  std::array<std::uint64_t, 5> pb{};
  std::array<std::uint64_t, 5> lb{};
  std::uint64_t orbit = 0;
  pb[idx(PointType::T)] = 1;
  if (f.m() % 2 == 1) {
    orbit = g;
    lb[idx(PointType::T)] = q - 1;
    pb[idx(PointType::OneGamma)] = q / 2;
    lb[idx(PointType::OneGamma)] = q;
    pb[idx(PointType::ThreeGamma)] = exact_div(q - 2, 6, "Pb_3Gamma");
    lb[idx(PointType::ThreeGamma)] = q - 2;
    pb[idx(PointType::ZeroGamma)] = exact_div(q + 1, 3, "Pb_0Gamma");
    lb[idx(PointType::ZeroGamma)] = q + 1;
  } else {
    const std::uint64_t w = w_tilde_closed(f, rho);
    if (w + 1 > q) throw std::domain_error("W~ exceeds q - 1");
    orbit = g / 3;
    lb[idx(PointType::T)] = exact_div(q - 1, 3, "Lb_T");
    pb[idx(PointType::OneGamma)] = w;
    lb[idx(PointType::OneGamma)] = exact_div(2 * w, 3, "Lb_1Gamma");
    pb[idx(PointType::ThreeGamma)] = exact_div(q - 1 - w, 3, "Pb_3Gamma");
    lb[idx(PointType::ThreeGamma)] = exact_div(2 * (q - 1 - w), 3, "Lb_3Gamma");
    pb[idx(PointType::ZeroGamma)] = exact_div(2 * q - 2 * w + 1, 3, "Pb_0Gamma");
    lb[idx(PointType::ZeroGamma)] = pb[idx(PointType::ZeroGamma)];
  }
  IncidenceProfile p;
  p.orbit_size = orbit;
  p.Pb = pb;
  p.Lb = lb;
  for (PointType t : kPointTypes) {
    p.Pi[idx(dual_type(t))] = pb[idx(t)];
    p.Lambda[idx(dual_type(t))] = lb[idx(t)];
  }
  return p;
}

IncidenceProfile profile_closed_odd(const Field& f, Elem rho) {
  if (f.even() || f.xi() == 0) throw std::domain_error("requires odd q not divisible by 3");
  if (rho.code == 0) throw std::domain_error("rho must be nonzero");
  const std::uint64_t q = f.q();
  const std::uint64_t g = q * q * q - q;
  std::array<std::uint64_t, 5> pb{};
  std::array<std::uint64_t, 5> lb{};
  std::uint64_t orbit = 0;
  if (f.xi() == -1) {
    orbit = g / 2;
    pb[idx(PointType::T)] = 2;
    lb[idx(PointType::T)] = q - 1;
    pb[idx(PointType::OneGamma)] = (q - 1) / 2;
    lb[idx(PointType::OneGamma)] = (q - 1) / 2;
    pb[idx(PointType::ThreeGamma)] = exact_div(q - 5, 6, "Pb_3Gamma");
    lb[idx(PointType::ThreeGamma)] = exact_div(q - 5, 2, "Lb_3Gamma");
    pb[idx(PointType::ZeroGamma)] = exact_div(q + 1, 3, "Pb_0Gamma");
    lb[idx(PointType::ZeroGamma)] = exact_div(q + 1, 2, "Lb_0Gamma");
  } else {
    const std::uint64_t n = n_q_rho(f, rho);
    if (n + 1 > q) throw std::domain_error("N_{q,rho} exceeds q - 1");
    if (!f.is_cube(f.mul(f.from_int(-2), rho))) {
      orbit = g / 3;
      pb[idx(PointType::T)] = 1;
      lb[idx(PointType::T)] = exact_div(q - 1, 3, "Lb_T");
      pb[idx(PointType::OneGamma)] = n;
      lb[idx(PointType::OneGamma)] = exact_div(2 * n, 3, "Lb_1Gamma");
      pb[idx(PointType::ThreeGamma)] = exact_div(q - 1 - n, 3, "Pb_3Gamma");
      lb[idx(PointType::ThreeGamma)] = exact_div(2 * (q - 1 - n), 3, "Lb_3Gamma");
      pb[idx(PointType::ZeroGamma)] = exact_div(2 * q + 1 - 2 * n, 3, "Pb_0Gamma");
      lb[idx(PointType::ZeroGamma)] = pb[idx(PointType::ZeroGamma)];
    } else {
      orbit = g / 12;
      if (n + 7 > q) throw std::domain_error("N_{q,rho} exceeds q - 7");
      pb[idx(PointType::T)] = 4;
      lb[idx(PointType::T)] = exact_div(q - 1, 3, "Lb_T");
      pb[idx(PointType::OneGamma)] = n;
      lb[idx(PointType::OneGamma)] = exact_div(n, 6, "Lb_1Gamma");
      pb[idx(PointType::ThreeGamma)] = exact_div(q - 7 - n, 3, "Pb_3Gamma");
      lb[idx(PointType::ThreeGamma)] = exact_div(q - 7 - n, 6, "Lb_3Gamma");
      pb[idx(PointType::ZeroGamma)] = exact_div(2 * (q - 1 - n), 3, "Pb_0Gamma");
      lb[idx(PointType::ZeroGamma)] = exact_div(q - 1 - n, 6, "Lb_0Gamma");
    }
  }
  IncidenceProfile p;
  p.orbit_size = orbit;
  p.Pb = pb;
  p.Lb = lb;
  for (PointType t : kPointTypes) {
    p.Pi[idx(dual_type(t))] = pb[idx(t)];
    p.Lambda[idx(dual_type(t))] = lb[idx(t)];
  }
  return p;
}

IncidenceProfile profile_closed(const Field& f, Elem rho) {
  return f.even() ? profile_closed_even(f, rho) : profile_closed_odd(f, rho);
}

IncidenceProfile derive_from_partial(std::uint32_t q, std::uint64_t pb_t, std::uint64_t pb_1gamma,
                                     std::uint64_t orbit_size) {
  const std::uint64_t total = q + 1;
  if (pb_1gamma + 2 * pb_t > total) throw std::domain_error("Pb_1Gamma + 2 Pb_T exceeds q + 1");
  std::array<std::uint64_t, 5> pb{};
  pb[idx(PointType::T)] = pb_t;
  pb[idx(PointType::OneGamma)] = pb_1gamma;
  pb[idx(PointType::ThreeGamma)] = exact_div(total - pb_1gamma - 2 * pb_t, 3, "Pb_3Gamma");
  pb[idx(PointType::ZeroGamma)] = pb_t + 2 * pb[idx(PointType::ThreeGamma)];
  return complete(q, pb, orbit_size);
}

std::vector<std::string> relation_failures(std::uint32_t q, const IncidenceProfile& p) {
  std::vector<std::string> bad;
  std::uint64_t sum_pb = 0, sum_pi = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    sum_pb += p.Pb[i];
    sum_pi += p.Pi[i];
  }
  if (sum_pb != q + 1) bad.emplace_back("sum of Pb is not q+1");
  if (sum_pi != q + 1) bad.emplace_back("sum of Pi is not q+1");
  if (p.pb(PointType::C) != 0 || p.lb(PointType::C) != 0 || p.pi(PlaneType::Gamma) != 0 ||
      p.lambda(PlaneType::Gamma) != 0)
    bad.emplace_back("C / Gamma entries are not zero");
  for (PointType t : kPointTypes) {
    if (p.Lb[idx(t)] * point_orbit_size(q, t) != p.Pb[idx(t)] * p.orbit_size)
      bad.push_back("Lb_" + std::string(name(t)) + " * |M| != Pb * |O|");
  }
  for (PlaneType t : kPlaneTypes) {
    if (p.Lambda[idx(t)] * plane_orbit_size(q, t) != p.Pi[idx(t)] * p.orbit_size)
      bad.push_back("Lambda_" + std::string(name(t)) + " * |N| != Pi * |O|");
  }
  const std::uint64_t pb3 = p.pb(PointType::ThreeGamma);
  if (3 * pb3 + p.pb(PointType::OneGamma) + 2 * p.pb(PointType::T) != q + 1)
    bad.emplace_back("3 Pb_3Gamma != q + 1 - Pb_1Gamma - 2 Pb_T");
  if (p.pb(PointType::ZeroGamma) != p.pb(PointType::T) + 2 * pb3) bad.emplace_back("Pb_0Gamma != Pb_T + 2 Pb_3Gamma");
  for (PointType t : kPointTypes) {
    if (p.Pb[idx(t)] != p.Pi[idx(dual_type(t))]) bad.push_back("Pb_" + std::string(name(t)) + " != dual Pi");
    if (p.Lb[idx(t)] != p.Lambda[idx(dual_type(t))]) bad.push_back("Lb_" + std::string(name(t)) + " != dual Lambda");
  }
  std::uint64_t flags_points = 0, flags_planes = 0;
  for (PointType t : kPointTypes) flags_points += p.Lb[idx(t)] * point_orbit_size(q, t);
  for (PlaneType t : kPlaneTypes) flags_planes += p.Lambda[idx(t)] * plane_orbit_size(q, t);
  if (flags_points != p.orbit_size * (q + 1)) bad.emplace_back("point-line double count");
  if (flags_planes != p.orbit_size * (q + 1)) bad.emplace_back("plane-line double count");
  return bad;
}

std::string describe(const IncidenceProfile& p) {
  std::string s = "orbit=" + std::to_string(p.orbit_size);
  for (PointType t : kPointTypes) {
    s += " Pb_" + std::string(name(t)) + "=" + std::to_string(p.pb(t));
    s += " Lb_" + std::string(name(t)) + "=" + std::to_string(p.lb(t));
  }
  for (PlaneType t : kPlaneTypes) {
    s += " Pi_" + std::string(name(t)) + "=" + std::to_string(p.pi(t));
    s += " Lambda_" + std::string(name(t)) + "=" + std::to_string(p.lambda(t));
  }
  return s;
}

}  // namespace twc
