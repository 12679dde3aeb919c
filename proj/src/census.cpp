#include "twc/census.hpp"

#include <string>

#include "twc/families.hpp"

namespace twc {

CensusResult run_census(const CubicModel& model, std::uint64_t cap) {
  const Field& f = model.field();
  if (f.xi() == 0) throw std::domain_error("the census needs q not divisible by 3");
  const std::uint64_t n = line_count(f.q());
  if (n > cap)
    throw CensusCapExceeded("PG(3," + std::to_string(f.q()) + ") has " + std::to_string(n) +
                            " lines, above the census cap of " + std::to_string(cap));

  const auto gens = generators(f);
  std::array<Mat6, 3> comp{};
  for (std::size_t i = 0; i < 3; ++i) comp[i] = compound_matrix(f, action_matrix(f, gens[i]));

  constexpr std::int32_t kNone = -1;
  constexpr std::int32_t kNotEnG = -2;
  std::vector<std::int32_t> orbit_of(n, kNone);
  CensusResult res;
  res.q = f.q();
  std::vector<LineKey> frontier;

  for_each_line(f, [&](const ProjLine& line) {
    const std::size_t i = line_index(f, line.key);
    if (orbit_of[i] != kNone) return;
    if (!model.is_EnG(line.key)) {
      orbit_of[i] = kNotEnG;
      return;
    }
    const auto id = static_cast<std::int32_t>(res.orbits.size());
    CensusOrbit orb;
    orb.representative = line.key;
    frontier.assign(1, line.key);
    orbit_of[i] = id;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (const Mat6& g : comp) {
        const LineKey img = act_line(f, g, frontier[head]);
        std::int32_t& slot = orbit_of[line_index(f, img)];
        if (slot == kNone) {
          slot = id;
          frontier.push_back(img);
        } else if (slot != id) {
          throw std::logic_error("orbit closure reached a line of another class");
        }
      }
    }
    orb.size = frontier.size();
    res.total += orb.size;
    res.orbits.push_back(std::move(orb));
  });

  for (Elem rho : f.nonzero()) {
    const std::int32_t id = orbit_of[line_index(f, l_rho(f, rho).line.key)];
    if (id >= 0) res.orbits[static_cast<std::size_t>(id)].lrho.push_back(rho.code);
  }
  for (Elem mu : f.nonzero()) {
    if (!ell_mu_admissible(f, mu)) continue;
    const std::int32_t id = orbit_of[line_index(f, ell_mu(f, mu).line.key)];
    if (id >= 0) res.orbits[static_cast<std::size_t>(id)].ellmu.push_back(mu.code);
  }
  const std::int32_t id = orbit_of[line_index(f, script_line(f).key)];
  if (id >= 0) res.orbits[static_cast<std::size_t>(id)].has_L = true;
  return res;
}

}  // namespace twc
