#include "twc/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <thread>

namespace twc {
namespace {

// Orientation of the stored Plücker pairs: (0,1) (0,2) (0,3) (1,2) (3,1) (2,3).
constexpr std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 1}, {2, 3}}};

}  // namespace

GroupElement make_element(const Field& f, Elem a, Elem b, Elem c, Elem d) {
  if (f.sub(f.mul(a, d), f.mul(b, c)).code == 0) throw std::invalid_argument("ad - bc must be nonzero");
  std::array<Elem, 4> v{a, b, c, d};
  for (Elem e : v) {
    if (e.code != 0) {
      const Elem s = f.inv(e);
      for (Elem& x : v) x = f.mul(x, s);
      break;
    }
  }
  return {v[0], v[1], v[2], v[3]};
}

GroupElement identity_element() { return {Field::one(), Field::zero(), Field::zero(), Field::one()}; }

GroupElement compose(const Field& f, const GroupElement& g, const GroupElement& h) {
  // (t, 1) N(g) N(h) with N = [[a, c], [b, d]].
  const Elem a = f.add(f.mul(g.a, h.a), f.mul(g.c, h.b));
  const Elem c = f.add(f.mul(g.a, h.c), f.mul(g.c, h.d));
  const Elem b = f.add(f.mul(g.b, h.a), f.mul(g.d, h.b));
  const Elem d = f.add(f.mul(g.b, h.c), f.mul(g.d, h.d));
  return make_element(f, a, b, c, d);
}

GroupElement inverse(const Field& f, const GroupElement& g) { return make_element(f, g.d, f.neg(g.b), f.neg(g.c), g.a); }

int element_order(const Field& f, const GroupElement& g) {
  const GroupElement id = identity_element();
  GroupElement cur = g;
  int n = 1;
  while (cur != id) {
    cur = compose(f, cur, g);
    if (++n > static_cast<int>(f.q()) + 2) throw std::logic_error("element order exceeds q + 1");
  }
  return n;
}

Mat4 action_matrix(const Field& f, const GroupElement& g) {
  const Elem a = g.a, b = g.b, c = g.c, d = g.d;
  const Elem two = f.from_int(2), three = f.from_int(3);
  auto m = [&](Elem x, Elem y) { return f.mul(x, y); };
  const Elem a2 = m(a, a), b2 = m(b, b), c2 = m(c, c), d2 = m(d, d);
  Mat4 out{};
  out[0] = {m(a2, a), m(a2, c), m(a, c2), m(c2, c)};
  out[1] = {m(three, m(a2, b)), f.add(m(a2, d), m(two, m(m(a, b), c))), f.add(m(b, c2), m(two, m(m(a, c), d))),
            m(three, m(c2, d))};
  out[2] = {m(three, m(a, b2)), f.add(m(b2, c), m(two, m(m(a, b), d))), f.add(m(a, d2), m(two, m(m(b, c), d))),
            m(three, m(c, d2))};
  out[3] = {m(b2, b), m(b2, d), m(b, d2), m(d2, d)};
  return out;
}

Mat6 compound_matrix(const Field& f, const Mat4& mm) {
  Mat6 out{};
  for (std::size_t p = 0; p < 6; ++p) {
    const auto [k, l] = kPairs[p];
    for (std::size_t r = 0; r < 6; ++r) {
      const auto [i, j] = kPairs[r];
      out[p][r] = f.sub(f.mul(mm[k][i], mm[l][j]), f.mul(mm[k][j], mm[l][i]));
    }
  }
  return out;
}

CubicParam act_param(const Field& f, const GroupElement& g, CubicParam t) {
  Elem num, den;
  if (!t) {
    num = g.a;
    den = g.c;
  } else {
    num = f.add(f.mul(g.a, *t), g.b);
    den = f.add(f.mul(g.c, *t), g.d);
  }
  if (den.code == 0) return std::nullopt;
  return f.div(num, den);
}

ProjPoint act_point(const Field& f, const Mat4& m, const ProjPoint& pt) {
  Vec4 out{};
  for (std::size_t j = 0; j < 4; ++j) {
    Elem s = Field::zero();
    for (std::size_t i = 0; i < 4; ++i) s = f.add(s, f.mul(pt.x[i], m[i][j]));
    out[j] = s;
  }
  return make_point(f, out);
}

ProjPoint act_point(const Field& f, const GroupElement& g, const ProjPoint& pt) {
  return act_point(f, action_matrix(f, g), pt);
}

ProjPlane act_plane(const Field& f, const GroupElement& g, const ProjPlane& pl) {
  const Mat4 inv = action_matrix(f, inverse(f, g));
  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = dot(f, inv[i], pl.c);
  return make_plane(f, out);
}

LineKey act_line(const Field& f, const Mat6& c, const LineKey& key) {
  Plucker out{};
  for (std::size_t r = 0; r < 6; ++r) {
    Elem s = Field::zero();
    for (std::size_t p = 0; p < 6; ++p) s = f.add(s, f.mul(key.k[p], c[p][r]));
    out[r] = s;
  }
  return canonical_key(f, out);
}

LineKey act_line(const Field& f, const GroupElement& g, const LineKey& key) {
  return act_line(f, compound_matrix(f, action_matrix(f, g)), key);
}

std::vector<GroupElement> enumerate_group(const Field& f) {
  std::vector<GroupElement> out;
  const std::uint64_t q = f.q();
  out.reserve(q * q * q - q);
  const auto all = f.elements();
  // a = 0 first: (0, 1, c, d) with c != 0.
  for (Elem c : all) {
    if (c.code == 0) continue;
    for (Elem d : all) out.push_back({Field::zero(), Field::one(), c, d});
  }
  for (Elem b : all)
    for (Elem c : all)
      for (Elem d : all)
        if (d != f.mul(b, c)) out.push_back({Field::one(), b, c, d});
  std::sort(out.begin(), out.end());
  return out;
}

std::array<GroupElement, 3> generators(const Field& f) {
  return {GroupElement{Field::one(), Field::one(), Field::zero(), Field::one()},
          make_element(f, f.primitive(), Field::zero(), Field::zero(), Field::one()),
          GroupElement{Field::zero(), Field::one(), Field::one(), Field::zero()}};
}

std::string_view name(StabilizerTag t) {
  switch (t) {
    case StabilizerTag::Trivial: return "trivial";
    case StabilizerTag::C2: return "C2";
    case StabilizerTag::C3: return "C3";
    case StabilizerTag::C4: return "C4";
    case StabilizerTag::V4: return "V4";
    case StabilizerTag::A4: return "A4";
  }
  return "?";
}

StabilizerTag stabilizer_structure(const Orbit& orb) { return stabilizer_structure(orb.order_census); }

std::map<int, std::uint64_t> order_census(const Field& f, const std::vector<GroupElement>& elems) {
  std::map<int, std::uint64_t> out;
  for (const GroupElement& g : elems) ++out[element_order(f, g)];
  return out;
}

StabilizerTag stabilizer_structure(const std::map<int, std::uint64_t>& c) {
  std::uint64_t order = 0;
  for (const auto& [k, n] : c) order += n;
  auto count = [&](int k) -> std::uint64_t {
    auto it = c.find(k);
    return it == c.end() ? 0 : it->second;
  };
  switch (order) {
    case 1: return StabilizerTag::Trivial;
    case 2:
      if (count(2) == 1) return StabilizerTag::C2;
      break;
    case 3:
      if (count(3) == 2) return StabilizerTag::C3;
      break;
    case 4:
      if (count(4) == 2 && count(2) == 1) return StabilizerTag::C4;
      if (count(2) == 3) return StabilizerTag::V4;
      break;
    case 12:
      if (count(1) == 1 && count(2) == 3 && count(3) == 8) return StabilizerTag::A4;
      break;
    default: break;
  }
  std::string census;
  for (const auto& [k, n] : c) census += " " + std::to_string(k) + ":" + std::to_string(n);
  throw std::logic_error("unexpected stabilizer of order " + std::to_string(order) + " with census" + census);
}

void parallel_chunks(std::size_t n, unsigned threads, const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n / 4096 + 1));
  if (workers == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * step;
    const std::size_t hi = std::min(n, lo + step);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& t : pool) t.join();
}

Group::Group(std::shared_ptr<const Field> field, unsigned threads)
    : field_(std::move(field)), threads_(std::max(1u, threads)), elements_(enumerate_group(*field_)) {
  const auto gens = generators(*field_);
  for (std::size_t i = 0; i < 3; ++i) gen_compound_[i] = compound_matrix(*field_, action_matrix(*field_, gens[i]));
}

std::vector<GroupElement> Group::stabilizer_of(const LineKey& key) const {
  const Field& f = *field_;
  std::vector<std::vector<GroupElement>> parts(threads_);
  std::mutex part_mu;
  std::size_t next_part = 0;
  parallel_chunks(elements_.size(), threads_, [&](std::size_t lo, std::size_t hi) {
    std::vector<GroupElement> local;
    for (std::size_t i = lo; i < hi; ++i)
      if (act_line(f, elements_[i], key) == key) local.push_back(elements_[i]);
    std::lock_guard lock(part_mu);
    parts[next_part++] = std::move(local);
  });
  std::vector<GroupElement> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const Orbit> Group::orbit_of_line(const LineKey& seed) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(seed); it != cache_.end()) return it->second;
  }
  const Field& f = *field_;
  auto orb = std::make_shared<Orbit>();
  orb->seed = seed;
  orb->members.push_back(seed);
  orb->keys.insert(seed);
  for (std::size_t head = 0; head < orb->members.size(); ++head) {
    for (const Mat6& g : gen_compound_) {
      LineKey img = act_line(f, g, orb->members[head]);
      if (orb->keys.insert(img).second) orb->members.push_back(img);
    }
  }
  orb->stabilizer = stabilizer_of(seed);
  orb->order_census = order_census(f, orb->stabilizer);
  const std::uint64_t q = f.q();
  if (orb->size() * orb->stab_order() != q * q * q - q)
    throw std::logic_error("orbit-stabilizer identity fails: " + std::to_string(orb->size()) + " * " +
                           std::to_string(orb->stab_order()));

  std::lock_guard lock(mu_);
  if (auto it = cache_.find(seed); it != cache_.end()) return it->second;
  for (const LineKey& k : orb->members) cache_.emplace(k, orb);
  return orb;
}

bool Group::same_orbit(const LineKey& l1, const LineKey& l2) const { return orbit_of_line(l1)->contains(l2); }

std::size_t Group::generated_size() const {
  const Field& f = *field_;
  const auto gens = generators(f);
  std::vector<GroupElement> seen{identity_element()};
  std::unordered_set<std::uint64_t> mark;
  auto code = [&](const GroupElement& g) {
    const std::uint64_t q = f.q();
    return ((static_cast<std::uint64_t>(g.a.code) * q + g.b.code) * q + g.c.code) * q + g.d.code;
  };
  mark.insert(code(seen[0]));
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (const GroupElement& g : gens) {
      const GroupElement h = compose(f, seen[head], g);
      if (mark.insert(code(h)).second) seen.push_back(h);
    }
  }
  return seen.size();
}

}  // namespace twc
