#include "twc/pg3.hpp"

#include <stdexcept>

namespace twc {
namespace {

struct PairSlot {
  int index;
  bool negate;
};

// Position of l_ij (i != j) inside the (l01, l02, l03, l12, l31, l23) vector.
constexpr PairSlot slot(int i, int j) {
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  // Stored orientations: 01 02 03 12 31 23.
  constexpr bool stored_forward[4][4] = {{false, true, true, true},
                                         {false, false, true, false},
                                         {false, false, false, true},
                                         {false, true, false, false}};
  return {table[i][j], !stored_forward[i][j]};
}

Elem skew(const Field& f, const Plucker& l, int i, int j) {
  if (i == j) return Field::zero();
  const PairSlot s = slot(i, j);
  const Elem v = l[static_cast<std::size_t>(s.index)];
  return s.negate ? f.neg(v) : v;
}

Vec4 skew_row(const Field& f, const Plucker& l, int i) {
  return {skew(f, l, i, 0), skew(f, l, i, 1), skew(f, l, i, 2), skew(f, l, i, 3)};
}

bool is_zero(const Vec4& v) {
  for (Elem e : v)
    if (e.code != 0) return false;
  return true;
}

Vec4 scale_first_one(const Field& f, const Vec4& v) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i].code != 0) {
      const Elem s = f.inv(v[i]);
      Vec4 out{};
      for (std::size_t j = 0; j < 4; ++j) out[j] = f.mul(v[j], s);
      return out;
    }
  }
  throw std::invalid_argument("zero vector has no projective point");
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

constexpr std::array<std::pair<int, int>, 6> kPivotPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Free positions of the reduced row echelon basis with pivots (i, j).
std::vector<std::pair<int, int>> free_slots(int i, int j) {
  std::vector<std::pair<int, int>> out;
  for (int c = i + 1; c < 4; ++c)
    if (c != j) out.emplace_back(0, c);
  for (int c = j + 1; c < 4; ++c) out.emplace_back(1, c);
  return out;
}

// Reduced row echelon form of two independent rows.
std::array<Vec4, 2> rref2(const Field& f, Vec4 r0, Vec4 r1, int& pi, int& pj) {
  std::array<Vec4, 2> rows{r0, r1};
  int row = 0;
  int pivots[2] = {-1, -1};
  for (int col = 0; col < 4 && row < 2; ++col) {
    int sel = -1;
    for (int r = row; r < 2; ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].code != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<std::size_t>(row)], rows[static_cast<std::size_t>(sel)]);
    Vec4& pr = rows[static_cast<std::size_t>(row)];
    const Elem s = f.inv(pr[static_cast<std::size_t>(col)]);
    for (auto& e : pr) e = f.mul(e, s);
    for (int r = 0; r < 2; ++r) {
      if (r == row) continue;
      Vec4& other = rows[static_cast<std::size_t>(r)];
      const Elem c = other[static_cast<std::size_t>(col)];
      if (c.code == 0) continue;
      for (std::size_t k = 0; k < 4; ++k) other[k] = f.sub(other[k], f.mul(c, pr[k]));
    }
    pivots[row++] = col;
  }
  if (row != 2) throw std::invalid_argument("rows do not span a line");
  pi = pivots[0];
  pj = pivots[1];
  return rows;
}

}  // namespace

ProjPoint make_point(const Field& f, const Vec4& x) { return {scale_first_one(f, x)}; }
ProjPlane make_plane(const Field& f, const Vec4& c) { return {scale_first_one(f, c)}; }

Elem dot(const Field& f, const Vec4& x, const Vec4& y) {
  Elem acc = Field::zero();
  for (std::size_t i = 0; i < 4; ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

bool incident(const Field& f, const ProjPoint& pt, const ProjPlane& pl) { return dot(f, pt.x, pl.c).code == 0; }

Plucker plucker(const Field& f, const Vec4& x, const Vec4& y) {
  auto l = [&](int i, int j) {
    return f.sub(f.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]),
                 f.mul(x[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(i)]));
  };
  return {l(0, 1), l(0, 2), l(0, 3), l(1, 2), l(3, 1), l(2, 3)};
}

LineKey canonical_key(const Field& f, const Plucker& l) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (l[i].code != 0) {
      const Elem s = f.inv(l[i]);
      LineKey out;
      for (std::size_t j = 0; j < 6; ++j) out.k[j] = f.mul(l[j], s);
      return out;
    }
  }
  throw std::invalid_argument("zero Plücker vector");
}

ProjLine line_through(const Field& f, const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) throw std::invalid_argument("line_through needs two distinct points");
  return {P, Q, canonical_key(f, plucker(f, P.x, Q.x))};
}

ProjLine line_from_key(const Field& f, const LineKey& key) {
  Vec4 first{};
  bool have_first = false;
  for (int i = 0; i < 4; ++i) {
    const Vec4 row = skew_row(f, key.k, i);
    if (is_zero(row)) continue;
    if (!have_first) {
      first = row;
      have_first = true;
      continue;
    }
    const ProjPoint a = make_point(f, first);
    const ProjPoint b = make_point(f, row);
    if (a == b) continue;
    return {a, b, key};
  }
  throw std::invalid_argument("Plücker key does not describe a line");
}

bool on_line(const Field& f, const ProjPoint& pt, const LineKey& key) {
  static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : triples) {
    const int i = t[0], j = t[1], k = t[2];
    Elem v = f.mul(pt.x[static_cast<std::size_t>(i)], skew(f, key.k, j, k));
    v = f.sub(v, f.mul(pt.x[static_cast<std::size_t>(j)], skew(f, key.k, i, k)));
    v = f.add(v, f.mul(pt.x[static_cast<std::size_t>(k)], skew(f, key.k, i, j)));
    if (v.code != 0) return false;
  }
  return true;
}

bool line_in_plane(const Field& f, const LineKey& key, const ProjPlane& pl) {
  for (int i = 0; i < 4; ++i)
    if (dot(f, skew_row(f, key.k, i), pl.c).code != 0) return false;
  return true;
}

std::vector<ProjPoint> points_on(const Field& f, const ProjLine& l) {
  std::vector<ProjPoint> out;
  out.reserve(f.q() + 1);
  out.push_back(l.b);
  for (Elem lambda : f.elements()) {
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i) v[i] = f.add(l.a.x[i], f.mul(lambda, l.b.x[i]));
    out.push_back(make_point(f, v));
  }
  return out;
}

std::vector<Vec4> null_space(const Field& f, std::span<const Vec4> rows) {
  std::vector<Vec4> m(rows.begin(), rows.end());
  std::array<int, 4> pivot_of_col{-1, -1, -1, -1};
  std::size_t row = 0;
  for (std::size_t col = 0; col < 4 && row < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t r = row; r < m.size(); ++r)
      if (m[r][col].code != 0) {
        sel = r;
        break;
      }
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Elem s = f.inv(m[row][col]);
    for (auto& e : m[row]) e = f.mul(e, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].code == 0) continue;
      const Elem c = m[r][col];
      for (std::size_t k = 0; k < 4; ++k) m[r][k] = f.sub(m[r][k], f.mul(c, m[row][k]));
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<Vec4> basis;
  for (std::size_t free = 0; free < 4; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec4 v{};
    v[free] = Field::one();
    for (std::size_t col = 0; col < 4; ++col) {
      if (pivot_of_col[col] < 0) continue;
      v[col] = f.neg(m[static_cast<std::size_t>(pivot_of_col[col])][free]);
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<ProjPlane> planes_through(const Field& f, const ProjLine& l) {
  const std::array<Vec4, 2> rows{l.a.x, l.b.x};
  const auto basis = null_space(f, rows);
  if (basis.size() != 2) throw std::logic_error("a line must lie in a pencil of planes");
  std::vector<ProjPlane> out;
  out.reserve(f.q() + 1);
  out.push_back(make_plane(f, basis[1]));
  for (Elem lambda : f.elements()) {
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i) v[i] = f.add(basis[0][i], f.mul(lambda, basis[1][i]));
    out.push_back(make_plane(f, v));
  }
  return out;
}

std::vector<ProjPoint> points_in(const Field& f, const ProjPlane& pl) {
  const std::array<Vec4, 1> rows{pl.c};
  const auto basis = null_space(f, rows);
  if (basis.size() != 3) throw std::logic_error("a plane must have a 3-dimensional point space");
  std::vector<ProjPoint> out;
  const std::uint32_t q = f.q();
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  auto emit = [&](Elem x, Elem y, Elem z) {
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i)
      v[i] = f.add(f.add(f.mul(x, basis[0][i]), f.mul(y, basis[1][i])), f.mul(z, basis[2][i]));
    out.push_back(make_point(f, v));
  };
  for (Elem y : f.elements())
    for (Elem z : f.elements()) emit(Field::one(), y, z);
  for (Elem z : f.elements()) emit(Field::zero(), Field::one(), z);
  emit(Field::zero(), Field::zero(), Field::one());
  return out;
}

ProjLine plane_meet(const Field& f, const ProjPlane& u, const ProjPlane& v) {
  const std::array<Vec4, 2> rows{u.c, v.c};
  const auto basis = null_space(f, rows);
  if (basis.size() != 2) throw std::invalid_argument("planes coincide");
  return line_through(f, make_point(f, basis[0]), make_point(f, basis[1]));
}

Elem mutual_invariant(const Field& f, const Plucker& l, const Plucker& m) {
  // l01 m23 + l23 m01 + l02 m31 + l31 m02 + l03 m12 + l12 m03
  Elem acc = f.mul(l[0], m[5]);
  acc = f.add(acc, f.mul(l[5], m[0]));
  acc = f.add(acc, f.mul(l[1], m[4]));
  acc = f.add(acc, f.mul(l[4], m[1]));
  acc = f.add(acc, f.mul(l[2], m[3]));
  acc = f.add(acc, f.mul(l[3], m[2]));
  return acc;
}

ProjPlane null_polarity_point(const Field& f, const ProjPoint& pt) {
  if (f.p() == 3) throw std::domain_error("the null polarity needs q not divisible by 3");
  const Elem three = f.from_int(3);
  return make_plane(f, {pt.x[3], f.neg(f.mul(three, pt.x[2])), f.mul(three, pt.x[1]), f.neg(pt.x[0])});
}

ProjLine null_polarity_line(const Field& f, const ProjLine& l) {
  const ProjPlane u = null_polarity_point(f, l.a);
  const ProjPlane v = null_polarity_point(f, l.b);
  if (u == v) throw std::logic_error("polar planes of distinct points coincide");
  return plane_meet(f, u, v);
}

std::size_t point_count(std::uint32_t q) {
  const std::size_t Q = q;
  return Q * Q * Q + Q * Q + Q + 1;
}

std::size_t line_count(std::uint32_t q) {
  const std::size_t Q = q;
  return (Q * Q + 1) * (Q * Q + Q + 1);
}

std::size_t vec_index(const Field& f, const Vec4& v) {
  const std::size_t q = f.q();
  std::size_t base = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t span = ipow(q, static_cast<unsigned>(3 - k));
    if (v[k].code == 0) {
      base += span;
      continue;
    }
    std::size_t digits = 0;
    for (std::size_t j = k + 1; j < 4; ++j) digits = digits * q + v[j].code;
    return base + digits;
  }
  throw std::invalid_argument("zero vector has no index");
}

Vec4 vec_at(const Field& f, std::size_t index) {
  const std::size_t q = f.q();
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t span = ipow(q, static_cast<unsigned>(3 - k));
    if (index >= span) {
      index -= span;
      continue;
    }
    Vec4 v{};
    v[k] = Field::one();
    for (std::size_t j = 4; j-- > k + 1;) {
      v[j] = Elem{static_cast<std::uint32_t>(index % q)};
      index /= q;
    }
    return v;
  }
  throw std::out_of_range("point index out of range");
}

std::size_t line_index(const Field& f, const LineKey& key) {
  const ProjLine l = line_from_key(f, key);
  int pi = 0, pj = 0;
  const auto rows = rref2(f, l.a.x, l.b.x, pi, pj);
  const std::size_t q = f.q();
  std::size_t base = 0;
  for (const auto& [i, j] : kPivotPairs) {
    const auto slots = free_slots(i, j);
    if (i == pi && j == pj) {
      std::size_t digits = 0;
      for (const auto& [r, c] : slots)
        digits = digits * q + rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].code;
      return base + digits;
    }
    base += ipow(q, static_cast<unsigned>(slots.size()));
  }
  throw std::logic_error("unreachable pivot pair");
}

std::vector<ProjPoint> all_points(const Field& f) {
  std::vector<ProjPoint> out(point_count(f.q()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ProjPoint{vec_at(f, i)};
  return out;
}

std::vector<ProjPlane> all_planes(const Field& f) {
  std::vector<ProjPlane> out(point_count(f.q()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ProjPlane{vec_at(f, i)};
  return out;
}

void for_each_line(const Field& f, const std::function<void(const ProjLine&)>& visit) {
  const std::size_t q = f.q();
  for (const auto& [i, j] : kPivotPairs) {
    const auto slots = free_slots(i, j);
    const std::size_t n = ipow(q, static_cast<unsigned>(slots.size()));
    for (std::size_t code = 0; code < n; ++code) {
      std::array<Vec4, 2> rows{};
      rows[0][static_cast<std::size_t>(i)] = Field::one();
      rows[1][static_cast<std::size_t>(j)] = Field::one();
      std::size_t rest = code;
      for (std::size_t s = slots.size(); s-- > 0;) {
        rows[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] =
            Elem{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
      }
      visit(line_through(f, make_point(f, rows[0]), make_point(f, rows[1])));
    }
  }
}

std::vector<ProjLine> all_lines(const Field& f) {
  std::vector<ProjLine> out;
  out.reserve(line_count(f.q()));
  for_each_line(f, [&](const ProjLine& l) { out.push_back(l); });
  return out;
}

}  // namespace twc
