#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "twc/gf.hpp"
#include "twc/pg3.hpp"
#include "twc/twisted.hpp"

namespace twc {

/// Element of G_q, the map t -> (a t + b) / (c t + d) on cubic parameters.
/// Stored with the first nonzero of (a, b, c, d) equal to 1.
struct GroupElement {
  Elem a, b, c, d;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

using Mat4 = std::array<Vec4, 4>;
using Mat6 = std::array<Plucker, 6>;

/// Canonical element; throws std::invalid_argument when ad - bc = 0.
GroupElement make_element(const Field& f, Elem a, Elem b, Elem c, Elem d);
GroupElement identity_element();
/// "g then h": the element acting as h(g(t)).
GroupElement compose(const Field& f, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const Field& f, const GroupElement& g);
/// Order of g in G_q.
int element_order(const Field& f, const GroupElement& g);

/// The 4x4 matrix acting on points written as row vectors.
Mat4 action_matrix(const Field& f, const GroupElement& g);
/// The induced action on Plücker row vectors (second compound of M).
Mat6 compound_matrix(const Field& f, const Mat4& m);

CubicParam act_param(const Field& f, const GroupElement& g, CubicParam t);
ProjPoint act_point(const Field& f, const Mat4& m, const ProjPoint& pt);
ProjPoint act_point(const Field& f, const GroupElement& g, const ProjPoint& pt);
/// Planes move by the inverse matrix on column vectors, so incidence is kept.
ProjPlane act_plane(const Field& f, const GroupElement& g, const ProjPlane& pl);
LineKey act_line(const Field& f, const Mat6& c, const LineKey& key);
LineKey act_line(const Field& f, const GroupElement& g, const LineKey& key);

/// All q^3 - q canonical elements, ascending.
std::vector<GroupElement> enumerate_group(const Field& f);
/// t -> t + 1, t -> alpha t, t -> 1/t.
std::array<GroupElement, 3> generators(const Field& f);

enum class StabilizerTag : std::uint8_t { Trivial, C2, C3, C4, V4, A4 };
std::string_view name(StabilizerTag t);

/// A G_q-orbit of lines with its stabilizer.
struct Orbit {
  LineKey seed;
  /// Members in breadth-first discovery order; members[0] is the seed.
  std::vector<LineKey> members;
  std::unordered_set<LineKey, LineKeyHash> keys;
  std::vector<GroupElement> stabilizer;
  /// Element order -> number of stabilizer elements of that order.
  std::map<int, std::uint64_t> order_census;

  std::uint64_t size() const { return members.size(); }
  std::uint64_t stab_order() const { return stabilizer.size(); }
  bool contains(const LineKey& key) const { return keys.contains(key); }
};

/// Identifies the stabilizer from its order census. Throws std::logic_error
/// if the census matches none of the expected groups.
StabilizerTag stabilizer_structure(const Orbit& orb);
StabilizerTag stabilizer_structure(const std::map<int, std::uint64_t>& order_census);
/// Element order -> count over a list of group elements.
std::map<int, std::uint64_t> order_census(const Field& f, const std::vector<GroupElement>& elems);

/// Runs fn(begin, end) over [0, n) split across `threads` workers.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

/// G_q for one field, with an orbit cache keyed by every member line.
///
/// Orbit computation is thread-safe; concurrent requests for lines of the
/// same orbit may compute it twice but the cached result is unique.
class Group {
 public:
  explicit Group(std::shared_ptr<const Field> field, unsigned threads = 1);

  const Field& field() const { return *field_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  unsigned threads() const { return threads_; }

  /// BFS closure under the generators, then a full stabilizer scan. Throws
  /// std::logic_error if orbit size times stabilizer order is not q^3 - q.
  std::shared_ptr<const Orbit> orbit_of_line(const LineKey& seed) const;
  bool same_orbit(const LineKey& l1, const LineKey& l2) const;

  /// Elements fixing the line, by scanning the whole group.
  std::vector<GroupElement> stabilizer_of(const LineKey& key) const;

  /// Size of the closure of the identity under the generators.
  std::size_t generated_size() const;

 private:
  std::shared_ptr<const Field> field_;
  unsigned threads_;
  std::vector<GroupElement> elements_;
  std::array<Mat6, 3> gen_compound_{};
  mutable std::mutex mu_;
  mutable std::unordered_map<LineKey, std::shared_ptr<const Orbit>, LineKeyHash> cache_;
};

}  // namespace twc
