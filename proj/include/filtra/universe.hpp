#ifndef FILTRA_UNIVERSE_HPP
#define FILTRA_UNIVERSE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filtra/point_set.hpp"

namespace filtra {

// Default budget for canonical universes. Tables over a canonical universe
// have 2^(2^n) entries, so this stays small.
inline constexpr std::size_t kDefaultAtomLimit = 4;
inline constexpr std::size_t kMaxAtoms = 6;

// Finite ordered set of atom names; order is declaration order.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::vector<std::string> names);
  AtomSet(std::initializer_list<std::string> names)
      : AtomSet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
};

// A point carries an id and a truth assignment; bit i of `assignment` is the
// value of atom i.
struct Point {
  std::string id;
  std::uint64_t assignment = 0;

  bool holds(std::size_t atom) const { return ((assignment >> atom) & 1U) != 0; }
  friend bool operator==(const Point&, const Point&) = default;
};

// Nonempty ordered list of points over a declared atom set. Assignments may
// repeat and need not cover every valuation.
class Universe {
 public:
  Universe(AtomSet atoms, std::vector<Point> points);

  const AtomSet& atoms() const { return atoms_; }
  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Point>& points() const { return points_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  PointSet all() const { return PointSet::full_over(size()); }
  PointSet none() const { return PointSet::empty_over(size()); }

  // V(p): the points where atom `atom` is true.
  PointSet extension(std::size_t atom) const;

  // Every valuation of the atoms appears exactly once.
  bool is_exhaustive() const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  AtomSet atoms_;
  std::vector<Point> points_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// All 2^n valuations of `atoms`, ids w0..w{2^n-1}. Point wk assigns the first
// declared atom the most significant bit of k, so for {p,q}: w0 = neither,
// w1 = q only, w2 = p only, w3 = both.
UniversePtr canonical_universe(const AtomSet& atoms,
                               std::size_t limit = kDefaultAtomLimit);

// Assignment bitmask (bit i = atom i) of canonical point `index`.
std::uint64_t canonical_assignment(std::size_t index, std::size_t atom_count);
// Inverse of canonical_assignment.
std::size_t canonical_index(std::uint64_t assignment, std::size_t atom_count);

bool same_universe(const UniversePtr& a, const UniversePtr& b);

// "{a,b}" using point ids.
std::string format_points(const PointSet& s, const Universe& u);

}  // namespace filtra

#endif  // FILTRA_UNIVERSE_HPP
