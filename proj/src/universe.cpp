#include "filtra/universe.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace filtra {

AtomSet::AtomSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InvariantError("invalid atom name '" + n + "'");
    if (!seen.insert(n).second) throw InvariantError("duplicate atom '" + n + "'");
  }
  if (names_.size() > kMaxAtoms) {
    throw LimitError("at most " + std::to_string(kMaxAtoms) + " atoms supported");
  }
}

std::optional<std::size_t> AtomSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool AtomSet::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Universe::Universe(AtomSet atoms, std::vector<Point> points)
    : atoms_(std::move(atoms)), points_(std::move(points)) {
  if (points_.empty()) throw InvariantError("universe must be nonempty");
  if (points_.size() > PointSet::kMaxPoints) {
    throw LimitError("universe has more than 64 points");
  }
  const std::uint64_t valid = PointSet::full_mask(atoms_.size());
  std::set<std::string_view> ids;
  for (const auto& p : points_) {
    if (p.id.empty()) throw InvariantError("point id must be nonempty");
    if (!ids.insert(p.id).second) throw InvariantError("duplicate point id '" + p.id + "'");
    if ((p.assignment & ~valid) != 0) {
      throw InvariantError("point '" + p.id + "' assigns undeclared atoms");
    }
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id == id) return i;
  }
  return std::nullopt;
}

PointSet Universe::extension(std::size_t atom) const {
  PointSet s = none();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].holds(atom)) s.insert(i);
  }
  return s;
}

bool Universe::is_exhaustive() const {
  if (atoms_.size() >= 7 || points_.size() != (std::size_t{1} << atoms_.size())) {
    return false;
  }
  std::set<std::uint64_t> seen;
  for (const auto& p : points_) seen.insert(p.assignment);
  return seen.size() == points_.size();
}

std::uint64_t canonical_assignment(std::size_t index, std::size_t atom_count) {
  std::uint64_t a = 0;
  for (std::size_t i = 0; i < atom_count; ++i) {
    if ((index >> (atom_count - 1 - i)) & 1U) a |= std::uint64_t{1} << i;
  }
  return a;
}

std::size_t canonical_index(std::uint64_t assignment, std::size_t atom_count) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < atom_count; ++i) {
    if ((assignment >> i) & 1U) k |= std::size_t{1} << (atom_count - 1 - i);
  }
  return k;
}

UniversePtr canonical_universe(const AtomSet& atoms, std::size_t limit) {
  if (atoms.empty()) throw LimitError("canonical universe needs at least one atom");
  if (atoms.size() > std::min(limit, kMaxAtoms)) {
    throw LimitError("atom limit exceeded: " + std::to_string(atoms.size()) + " > " +
                     std::to_string(std::min(limit, kMaxAtoms)));
  }
  const std::size_t n = std::size_t{1} << atoms.size();
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    points.push_back({"w" + std::to_string(k), canonical_assignment(k, atoms.size())});
  }
  return std::make_shared<const Universe>(atoms, std::move(points));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

std::string format_points(const PointSet& s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ",";
    out += u.point(i).id;
    first = false;
  }
  return out + "}";
}

}  // namespace filtra
