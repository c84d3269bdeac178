#include "filtra/gcs.hpp"

namespace filtra {

namespace {

struct Constraint {
  std::uint64_t menu;
  std::uint64_t chosen;
};

// Builds the order one level at a time, most plausible first. A menu's
// choice is settled by the first level that meets it, so each new level is
// checked against exactly the menus it meets for the first time.
bool place_levels(std::size_t n, std::uint64_t placed, unsigned rank,
                  const std::vector<Constraint>& constraints, std::vector<unsigned>& ranks) {
  const std::uint64_t full = PointSet::full_mask(n);
  if (placed == full) return true;
  const std::uint64_t remaining = full & ~placed;
  for (std::uint64_t level = remaining; level != 0; level = (level - 1) & remaining) {
    bool ok = true;
    for (const auto& c : constraints) {
      if ((c.menu & placed) == 0 && (c.menu & level) != 0 && (c.menu & level) != c.chosen) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if ((level >> i) & 1U) ranks[i] = rank;
    }
    if (place_levels(n, placed | level, rank + 1, constraints, ranks)) return true;
  }
  return false;
}

}  // namespace

std::optional<PlausibilityOrder> find_rationalizing_preorder(const Gcs& g, std::size_t limit) {
  const std::size_t n = g.universe->size();
  if (n > limit) {
    throw LimitError("rationalization search limited to " + std::to_string(limit) + " states");
  }
  std::vector<Constraint> constraints;
  for (const PointSet& e : g.credible) {
    const PointSet* fe = g.f(e);
    if (fe == nullptr) throw InvariantError("f is undefined on a credible event");
    if (e.empty()) {
      if (!fe->empty()) return std::nullopt;
      continue;
    }
    if (fe->empty() || !fe->subset_of(e)) return std::nullopt;
    constraints.push_back({e.bits(), fe->bits()});
  }
  std::vector<unsigned> ranks(n, 0);
  if (!place_levels(n, 0, 0, constraints, ranks)) return std::nullopt;
  return PlausibilityOrder(std::move(ranks));
}

}  // namespace filtra
