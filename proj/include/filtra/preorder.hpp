#ifndef FILTRA_PREORDER_HPP
#define FILTRA_PREORDER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "filtra/point_set.hpp"
#include "filtra/universe.hpp"

namespace filtra {

inline constexpr std::size_t kExhaustivePreorderLimit = 5;

// Total pre-order on the points of a universe given as ranks; lower rank is
// more plausible. Ranks occupy 0..m with no gaps.
class PlausibilityOrder {
 public:
  explicit PlausibilityOrder(std::vector<unsigned> ranks);

  std::size_t size() const { return ranks_.size(); }
  unsigned rank(std::size_t point) const { return ranks_.at(point); }
  const std::vector<unsigned>& ranks() const { return ranks_; }
  unsigned level_count() const { return levels_; }
  PointSet level(unsigned r) const;

  // Lowest-rank points of e; empty for empty e.
  PointSet most_plausible(const PointSet& e) const;

  // Levels from most to least plausible.
  std::vector<PointSet> ordered_partition() const;

  friend bool operator==(const PlausibilityOrder&, const PlausibilityOrder&) = default;

 private:
  std::vector<unsigned> ranks_;
  unsigned levels_ = 0;
};

// Calls visit once per weak order (ordered set partition) of n points.
void for_each_weak_order(std::size_t n,
                         const std::function<void(const PlausibilityOrder&)>& visit);

// All weak orders of u's points. Throws LimitError past `limit` points.
std::vector<PlausibilityOrder> enumerate_preorders(const Universe& u,
                                                   std::size_t limit = kExhaustivePreorderLimit);

}  // namespace filtra

#endif  // FILTRA_PREORDER_HPP
