#include "filtra/preorder.hpp"

#include <algorithm>

namespace filtra {

PlausibilityOrder::PlausibilityOrder(std::vector<unsigned> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw InvariantError("plausibility order over no points");
  if (ranks_.size() > PointSet::kMaxPoints) throw LimitError("too many points");
  const unsigned top = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<bool> used(top + 1, false);
  for (unsigned r : ranks_) used[r] = true;
  for (unsigned r = 0; r <= top; ++r) {
    if (!used[r]) throw InvariantError("ranks must be contiguous; rank " + std::to_string(r) + " is empty");
  }
  levels_ = top + 1;
}

PointSet PlausibilityOrder::level(unsigned r) const {
  PointSet s = PointSet::empty_over(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] == r) s.insert(i);
  }
  return s;
}

PointSet PlausibilityOrder::most_plausible(const PointSet& e) const {
  if (e.universe_size() != ranks_.size()) {
    throw UniverseMismatch("order and point set over different universes");
  }
  PointSet best = PointSet::empty_over(ranks_.size());
  unsigned best_rank = levels_;
  for (std::size_t i : e.members()) {
    if (ranks_[i] < best_rank) {
      best_rank = ranks_[i];
      best = PointSet::singleton(ranks_.size(), i);
    } else if (ranks_[i] == best_rank) {
      best.insert(i);
    }
  }
  return best;
}

std::vector<PointSet> PlausibilityOrder::ordered_partition() const {
  std::vector<PointSet> out;
  for (unsigned r = 0; r < levels_; ++r) out.push_back(level(r));
  return out;
}

namespace {

void extend(std::size_t n, std::uint64_t remaining, unsigned next_rank, std::vector<unsigned>& ranks,
            const std::function<void(const PlausibilityOrder&)>& visit) {
  if (remaining == 0) {
    visit(PlausibilityOrder(ranks));
    return;
  }
  // Every nonempty subset of the unranked points can be the next level.
  for (std::uint64_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((sub >> i) & 1U) ranks[i] = next_rank;
    }
    extend(n, remaining & ~sub, next_rank + 1, ranks, visit);
  }
}

}  // namespace

void for_each_weak_order(std::size_t n,
                         const std::function<void(const PlausibilityOrder&)>& visit) {
  if (n == 0) return;
  if (n > PointSet::kMaxPoints) throw LimitError("too many points");
  std::vector<unsigned> ranks(n, 0);
  extend(n, PointSet::full_mask(n), 0, ranks, visit);
}

std::vector<PlausibilityOrder> enumerate_preorders(const Universe& u, std::size_t limit) {
  if (u.size() > limit) {
    throw LimitError("exhaustive pre-order enumeration limited to " + std::to_string(limit) +
                     " points");
  }
  std::vector<PlausibilityOrder> out;
  for_each_weak_order(u.size(), [&](const PlausibilityOrder& o) { out.push_back(o); });
  return out;
}

}  // namespace filtra
