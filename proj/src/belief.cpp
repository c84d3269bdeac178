#include "filtra/belief.hpp"

namespace filtra {

namespace {

void require_same(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatch("belief sets over different universes");
}

}  // namespace

BeliefSet::BeliefSet(UniversePtr universe, PointSet points)
    : universe_(std::move(universe)), points_(points) {
  if (!universe_) throw InvariantError("belief set needs a universe");
  if (points_.universe_size() != universe_->size()) {
    throw UniverseMismatch("point set does not match universe size");
  }
}

BeliefSet belief_set_from_points(PointSet s, UniversePtr u) {
  return BeliefSet(std::move(u), s);
}

bool contains(const BeliefSet& k, const Formula& f) {
  return k.points().subset_of(truth_set(f, k.universe()));
}

bool is_consistent(const BeliefSet& k) { return !k.points().empty(); }

BeliefSet expand(const BeliefSet& k, const Formula& f) {
  return BeliefSet(k.universe_ptr(), k.points() & truth_set(f, k.universe()));
}

BeliefSet expand(const BeliefSet& k, const PointSet& e) {
  return BeliefSet(k.universe_ptr(), k.points() & e);
}

BeliefSet intersect(const BeliefSet& k1, const BeliefSet& k2) {
  require_same(k1.universe_ptr(), k2.universe_ptr());
  return BeliefSet(k1.universe_ptr(), k1.points() | k2.points());
}

bool theory_subset(const BeliefSet& k1, const BeliefSet& k2) {
  require_same(k1.universe_ptr(), k2.universe_ptr());
  return k2.points().subset_of(k1.points());
}

}  // namespace filtra
