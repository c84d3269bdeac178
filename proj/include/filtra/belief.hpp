#ifndef FILTRA_BELIEF_HPP
#define FILTRA_BELIEF_HPP

#include "filtra/formula.hpp"
#include "filtra/point_set.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// A deductively closed theory, represented by its models: phi is a member
// iff points() is a subset of ||phi||. The empty point set is the
// inconsistent theory containing every formula.
class BeliefSet {
 public:
  BeliefSet(UniversePtr universe, PointSet points);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const PointSet& points() const { return points_; }

  // Same universe and same models.
  friend bool operator==(const BeliefSet& a, const BeliefSet& b) {
    return same_universe(a.universe_, b.universe_) && a.points_ == b.points_;
  }

 private:
  UniversePtr universe_;
  PointSet points_;
};

BeliefSet belief_set_from_points(PointSet s, UniversePtr u);

bool contains(const BeliefSet& k, const Formula& f);
bool is_consistent(const BeliefSet& k);

// [K u {phi}]^PL: models shrink to points(K) n ||phi||.
BeliefSet expand(const BeliefSet& k, const Formula& f);
BeliefSet expand(const BeliefSet& k, const PointSet& e);

// Theory intersection K1 n K2. On models this is a union.
BeliefSet intersect(const BeliefSet& k1, const BeliefSet& k2);

// K1 is a subset of K2 as a set of formulas.
bool theory_subset(const BeliefSet& k1, const BeliefSet& k2);

}  // namespace filtra

#endif  // FILTRA_BELIEF_HPP
