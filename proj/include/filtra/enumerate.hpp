#ifndef FILTRA_ENUMERATE_HPP
#define FILTRA_ENUMERATE_HPP

#include <functional>

#include "filtra/point_set.hpp"
#include "filtra/revision.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// Exhaustive generators for small universes. Each visits every object once
// in a fixed order.

// Every valid selection function with the given consistent initial models.
void for_each_selection(const UniversePtr& u, const PointSet& initial,
                        const std::function<void(const SelectionFunction&)>& visit);

// Every credibility labeling (3^(2^n - 2) of them).
void for_each_labeling(const UniversePtr& u,
                       const std::function<void(const CredibilityLabeling&)>& visit);

// Every table with consistent initial models and arbitrary entries.
void for_each_table(const UniversePtr& u, const std::function<void(const RevisionTable&)>& visit);

}  // namespace filtra

#endif  // FILTRA_ENUMERATE_HPP
