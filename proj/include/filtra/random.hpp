#ifndef FILTRA_RANDOM_HPP
#define FILTRA_RANDOM_HPP

#include <cstdint>
#include <random>

#include "filtra/point_set.hpp"
#include "filtra/preorder.hpp"
#include "filtra/revision.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// mt19937_64 output is fixed by the standard; the draws below use only raw
// outputs so sequences are reproducible across standard libraries.
using Rng = std::mt19937_64;

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
bool coin(Rng& rng);

PointSet random_subset(Rng& rng, std::size_t n);
// Uniform over the nonempty subsets of `of`, which must be nonempty.
PointSet random_nonempty_subset(Rng& rng, const PointSet& of);

PlausibilityOrder random_preorder(Rng& rng, std::size_t n);

// Valid selection function for the given consistent initial models.
SelectionFunction random_selection(Rng& rng, UniversePtr universe, const PointSet& initial);

// Random nonempty initial models and a random selection function over them.
RevisionTable random_basic_table(Rng& rng, UniversePtr universe);

// Full set credible, empty set rejected, the rest uniform over C/A/R.
CredibilityLabeling random_labeling(Rng& rng, UniversePtr universe);

}  // namespace filtra

#endif  // FILTRA_RANDOM_HPP
