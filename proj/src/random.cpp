#include "filtra/random.hpp"

#include <vector>

namespace filtra {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvariantError("uniform_below needs a positive bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

PointSet random_subset(Rng& rng, std::size_t n) {
  return PointSet(n, rng() & PointSet::full_mask(n));
}

PointSet random_nonempty_subset(Rng& rng, const PointSet& of) {
  if (of.empty()) throw InvariantError("no nonempty subset of the empty set");
  const auto members = of.members();
  const std::uint64_t pick = 1 + uniform_below(rng, (std::uint64_t{1} << members.size()) - 1);
  PointSet out(of.universe_size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((pick >> i) & 1U) out.insert(members[i]);
  }
  return out;
}

PlausibilityOrder random_preorder(Rng& rng, std::size_t n) {
  std::vector<unsigned> raw(n);
  for (auto& r : raw) r = static_cast<unsigned>(uniform_below(rng, n));
  // Compress to contiguous ranks.
  std::vector<bool> used(n, false);
  for (unsigned r : raw) used[r] = true;
  std::vector<unsigned> remap(n, 0);
  unsigned next = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (used[r]) remap[r] = next++;
  }
  for (auto& r : raw) r = remap[r];
  return PlausibilityOrder(std::move(raw));
}

SelectionFunction random_selection(Rng& rng, UniversePtr universe, const PointSet& initial) {
  const std::size_t n = universe->size();
  const std::size_t count = std::size_t{1} << n;
  SelectionFunction s{universe, initial, std::vector<PointSet>(count, PointSet(n))};
  for (std::size_t bits = 1; bits < count; ++bits) {
    const PointSet e(n, bits);
    const PointSet compatible = e & initial;
    s.choice[bits] = compatible.empty() ? random_nonempty_subset(rng, e) : compatible;
  }
  return s;
}

RevisionTable random_basic_table(Rng& rng, UniversePtr universe) {
  const PointSet initial = random_nonempty_subset(rng, universe->all());
  return revision_from_selection(random_selection(rng, universe, initial));
}

CredibilityLabeling random_labeling(Rng& rng, UniversePtr universe) {
  const std::size_t count = std::size_t{1} << universe->size();
  std::vector<Credibility> labels(count);
  for (auto& l : labels) l = static_cast<Credibility>(uniform_below(rng, 3));
  labels[0] = Credibility::kRejected;
  labels[count - 1] = Credibility::kCredible;
  return CredibilityLabeling(std::move(universe), std::move(labels));
}

}  // namespace filtra
