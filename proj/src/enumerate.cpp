#include "filtra/enumerate.hpp"

#include <vector>

namespace filtra {

namespace {

// Odometer over per-slot option lists.
template <typename T, typename Fn>
void for_each_product(const std::vector<std::vector<T>>& options, Fn&& visit) {
  std::vector<std::size_t> digit(options.size(), 0);
  for (const auto& o : options) {
    if (o.empty()) return;
  }
  while (true) {
    visit(digit);
    std::size_t i = 0;
    while (i < digit.size() && digit[i] + 1 == options[i].size()) digit[i++] = 0;
    if (i == digit.size()) return;
    ++digit[i];
  }
}

std::size_t checked_count(const Universe& u, std::size_t max_points) {
  if (u.size() > max_points) throw LimitError("universe too large for exhaustive enumeration");
  return std::size_t{1} << u.size();
}

}  // namespace

void for_each_selection(const UniversePtr& u, const PointSet& initial,
                        const std::function<void(const SelectionFunction&)>& visit) {
  const std::size_t count = checked_count(*u, 4);
  const std::size_t n = u->size();
  std::vector<std::vector<PointSet>> options(count);
  options[0] = {PointSet(n)};
  for (std::size_t bits = 1; bits < count; ++bits) {
    const PointSet e(n, bits);
    if (e.intersects(initial)) {
      options[bits] = {e & initial};
      continue;
    }
    for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) options[bits].emplace_back(n, sub);
  }
  SelectionFunction s{u, initial, std::vector<PointSet>(count, PointSet(n))};
  for_each_product(options, [&](const std::vector<std::size_t>& digit) {
    for (std::size_t i = 0; i < count; ++i) s.choice[i] = options[i][digit[i]];
    visit(s);
  });
}

void for_each_labeling(const UniversePtr& u,
                       const std::function<void(const CredibilityLabeling&)>& visit) {
  const std::size_t count = checked_count(*u, 3);
  std::vector<std::vector<Credibility>> options(
      count, {Credibility::kCredible, Credibility::kAllowable, Credibility::kRejected});
  options[0] = {Credibility::kRejected};
  options[count - 1] = {Credibility::kCredible};
  std::vector<Credibility> labels(count);
  for_each_product(options, [&](const std::vector<std::size_t>& digit) {
    for (std::size_t i = 0; i < count; ++i) labels[i] = options[i][digit[i]];
    visit(CredibilityLabeling(u, labels));
  });
}

void for_each_table(const UniversePtr& u, const std::function<void(const RevisionTable&)>& visit) {
  const std::size_t count = checked_count(*u, 2);
  const std::size_t n = u->size();
  std::vector<PointSet> all;
  for (std::size_t bits = 0; bits < count; ++bits) all.emplace_back(n, bits);
  std::vector<std::vector<PointSet>> options(count + 1, all);
  options[count].erase(options[count].begin());  // initial models are nonempty
  std::vector<PointSet> entries(count, PointSet(n));
  for_each_product(options, [&](const std::vector<std::size_t>& digit) {
    for (std::size_t i = 0; i < count; ++i) entries[i] = options[i][digit[i]];
    visit(RevisionTable(u, options[count][digit[count]], entries));
  });
}

}  // namespace filtra
