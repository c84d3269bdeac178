#ifndef FILTRA_REPORT_HPP
#define FILTRA_REPORT_HPP

#include <string>
#include <vector>

#include "filtra/point_set.hpp"

namespace filtra {

// Outcome of one named check (a postulate, a clause). On failure `witness`
// holds the offending propositions in the order the check names them, for
// instance {E} for AGM2 or {E, F} for AGM7.
struct Verdict {
  std::string id;
  bool holds = true;
  std::vector<PointSet> witness;
  std::string note;
};

struct CheckReport {
  std::vector<Verdict> verdicts;

  bool passed() const;
  const Verdict* find(const std::string& id) const;
  // First failing verdict, or nullptr.
  const Verdict* first_failure() const;
  // Appends the verdicts of `other`; the merged verdict list keeps its order.
  void merge(const CheckReport& other);
};

}  // namespace filtra

#endif  // FILTRA_REPORT_HPP
