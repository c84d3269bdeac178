#include "filtra/report.hpp"

#include <algorithm>

namespace filtra {

bool CheckReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

const Verdict* CheckReport::find(const std::string& id) const {
  for (const auto& v : verdicts) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Verdict* CheckReport::first_failure() const {
  for (const auto& v : verdicts) {
    if (!v.holds) return &v;
  }
  return nullptr;
}

void CheckReport::merge(const CheckReport& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

}  // namespace filtra
