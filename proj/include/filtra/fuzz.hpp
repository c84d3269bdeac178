#ifndef FILTRA_FUZZ_HPP
#define FILTRA_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace filtra {

// Tables over 2^3 points already take 65536 pair checks for AGM7/8.
inline constexpr std::size_t kFuzzAtomLimit = 3;

struct SuiteResult {
  std::string name;
  std::string mode;  // "exhaustive" or "random"
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

// `cases` empty means exhaustive, which each suite supports only at small
// sizes (LimitError otherwise).

// Tables from plausibility orders over the canonical universe satisfy AGM1-8.
SuiteResult fuzz_agm_preorder(std::size_t atoms, std::optional<std::uint64_t> cases, std::uint64_t seed);

// build_filtered on a basic AGM table and any labeling passes check_filtered.
SuiteResult fuzz_prop1_forward(std::size_t atoms, std::optional<std::uint64_t> cases,
                               std::uint64_t seed);

// check_filtered passes exactly when recover_basic succeeds, and the
// recovered table rebuilds the input. Random mode mutates half the tables.
SuiteResult fuzz_prop1_backward(std::size_t atoms, std::optional<std::uint64_t> cases,
                                std::uint64_t seed);

// check_prop2 agrees with the brute-force consistency check on GCS over
// `omega` bare states.
SuiteResult fuzz_prop2(std::size_t omega, std::optional<std::uint64_t> cases, std::uint64_t seed);

struct FuzzOptions {
  std::size_t atoms = 1;
  std::optional<std::uint64_t> cases;
  std::uint64_t seed = 0;
};

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index);

// All four suites. The prop2 suite runs on atoms+2 states (at most 4), or
// exhaustively on 2 states.
std::vector<SuiteResult> run_fuzz(const FuzzOptions& options);

}  // namespace filtra

#endif  // FILTRA_FUZZ_HPP
