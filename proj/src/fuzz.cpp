#include "filtra/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "filtra/enumerate.hpp"
#include "filtra/error.hpp"
#include "filtra/gcs.hpp"
#include "filtra/random.hpp"
#include "filtra/revision.hpp"

namespace filtra {

namespace {

UniversePtr fuzz_universe(std::size_t atoms) {
  if (atoms == 0 || atoms > kFuzzAtomLimit) {
    throw LimitError("fuzz atoms must be 1.." + std::to_string(kFuzzAtomLimit));
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= atoms; ++i) names.push_back("p" + std::to_string(i));
  return canonical_universe(AtomSet(names), kFuzzAtomLimit);
}

class Tally {
 public:
  Tally(std::string name, bool exhaustive) {
    r_.name = std::move(name);
    r_.mode = exhaustive ? "exhaustive" : "random";
  }

  void pass() { ++r_.cases; }
  void fail(const std::string& why) {
    if (r_.failures == 0) r_.first_failure = "case " + std::to_string(r_.cases) + ": " + why;
    ++r_.failures;
    ++r_.cases;
  }
  void record(bool ok, const std::string& why) { ok ? pass() : fail(why); }

  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

std::string first_failure_text(const CheckReport& c, const Universe& u) {
  const Verdict* v = c.first_failure();
  if (v == nullptr) return "no failing verdict";
  std::string out = v->id + " fails";
  for (const auto& w : v->witness) out += " " + format_points(w, u);
  return out;
}

void forward_case(Tally& t, const RevisionTable& star, const CredibilityLabeling& c) {
  try {
    const CheckReport report = check_filtered(build_filtered(star, c), c);
    t.record(report.passed(), first_failure_text(report, star.universe()));
  } catch (const Error& e) {
    t.fail(e.what());
  }
}

void backward_case(Tally& t, const RevisionTable& filtered, const CredibilityLabeling& c) {
  try {
    const bool filtered_ok = check_filtered(filtered, c).passed();
    const Recovery rec = recover_basic(filtered, c);
    if (filtered_ok != rec.ok()) {
      t.fail(std::string("check_filtered says ") + (filtered_ok ? "pass" : "fail") +
             " but recovery " + (rec.ok() ? "succeeded" : "failed"));
      return;
    }
    if (rec.ok()) {
      if (!check_agm(*rec.star, basic_postulates()).passed()) {
        t.fail("recovered table is not basic AGM");
        return;
      }
      if (!(build_filtered(*rec.star, c) == filtered)) {
        t.fail("rebuild differs from input");
        return;
      }
    }
    t.pass();
  } catch (const Error& e) {
    t.fail(e.what());
  }
}

}  // namespace

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

SuiteResult fuzz_agm_preorder(std::size_t atoms, std::optional<std::uint64_t> cases,
                              std::uint64_t seed) {
  const UniversePtr u = fuzz_universe(atoms);
  Tally t("agm-preorder", !cases);
  auto run = [&](const PlausibilityOrder& o) {
    const CheckReport report = check_agm(revision_from_preorder(u, o), all_postulates());
    t.record(report.passed(), first_failure_text(report, *u));
  };
  if (!cases) {
    for (const auto& o : enumerate_preorders(*u)) run(o);
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < *cases; ++i) run(random_preorder(rng, u->size()));
  }
  return t.result();
}

SuiteResult fuzz_prop1_forward(std::size_t atoms, std::optional<std::uint64_t> cases,
                               std::uint64_t seed) {
  const UniversePtr u = fuzz_universe(atoms);
  Tally t("prop1-forward", !cases);
  if (!cases) {
    std::vector<CredibilityLabeling> labelings;
    for_each_labeling(u, [&](const CredibilityLabeling& c) { labelings.push_back(c); });
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << u->size()); ++bits) {
      for_each_selection(u, PointSet(u->size(), bits), [&](const SelectionFunction& s) {
        const RevisionTable star = revision_from_selection(s);
        for (const auto& c : labelings) forward_case(t, star, c);
      });
    }
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < *cases; ++i) {
      const RevisionTable star = random_basic_table(rng, u);
      const CredibilityLabeling c = random_labeling(rng, u);
      forward_case(t, star, c);
    }
  }
  return t.result();
}

SuiteResult fuzz_prop1_backward(std::size_t atoms, std::optional<std::uint64_t> cases,
                                std::uint64_t seed) {
  const UniversePtr u = fuzz_universe(atoms);
  Tally t("prop1-backward", !cases);
  if (!cases) {
    std::vector<CredibilityLabeling> labelings;
    for_each_labeling(u, [&](const CredibilityLabeling& c) { labelings.push_back(c); });
    for_each_table(u, [&](const RevisionTable& table) {
      for (const auto& c : labelings) backward_case(t, table, c);
    });
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < *cases; ++i) {
      const RevisionTable star = random_basic_table(rng, u);
      const CredibilityLabeling c = random_labeling(rng, u);
      RevisionTable filtered = build_filtered(star, c);
      if (coin(rng)) {
        const PointSet e(u->size(), uniform_below(rng, filtered.proposition_count()));
        filtered = filtered.with_entry(e, random_subset(rng, u->size()));
      }
      backward_case(t, filtered, c);
    }
  }
  return t.result();
}

SuiteResult fuzz_prop2(std::size_t omega, std::optional<std::uint64_t> cases, std::uint64_t seed) {
  Tally t("prop2", !cases);
  auto run = [&](const Gcs& g) {
    const bool prop2 = check_prop2(g).passed();
    const ConsistencyVerdict v = agm_consistency_bruteforce(g);
    std::ostringstream why;
    why << "check_prop2 " << (prop2 ? "passes" : "fails") << ", brute force says "
        << (v.consistent ? "consistent" : "inconsistent");
    t.record(prop2 == v.consistent, why.str());
  };
  if (!cases) {
    for_each_gcs(omega, [&](const Gcs& g) {
      if (validate_gcs(g).passed()) run(g);
    });
  } else {
    if (omega == 0 || omega > kBruteforceOmegaLimit) {
      throw LimitError("prop2 fuzzing limited to 1.." + std::to_string(kBruteforceOmegaLimit) +
                       " states");
    }
    Rng rng(seed);
    for (std::uint64_t i = 0; i < *cases; ++i) run(random_gcs(rng, omega));
  }
  return t.result();
}

std::vector<SuiteResult> run_fuzz(const FuzzOptions& o) {
  fuzz_universe(o.atoms);
  if (!o.cases && o.atoms != 1) throw LimitError("exhaustive fuzzing needs --atoms 1");
  std::vector<SuiteResult> out;
  out.push_back(fuzz_agm_preorder(o.atoms, o.cases, suite_seed(o.seed, 0)));
  out.push_back(fuzz_prop1_forward(o.atoms, o.cases, suite_seed(o.seed, 1)));
  out.push_back(fuzz_prop1_backward(o.atoms, o.cases, suite_seed(o.seed, 2)));
  out.push_back(fuzz_prop2(o.cases ? std::min<std::size_t>(o.atoms + 2, kBruteforceOmegaLimit) : 2,
                           o.cases, suite_seed(o.seed, 3)));
  return out;
}

}  // namespace filtra
