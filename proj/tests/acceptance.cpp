// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "filtra/belief.hpp"
#include "filtra/cli.hpp"
#include "filtra/enumerate.hpp"
#include "filtra/fuzz.hpp"
#include "filtra/gcs.hpp"
#include "filtra/random.hpp"
#include "filtra/scenario.hpp"
#include "oracle.hpp"

using namespace filtra;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

template <class Fn>
void criterion(int id, const std::string& title, double limit_seconds, Fn fn) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << secs << "s";
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + "s budget)";
  }
  if (!o.ok) ++failures;
  std::cout << "AC" << id << " " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  [" << o.detail << "; "
            << time.str() << "]" << std::endl;
}

std::string suite_text(const SuiteResult& s) {
  std::string out = s.name + " " + s.mode + " " + std::to_string(s.cases) + " cases, " +
                    std::to_string(s.failures) + " failures";
  if (!s.first_failure.empty()) out += " (" + s.first_failure + ")";
  return out;
}

std::string run_cli_text(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  return out.str();
}

std::string read_file(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  criterion(1, "all 75 weak orders on two atoms satisfy AGM1-8", 1.0, [] {
    const auto u = canonical_universe(AtomSet{"p", "q"});
    std::size_t count = 0;
    std::size_t bad = 0;
    for (const auto& o : enumerate_preorders(*u)) {
      ++count;
      if (!check_agm(revision_from_preorder(u, o), all_postulates()).passed()) ++bad;
    }
    return Outcome{count == 75 && bad == 0, std::to_string(count) + " orders, " + std::to_string(bad) + " failing"};
  });

  criterion(2, "build_filtered output always passes check_filtered", 30.0, [] {
    const SuiteResult all = fuzz_prop1_forward(1, std::nullopt, 0);
    const SuiteResult random = fuzz_prop1_forward(2, 10000, suite_seed(2024, 1));
    return Outcome{all.passed() && random.passed() && all.cases > 0 && random.cases >= 10000,
                   suite_text(all) + "; " + suite_text(random)};
  });

  criterion(3, "every table passing check_filtered is recovered and rebuilt exactly", 0, [] {
    const auto u = canonical_universe(AtomSet{"p"});
    std::vector<CredibilityLabeling> labelings;
    for_each_labeling(u, [&](const CredibilityLabeling& c) { labelings.push_back(c); });
    std::size_t tables = 0;
    std::size_t filtered = 0;
    std::size_t bad = 0;
    for_each_table(u, [&](const RevisionTable& t) {
      for (const auto& c : labelings) {
        ++tables;
        const bool passes = check_filtered(t, c).passed();
        const Recovery rec = recover_basic(t, c);
        if (passes) {
          ++filtered;
          if (!rec.ok() || !check_agm(*rec.star, basic_postulates()).passed() ||
              !(build_filtered(*rec.star, c) == t)) {
            ++bad;
          }
        } else if (rec.ok()) {
          ++bad;
        }
      }
    });
    return Outcome{bad == 0 && filtered > 0,
                   std::to_string(tables) + " table/labeling pairs, " + std::to_string(filtered) +
                       " filtered, " + std::to_string(bad) + " mismatches"};
  });

  criterion(4, "check_prop2 agrees with brute-force consistency", 300.0, [] {
    std::size_t consistent = 0;
    std::size_t total = 0;
    std::size_t bad = 0;
    for_each_gcs(2, [&](const Gcs& g) {
      if (!validate_gcs(g).passed()) return;
      const bool c = agm_consistency_bruteforce(g).consistent;
      bad += (c != check_prop2(g).passed()) ? 1 : 0;
      consistent += c ? 1 : 0;
      ++total;
    });
    std::string detail = "|Omega|=2: " + std::to_string(total) + " valid structures, " +
                         std::to_string(consistent) + " consistent";
    bool ok = bad == 0;
    for (std::size_t n : {3, 4}) {
      const SuiteResult s = fuzz_prop2(n, 10000, suite_seed(7, n));
      ok = ok && s.passed() && s.cases >= 10000;
      detail += "; |Omega|=" + std::to_string(n) + ": " + suite_text(s);
    }
    return Outcome{ok, detail + "; " + std::to_string(bad) + " exhaustive mismatches"};
  });

  criterion(5, "expansion matches the deduction theorem on random triples", 0, [] {
    std::mt19937_64 rng(55);
    const std::vector<std::string> names{"p", "q", "r"};
    const auto u = canonical_universe(AtomSet{"p", "q", "r"});
    const auto rows = oracle::all_assignments(names);
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const BeliefSet k(u, PointSet(8, rng() & 0xFF));
      const Formula phi = oracle::random_formula(rng, names, rng() % 4);
      const Formula psi = oracle::random_formula(rng, names, rng() % 4);
      bool member = true;  // phi -> psi in K, read off the truth table
      for (std::size_t w : k.points().members()) member = member && oracle::eval(Formula::implication(phi, psi), rows[w]);
      if (contains(expand(k, phi), psi) != member) ++bad;
    }
    return Outcome{bad == 0, "10000 triples, " + std::to_string(bad) + " mismatches"};
  });

  criterion(6, "detective: ~ann believed, suspension on ann, clause 2 with E'={a}", 0, [] {
    int code = 0;
    const std::string report = run_cli_text({"demo", "detective"}, code);
    const Scenario s = parse_scenario(detective_scenario_json());
    const UniversePtr u = universe_of(s);
    const Gcs g = gcs_of(s, u);
    const Model m = build_model(g, u->atoms());
    const PartialRevision pr = induced_beliefs(m);
    const Formula ann = parse_formula("ann", u->atoms());
    const Formula not_ann = parse_formula("~ann", u->atoms());
    const auto after = pr.revise(ann);
    const Prop2Report p = check_prop2(g);
    const PointSet a = event_from_key("a", *u);
    const bool split = p.splits.size() == 1 && p.splits[0].event == a && p.splits[0].added == a;
    const bool ok = code == 0 && contains(pr.initial, not_ann) && after && !contains(*after, ann) &&
                    !contains(*after, not_ann) && p.passed() && split &&
                    report.find("clause 2 at E = {a}: E' = {a}") != std::string::npos;
    return Outcome{ok, "K = " + format_points(pr.initial.points(), *u) + ", revision by ann = " +
                           (after ? format_points(after->points(), *u) : std::string("undefined"))};
  });

  criterion(7, "rationalization round trip on 13 orders; cyclic choices give none", 0, [] {
    std::size_t orders = 0;
    std::size_t bad = 0;
    for_each_weak_order(3, [&](const PlausibilityOrder& o) {
      ++orders;
      Gcs g{bare_states(3), {}, {}, {PointSet(3, 0)}, {}};
      for (std::uint64_t e = 1; e < 8; ++e) {
        g.credible.emplace_back(3, e);
        g.choice.emplace(PointSet(3, e), o.most_plausible(PointSet(3, e)));
      }
      g.choice.emplace(PointSet(3, 0), o.most_plausible(PointSet(3, 7)));
      const auto found = find_rationalizing_preorder(g);
      if (!validate_gcs(g).passed() || !found) {
        ++bad;
        return;
      }
      for (const auto& e : g.credible) bad += found->most_plausible(e) == *g.f(e) ? 0 : 1;
    });
    Gcs cyc{bare_states(3), {}, {}, {PointSet(3, 0)}, {}};
    const std::pair<std::uint64_t, std::uint64_t> menus[] = {{0b011, 0b001}, {0b110, 0b010}, {0b101, 0b100}, {0b111, 0b001}};
    for (const auto& [e, f] : menus) {
      cyc.credible.emplace_back(3, e);
      cyc.choice.emplace(PointSet(3, e), PointSet(3, f));
    }
    cyc.choice.emplace(PointSet(3, 0), PointSet(3, 0b001));
    const bool none = validate_gcs(cyc).passed() && !find_rationalizing_preorder(cyc).has_value();
    return Outcome{orders == 13 && bad == 0 && none,
                   std::to_string(orders) + " orders, " + std::to_string(bad) + " mismatches, cycle " +
                       (none ? "none" : "rationalized")};
  });

  criterion(8, "parse(print(f)) == f for 1000 random ASTs per depth 0..5", 0, [] {
    std::mt19937_64 rng(8);
    const std::vector<std::string> names{"p", "q", "r", "s"};
    const AtomSet atoms{"p", "q", "r", "s"};
    std::size_t bad = 0;
    for (std::size_t depth = 0; depth <= 5; ++depth) {
      for (int i = 0; i < 1000; ++i) {
        const Formula f = oracle::random_formula(rng, names, depth, false);
        if (f.depth() != depth || !(parse_formula(print_formula(f), atoms) == f)) ++bad;
      }
    }
    return Outcome{bad == 0, "6000 formulas, " + std::to_string(bad) + " mismatches"};
  });

  criterion(9, "fixed-seed fuzz and demo reports are byte-identical", 0, [] {
    const std::vector<std::vector<std::string>> commands{
        {"fuzz", "--atoms", "1", "--cases", "all", "--seed", "0"},
        {"fuzz", "--atoms", "2", "--cases", "50", "--seed", "9"},
        {"demo", "detective"},
        {"--json", "demo", "detective"}};
    const std::vector<std::string> golden{"fuzz_atoms1_all.txt", "fuzz_atoms2_50_seed9.txt",
                                          "demo_detective.txt", ""};
    bool ok = true;
    for (std::size_t i = 0; i < commands.size(); ++i) {
      int c1 = 0;
      int c2 = 0;
      const std::string a = run_cli_text(commands[i], c1);
      const std::string b = run_cli_text(commands[i], c2);
      ok = ok && c1 == 0 && c2 == 0 && a == b && !a.empty();
      if (!golden[i].empty()) ok = ok && a == read_file(std::string(FILTRA_SOURCE_DIR) + "/tests/golden/" + golden[i]);
    }
    return Outcome{ok, std::to_string(commands.size()) + " commands run twice, compared with golden reports"};
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
