#include "filtra/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "filtra/belief.hpp"
#include "filtra/formula.hpp"
#include "filtra/fuzz.hpp"
#include "filtra/gcs.hpp"
#include "filtra/render.hpp"
#include "filtra/scenario.hpp"

namespace filtra {

namespace {

// Wrong input rather than a failed check; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  Scenario scenario;
  UniversePtr universe;
};

Loaded load(const std::string& path) {
  Scenario s = load_scenario(path);
  UniversePtr u = universe_of(s);
  return {std::move(s), std::move(u)};
}

Gcs require_gcs(const Loaded& l) {
  if (!l.scenario.gcs) throw UsageError("scenario has no gcs section");
  return gcs_of(l.scenario, l.universe);
}

std::string points_and_formula(const PointSet& s, const Universe& u) {
  const WitnessText w = describe(s, u);
  return w.formula.empty() ? w.points : w.points + "  ~  " + w.formula;
}

// Validation failures stop the GCS commands with exit 1.
bool gcs_is_valid(Report& r, const Gcs& g) {
  const CheckReport v = validate_gcs(g);
  if (v.passed()) return true;
  add_checks(r, v, *g.universe, "gcs.", {"E"});
  return false;
}

void add_prop2(Report& r, const Gcs& g) {
  const Prop2Report p = check_prop2(g);
  add_checks(r, p.clauses, *g.universe, "", {"E"});
  for (const auto& split : p.splits) {
    add_fact(r, "clause 2 at E = " + format_points(split.event, *g.universe),
             "E' = " + points_and_formula(split.added, *g.universe));
  }
}

void add_consistency(Report& r, const Gcs& g, std::optional<std::size_t> atoms) {
  const ConsistencyVerdict v = agm_consistency_bruteforce(g, atoms);
  std::ostringstream note;
  note << v.models_checked << " valuations over " << v.atoms << " atoms";
  ReportCheck c{"def6", v.consistent, note.str(), {}};
  if (!v.consistent) {
    if (v.infeasible_event) c.witnesses.push_back(describe(*v.infeasible_event, *g.universe, "E"));
    const Model& m = *v.counter_model;
    std::string valuation;
    for (std::size_t i = 0; i < m.omega().size(); ++i) {
      if (i > 0) valuation += ", ";
      const Point& p = m.omega().point(i);
      valuation += p.id + "=";
      std::string truths;
      for (std::size_t a = 0; a < m.omega().atoms().size(); ++a) {
        if (p.holds(a)) truths += (truths.empty() ? "" : "&") + m.omega().atoms().name(a);
      }
      valuation += truths.empty() ? "-" : truths;
    }
    add_fact(r, "counter-model", valuation);
    if (v.infeasible_proposition) {
      add_fact(r, "infeasible proposition",
               points_and_formula(*v.infeasible_proposition, *m.canonical));
    }
  }
  add_check(r, std::move(c));
}

// The scenario's own valuation, when it has atoms.
void add_scenario_model(Report& r, const Gcs& g) {
  const AtomSet& atoms = g.universe->atoms();
  if (atoms.empty() || atoms.size() > kDefaultAtomLimit) return;
  const Model m = build_model(g, atoms);
  const ExtensionResult x = extension_oracle(m, std::max(kOracleOmegaLimit, g.universe->size()));
  ReportCheck c{"scenario-model", x.ok(), "extension for the file's own valuation", {}};
  if (!x.ok()) {
    if (x.infeasible_event) c.witnesses.push_back(describe(*x.infeasible_event, *g.universe, "E"));
    add_check(r, std::move(c));
    return;
  }
  add_check(r, std::move(c));
  add_checks(r, verify_certificate(m, *x.certificate), *m.canonical, "certificate.", {"P"});
}

RevisionTable star_table(const Loaded& l) {
  if (l.scenario.table) return table_of(l.scenario, l.universe);
  if (l.scenario.preorder) return revision_from_preorder(l.universe, preorder_of(l.scenario, *l.universe));
  throw UsageError("scenario has neither a table nor a preorder");
}

int finish(const Report& r, bool json, std::ostream& out) {
  out << (json ? render_json(r) : render_text(r));
  return r.passed ? kExitPass : kExitCheckFailed;
}

Report cmd_validate(const std::string& file) {
  const Loaded l = load(file);
  Report r{"validate " + file, true, {}, {}, {}};
  add_fact(r, "atoms", std::to_string(l.universe->atoms().size()));
  add_fact(r, "states", std::to_string(l.universe->size()));
  if (l.scenario.gcs) {
    add_checks(r, validate_gcs(require_gcs(l)), *l.universe, "gcs.", {"E"});
  }
  if (l.scenario.preorder) {
    const PlausibilityOrder o = preorder_of(l.scenario, *l.universe);
    std::string levels;
    for (const auto& level : o.ordered_partition()) {
      levels += (levels.empty() ? "" : " < ") + format_points(level, *l.universe);
    }
    add_fact(r, "preorder", levels);
  }
  if (l.scenario.table) {
    const RevisionTable t = table_of(l.scenario, l.universe);
    labeling_of(l.scenario, l.universe);
    add_fact(r, "table entries", std::to_string(t.proposition_count()));
    add_check(r, {"table.initial", !t.initial().empty(), "initial beliefs are consistent", {}});
  }
  return r;
}

Report cmd_prop2(const std::string& file) {
  const Loaded l = load(file);
  const Gcs g = require_gcs(l);
  Report r{"check prop2 " + file, true, {}, {}, {}};
  if (gcs_is_valid(r, g)) add_prop2(r, g);
  return r;
}

Report cmd_agm(const std::string& file, const std::string& postulates) {
  const Loaded l = load(file);
  const PostulateSet which = [&] {
    try {
      return parse_postulates(postulates);
    } catch (const InvariantError& e) {
      throw UsageError(std::string("--postulates: ") + e.what());
    }
  }();
  Report r{"check agm " + file, true, {}, {}, {}};
  add_checks(r, check_agm(star_table(l), which), *l.universe);
  return r;
}

Report cmd_filtered(const std::string& file) {
  const Loaded l = load(file);
  const RevisionTable t = table_of(l.scenario, l.universe);
  if (t.initial().empty()) throw UsageError("initial beliefs are inconsistent");
  Report r{"check filtered " + file, true, {}, {}, {}};
  add_checks(r, check_filtered(t, labeling_of(l.scenario, l.universe)), *l.universe);
  return r;
}

Report cmd_build(const std::string& file, const std::string& output) {
  const Loaded l = load(file);
  const RevisionTable star = star_table(l);
  const CredibilityLabeling c = labeling_of(l.scenario, l.universe);
  Report r{"build filtered " + file, true, {}, {}, {}};
  const CheckReport basic = check_agm(star, basic_postulates());
  if (!basic.passed()) {
    add_checks(r, basic, *l.universe, "star.");
    return r;
  }
  if (star.initial().empty()) throw UsageError("initial beliefs are inconsistent");
  const RevisionTable filtered = build_filtered(star, c);
  add_checks(r, check_filtered(filtered, c), *l.universe);
  Scenario out = scenario_from_table(filtered, &c, l.scenario.comments);
  out.gcs = l.scenario.gcs;
  out.preorder = l.scenario.preorder;
  save_scenario(out, output);
  add_fact(r, "written", output);
  return r;
}

Report cmd_def6(const std::string& file, std::optional<std::size_t> atoms) {
  const Loaded l = load(file);
  const Gcs g = require_gcs(l);
  Report r{"oracle def6 " + file, true, {}, {}, {}};
  if (!gcs_is_valid(r, g)) return r;
  add_consistency(r, g, atoms);
  add_fact(r, "check_prop2", check_prop2(g).passed() ? "pass" : "fail");
  add_scenario_model(r, g);
  return r;
}

Report cmd_rationalize(const std::string& file) {
  const Loaded l = load(file);
  const Gcs g = require_gcs(l);
  Report r{"rationalize " + file, true, {}, {}, {}};
  if (!gcs_is_valid(r, g)) return r;
  const auto order = find_rationalizing_preorder(g);
  if (!order) {
    add_check(r, {"rationalized", false, "no total preorder reproduces f on the credible events", {}});
    add_fact(r, "order", "none");
    return r;
  }
  add_check(r, {"rationalized", true, "most plausible states reproduce f on the credible events", {}});
  r.table.push_back({"state", "rank"});
  for (std::size_t i = 0; i < l.universe->size(); ++i) {
    r.table.push_back({l.universe->point(i).id, std::to_string(order->rank(i))});
  }
  return r;
}

Report cmd_fuzz(std::size_t atoms, const std::string& cases_text, std::uint64_t seed) {
  FuzzOptions o{atoms, std::nullopt, seed};
  if (cases_text != "all") {
    try {
      std::size_t used = 0;
      o.cases = std::stoull(cases_text, &used);
      if (used != cases_text.size()) throw std::invalid_argument(cases_text);
    } catch (const std::exception&) {
      throw UsageError("--cases must be a number or 'all'");
    }
  }
  Report r{"fuzz", true, {}, {}, {}};
  add_fact(r, "atoms", std::to_string(atoms));
  add_fact(r, "cases", cases_text);
  add_fact(r, "seed", std::to_string(seed));
  r.table.push_back({"suite", "mode", "cases", "failures"});
  for (const SuiteResult& s : run_fuzz(o)) {
    add_check(r, {s.name, s.passed(), s.first_failure, {}});
    r.table.push_back({s.name, s.mode, std::to_string(s.cases), std::to_string(s.failures)});
  }
  return r;
}

Report cmd_detective() {
  const Scenario s = parse_scenario(detective_scenario_json());
  const UniversePtr u = universe_of(s);
  const Gcs g = gcs_of(s, u);
  Report r{"demo detective", true, {}, {}, {}};
  if (!gcs_is_valid(r, g)) return r;
  add_check(r, {"gcs.valid", true, "all structural clauses hold", {}});
  add_prop2(r, g);

  const Model m = build_model(g, u->atoms());
  const PartialRevision pr = induced_beliefs(m);
  const Formula ann = parse_formula("ann", u->atoms());
  const Formula not_ann = parse_formula("~ann", u->atoms());
  add_fact(r, "K", points_and_formula(pr.initial.points(), *u));
  add_check(r, {"K contains ~ann", contains(pr.initial, not_ann), "Ann starts out cleared", {}});
  add_fact(r, "label of ann", std::string(1, to_char(m.labeling.label(truth_set(ann, *m.canonical)))));
  const auto after = pr.revise(ann);
  ReportCheck suspend{"suspends judgment on ann", false,
                      "the revision by ann contains neither ann nor ~ann", {}};
  if (after) {
    add_fact(r, "revision by ann", points_and_formula(after->points(), *u));
    suspend.holds = !contains(*after, ann) && !contains(*after, not_ann);
  }
  add_check(r, std::move(suspend));

  add_consistency(r, g, std::nullopt);
  add_scenario_model(r, g);

  const PlausibilityOrder order = preorder_of(s, *u);
  const RevisionTable star = revision_from_preorder(u, order);
  const CredibilityLabeling labels = labeling_of(s, u);
  const RevisionTable filtered = build_filtered(star, labels);
  const PointSet a = event_from_key("a", *u);
  add_fact(r, "preorder star entry for {a}", points_and_formula(star.entry(a), *u));
  add_fact(r, "filtered entry for {a}", points_and_formula(filtered.entry(a), *u));
  const CheckReport f = check_filtered(filtered, labels);
  add_check(r, {"filtered", f.passed(), "filtered table from the preorder passes F1-F4", {}});
  const auto rational = find_rationalizing_preorder(g);
  add_check(r, {"rationalized", rational.has_value(), "credible choices come from a preorder", {}});
  return r;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("FILTRA_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const std::uint64_t v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("FILTRA_SEED must be an unsigned integer");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filtered belief revision checker", "filtra"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string file;
  std::string postulates = "1-8";
  std::string output;
  std::optional<std::size_t> atoms;
  std::size_t fuzz_atoms = 1;
  std::string cases = "1000";
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "Run a checker")->require_subcommand(1);
  auto* prop2 = check->add_subcommand("prop2", "Characterization of consistent choice structures");
  prop2->add_option("file", file)->required();
  auto* agm = check->add_subcommand("agm", "AGM postulates on the table (or preorder)");
  agm->add_option("file", file)->required();
  agm->add_option("--postulates", postulates, "e.g. 1-8 or 1,3,7");
  auto* filtered = check->add_subcommand("filtered", "Filtered revision properties of the table");
  filtered->add_option("file", file)->required();

  auto* build = app.add_subcommand("build", "Build a table")->require_subcommand(1);
  auto* build_f = build->add_subcommand("filtered", "Filtered table from the basic AGM table");
  build_f->add_option("file", file)->required();
  build_f->add_option("-o,--output", output)->required();

  auto* oracle = app.add_subcommand("oracle", "Consistency oracles")->require_subcommand(1);
  auto* def6 = oracle->add_subcommand("def6", "Brute-force basic AGM consistency");
  def6->add_option("file", file)->required();
  def6->add_option("--atoms", atoms, "Atom budget for the valuations");

  auto* rationalize = app.add_subcommand("rationalize", "Find a preorder behind the credible choices");
  rationalize->add_option("file", file)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Seeded round-trip suites");
  fuzz->add_option("--atoms", fuzz_atoms, "Atoms of the canonical universe");
  fuzz->add_option("--cases", cases, "Cases per suite, or 'all' for exhaustive");
  fuzz->add_option("--seed", seed, "Seed (FILTRA_SEED overrides)");

  auto* demo = app.add_subcommand("demo", "Bundled demonstrations")->require_subcommand(1);
  auto* detective = demo->add_subcommand("detective", "The detective scenario");

  std::vector<std::string> argv_store{"filtra"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Report r;
    if (validate->parsed()) {
      r = cmd_validate(file);
    } else if (prop2->parsed()) {
      r = cmd_prop2(file);
    } else if (agm->parsed()) {
      r = cmd_agm(file, postulates);
    } else if (filtered->parsed()) {
      r = cmd_filtered(file);
    } else if (build_f->parsed()) {
      r = cmd_build(file, output);
    } else if (def6->parsed()) {
      r = cmd_def6(file, atoms);
    } else if (rationalize->parsed()) {
      r = cmd_rationalize(file);
    } else if (fuzz->parsed()) {
      r = cmd_fuzz(fuzz_atoms, cases, seed_from_env(seed));
    } else if (detective->parsed()) {
      r = cmd_detective();
    }
    return finish(r, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace filtra
