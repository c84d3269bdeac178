#include <algorithm>

#include "filtra/gcs.hpp"

namespace filtra {

ExtensionResult extension_oracle(const Model& m, std::size_t omega_limit) {
  if (m.omega().size() > omega_limit) {
    throw LimitError("extension oracle limited to " + std::to_string(omega_limit) + " states");
  }
  const std::size_t n = m.canonical->size();
  const std::size_t count = std::size_t{1} << n;
  const PointSet k = m.valuations_of(m.gcs.f_omega());

  ExtensionResult out;
  std::vector<PointSet> star(count, PointSet(n));
  for (std::size_t bits = 0; bits < count; ++bits) {
    const PointSet p(n, bits);
    const PointSet* fe = m.gcs.f(m.image[bits]);
    if (fe == nullptr) {
      // Outside the informative set any admissible selection will do.
      if (!p.empty()) star[bits] = p.intersects(k) ? (p & k) : p;
      continue;
    }
    const PointSet required = m.valuations_of(*fe);
    const Credibility label = m.labeling.label(p);
    const bool feasible = [&] {
      if (p.empty()) return label == Credibility::kRejected && required == k;
      auto chosen = choose_selection(p, k, label, required);
      if (chosen) star[bits] = *chosen;
      return chosen.has_value();
    }();
    if (!feasible) {
      out.infeasible_proposition = p;
      out.infeasible_event = m.image[bits];
      return out;
    }
  }
  RevisionTable star_table(m.canonical, k, std::move(star));
  RevisionTable filtered = build_filtered(star_table, m.labeling);
  out.certificate = ExtensionCertificate{std::move(star_table), std::move(filtered)};
  return out;
}

CheckReport verify_certificate(const Model& m, const ExtensionCertificate& c) {
  CheckReport report;
  const PointSet k = m.valuations_of(m.gcs.f_omega());
  report.verdicts.push_back({"initial", c.star.initial() == k && c.filtered.initial() == k, {},
                             "both tables start from the induced initial beliefs"});

  const CheckReport basic = check_agm(c.star, basic_postulates());
  Verdict agm{"basic-agm", basic.passed(), {}, "star satisfies AGM1-AGM6"};
  if (const Verdict* v = basic.first_failure()) {
    agm.witness = v->witness;
    agm.note = v->id + " fails";
  }
  report.verdicts.push_back(agm);

  Verdict rebuild{"rebuild", false, {}, "filtered table equals build_filtered(star)"};
  try {
    rebuild.holds = build_filtered(c.star, m.labeling) == c.filtered;
  } catch (const Error& e) {
    rebuild.note = e.what();
  }
  report.verdicts.push_back(rebuild);

  Verdict extends{"extends", true, {}, "filtered table agrees with f on every informative formula"};
  for (const PointSet& p : m.information()) {
    if (c.filtered.entry(p) != m.valuations_of(*m.gcs.f(m.image_of(p)))) {
      extends.holds = false;
      extends.witness = {p};
      break;
    }
  }
  report.verdicts.push_back(extends);
  return report;
}

std::size_t default_atom_budget(std::size_t omega_size) {
  std::size_t atoms = 1;
  while ((std::size_t{1} << atoms) < omega_size) ++atoms;
  return atoms;
}

ConsistencyVerdict agm_consistency_bruteforce(const Gcs& g, std::optional<std::size_t> atoms,
                                              std::size_t omega_limit) {
  const std::size_t n = g.universe->size();
  if (n > omega_limit) {
    throw LimitError("brute-force consistency check limited to " + std::to_string(omega_limit) +
                     " states");
  }
  const std::size_t k = atoms.value_or(default_atom_budget(n));
  if (k == 0 || k > kDefaultAtomLimit) {
    throw LimitError("atom budget must be 1.." + std::to_string(kDefaultAtomLimit));
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("p" + std::to_string(i));
  const AtomSet atom_set(names);

  ConsistencyVerdict verdict;
  verdict.atoms = k;
  // V(p1) <= V(p2) <= ... as subset bitmasks: one valuation per atom renaming class.
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint64_t> extension(k, 0);
  while (true) {
    std::vector<Point> points;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t a = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if ((extension[j] >> i) & 1U) a |= std::uint64_t{1} << j;
      }
      points.push_back({g.universe->point(i).id, a});
    }
    Gcs valued = g;
    valued.universe = std::make_shared<const Universe>(atom_set, std::move(points));
    Model model = build_model(valued, atom_set);
    ++verdict.models_checked;
    ExtensionResult result = extension_oracle(model, omega_limit);
    if (!result.ok()) {
      verdict.consistent = false;
      verdict.infeasible_proposition = result.infeasible_proposition;
      verdict.infeasible_event = result.infeasible_event;
      verdict.counter_model = std::move(model);
      return verdict;
    }

    std::size_t j = k;
    while (j > 0 && extension[j - 1] == subsets - 1) --j;
    if (j == 0) break;
    const std::uint64_t next = extension[j - 1] + 1;
    for (std::size_t t = j - 1; t < k; ++t) extension[t] = next;
  }
  return verdict;
}

UniversePtr bare_states(std::size_t n) {
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back({"s" + std::to_string(i), 0});
  return std::make_shared<const Universe>(AtomSet{}, std::move(points));
}

void for_each_gcs(std::size_t n, const std::function<void(const Gcs&)>& visit) {
  if (n == 0 || n > 2) throw LimitError("exhaustive GCS enumeration limited to 1..2 states");
  const UniversePtr u = bare_states(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t full = subsets - 1;
  // Nonempty proper subsets each take a class code in {none, C, A, R}.
  std::vector<std::uint64_t> middle;
  for (std::uint64_t b = 1; b < full; ++b) middle.push_back(b);
  std::uint64_t family_codes = 1;
  for (std::size_t i = 0; i < middle.size(); ++i) family_codes *= 4;

  for (std::uint64_t code = 0; code < family_codes; ++code) {
    Gcs g{u, {PointSet(n, full)}, {}, {PointSet(n, 0)}, {}};
    std::uint64_t rest = code;
    for (std::uint64_t b : middle) {
      switch (rest % 4) {
        case 1: g.credible.emplace_back(n, b); break;
        case 2: g.allowable.emplace_back(n, b); break;
        case 3: g.rejected.emplace_back(n, b); break;
        default: break;
      }
      rest /= 4;
    }
    const auto events = g.events();
    std::vector<std::uint64_t> values(events.size(), 0);
    while (true) {
      g.choice.clear();
      for (std::size_t i = 0; i < events.size(); ++i) g.choice.emplace(events[i], PointSet(n, values[i]));
      visit(g);
      std::size_t i = 0;
      while (i < values.size() && values[i] == full) values[i++] = 0;
      if (i == values.size()) break;
      ++values[i];
    }
  }
}

Gcs random_gcs(Rng& rng, std::size_t n) {
  const UniversePtr u = bare_states(n);
  const PointSet omega = u->all();
  Gcs g{u, {omega}, {}, {u->none()}, {}};
  for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << n); ++b) {
    switch (uniform_below(rng, 4)) {
      case 1: g.credible.emplace_back(n, b); break;
      case 2: g.allowable.emplace_back(n, b); break;
      case 3: g.rejected.emplace_back(n, b); break;
      default: break;
    }
  }
  const PointSet k = random_nonempty_subset(rng, omega);
  const std::uint64_t mode = uniform_below(rng, 3);
  const auto events = g.events();
  const std::size_t broken = static_cast<std::size_t>(uniform_below(rng, events.size()));

  for (std::size_t i = 0; i < events.size(); ++i) {
    const PointSet& e = events[i];
    const bool conform = mode == 0 || (mode == 1 && i != broken);
    PointSet v = k;
    switch (*g.class_of(e)) {
      case Credibility::kRejected: v = k; break;
      case Credibility::kCredible:
        if (e == omega) {
          v = k;
        } else if (conform && e.intersects(k)) {
          v = e & k;
        } else {
          v = random_nonempty_subset(rng, e);
        }
        break;
      case Credibility::kAllowable:
        if (conform) {
          v = e.intersects(k) ? k : (k | random_nonempty_subset(rng, e));
        } else {
          v = random_nonempty_subset(rng, e) | random_subset(rng, n);
        }
        break;
    }
    g.choice.emplace(e, v);
  }
  return g;
}

}  // namespace filtra
