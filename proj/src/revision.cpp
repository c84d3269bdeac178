#include "filtra/revision.hpp"

#include <cctype>
#include <sstream>

namespace filtra {

namespace {

std::size_t proposition_count_for(const Universe& u) {
  if (u.size() > kMaxTablePoints) {
    throw LimitError("revision tables are limited to " + std::to_string(kMaxTablePoints) +
                     " points");
  }
  return std::size_t{1} << u.size();
}

PointSet prop(std::size_t n, std::size_t bits) { return PointSet(n, bits); }

Verdict holds(std::string id, std::string note = {}) {
  return Verdict{std::move(id), true, {}, std::move(note)};
}

Verdict fails(std::string id, std::vector<PointSet> witness, std::string note) {
  return Verdict{std::move(id), false, std::move(witness), std::move(note)};
}

}  // namespace

// ---------------------------------------------------------------------------
// RevisionTable

RevisionTable::RevisionTable(UniversePtr universe, PointSet initial, std::vector<PointSet> entries)
    : universe_(std::move(universe)), initial_(initial), entries_(std::move(entries)) {
  if (!universe_) throw InvariantError("revision table needs a universe");
  const std::size_t count = proposition_count_for(*universe_);
  if (entries_.size() != count) {
    throw InvariantError("revision table must have an entry for each of the " +
                         std::to_string(count) + " propositions");
  }
  const std::size_t n = universe_->size();
  if (initial_.universe_size() != n) throw UniverseMismatch("initial beliefs over another universe");
  for (const auto& e : entries_) {
    if (e.universe_size() != n) throw UniverseMismatch("table entry over another universe");
  }
}

const PointSet& RevisionTable::entry(const PointSet& e) const {
  if (e.universe_size() != universe_->size()) {
    throw UniverseMismatch("proposition over another universe");
  }
  return entries_[e.bits()];
}

RevisionTable RevisionTable::with_entry(const PointSet& e, const PointSet& value) const {
  RevisionTable copy = *this;
  if (e.universe_size() != universe_->size() || value.universe_size() != universe_->size()) {
    throw UniverseMismatch("proposition over another universe");
  }
  copy.entries_[e.bits()] = value;
  return copy;
}

// ---------------------------------------------------------------------------
// Credibility

char to_char(Credibility c) {
  switch (c) {
    case Credibility::kCredible: return 'C';
    case Credibility::kAllowable: return 'A';
    case Credibility::kRejected: return 'R';
  }
  return '?';
}

std::optional<Credibility> credibility_from_char(char c) {
  switch (c) {
    case 'C': return Credibility::kCredible;
    case 'A': return Credibility::kAllowable;
    case 'R': return Credibility::kRejected;
    default: return std::nullopt;
  }
}

CredibilityLabeling::CredibilityLabeling(UniversePtr universe, std::vector<Credibility> labels)
    : universe_(std::move(universe)), labels_(std::move(labels)) {
  if (!universe_) throw InvariantError("labeling needs a universe");
  const std::size_t count = proposition_count_for(*universe_);
  if (labels_.size() != count) throw InvariantError("labeling must cover every proposition");
  const std::size_t n = universe_->size();
  if (labels_[PointSet::full_mask(n)] != Credibility::kCredible) {
    throw InvariantError("the tautology class must be credible");
  }
  if (labels_[0] != Credibility::kRejected) {
    throw InvariantError("the contradiction class must be rejected");
  }
}

CredibilityLabeling CredibilityLabeling::uniform(UniversePtr universe, Credibility rest) {
  const std::size_t count = proposition_count_for(*universe);
  std::vector<Credibility> labels(count, rest);
  labels[0] = Credibility::kRejected;
  labels[count - 1] = Credibility::kCredible;
  return CredibilityLabeling(std::move(universe), std::move(labels));
}

Credibility CredibilityLabeling::label(const PointSet& e) const {
  if (e.universe_size() != universe_->size()) {
    throw UniverseMismatch("proposition over another universe");
  }
  return labels_[e.bits()];
}

CredibilityLabeling CredibilityLabeling::with_label(const PointSet& e, Credibility c) const {
  std::vector<Credibility> labels = labels_;
  labels.at(e.bits()) = c;
  return CredibilityLabeling(universe_, std::move(labels));
}

// ---------------------------------------------------------------------------
// Constructors

void validate_selection(const SelectionFunction& s) {
  if (!s.universe) throw InvariantError("selection function needs a universe");
  const std::size_t count = proposition_count_for(*s.universe);
  const std::size_t n = s.universe->size();
  if (s.choice.size() != count) throw InvariantError("selection must cover every proposition");
  if (s.initial.universe_size() != n) throw UniverseMismatch("initial beliefs over another universe");
  if (s.initial.empty()) throw InvariantError("initial beliefs must be consistent");
  for (std::size_t bits = 1; bits < count; ++bits) {
    const PointSet e = prop(n, bits);
    const PointSet& chosen = s.choice[bits];
    const std::string where = " for E=" + format_points(e, *s.universe);
    if (chosen.universe_size() != n) throw UniverseMismatch("selection value over another universe" + where);
    if (chosen.empty()) throw InvariantError("S(E) is empty" + where);
    if (!chosen.subset_of(e)) throw InvariantError("S(E) is not a subset of E" + where);
    const PointSet compatible = e & s.initial;
    if (!compatible.empty() && chosen != compatible) {
      throw InvariantError("S(E) must equal E n K when E is compatible with K" + where);
    }
  }
}

SelectionFunction selection_from_preorder(UniversePtr universe, const PlausibilityOrder& o) {
  const std::size_t count = proposition_count_for(*universe);
  const std::size_t n = universe->size();
  if (o.size() != n) throw UniverseMismatch("order over another universe");
  SelectionFunction s{universe, o.most_plausible(universe->all()), {}};
  s.choice.assign(count, PointSet(n));
  for (std::size_t bits = 1; bits < count; ++bits) s.choice[bits] = o.most_plausible(prop(n, bits));
  return s;
}

RevisionTable revision_from_preorder(UniversePtr universe, const PlausibilityOrder& o) {
  const std::size_t count = proposition_count_for(*universe);
  const std::size_t n = universe->size();
  if (o.size() != n) throw UniverseMismatch("order over another universe");
  std::vector<PointSet> entries(count, PointSet(n));
  for (std::size_t bits = 1; bits < count; ++bits) entries[bits] = o.most_plausible(prop(n, bits));
  const PointSet initial = o.most_plausible(universe->all());
  return RevisionTable(std::move(universe), initial, std::move(entries));
}

RevisionTable revision_from_selection(const SelectionFunction& s) {
  validate_selection(s);
  std::vector<PointSet> entries = s.choice;
  entries[0] = s.universe->none();
  return RevisionTable(s.universe, s.initial, std::move(entries));
}

// ---------------------------------------------------------------------------
// Postulates

PostulateSet basic_postulates() {
  PostulateSet out;
  for (std::size_t k = 1; k <= 6; ++k) out.set(k);
  return out;
}

PostulateSet all_postulates() { return basic_postulates().set(7).set(8); }

PostulateSet parse_postulates(const std::string& text) {
  PostulateSet out;
  std::stringstream in(text);
  std::string part;
  auto digit = [&](const std::string& s) {
    if (s.size() != 1 || s[0] < '1' || s[0] > '8') {
      throw InvariantError("postulate numbers must be 1..8, got '" + s + "'");
    }
    return static_cast<std::size_t>(s[0] - '0');
  };
  while (std::getline(in, part, ',')) {
    if (part.empty()) throw InvariantError("empty postulate list entry in '" + text + "'");
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      out.set(digit(part));
      continue;
    }
    const std::size_t lo = digit(part.substr(0, dash));
    const std::size_t hi = digit(part.substr(dash + 1));
    if (lo > hi) throw InvariantError("empty postulate range '" + part + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.set(k);
  }
  if (out.none()) throw InvariantError("no postulates selected");
  return out;
}

CheckReport check_agm(const RevisionTable& t, PostulateSet which) {
  const std::size_t n = t.universe().size();
  const std::size_t count = t.proposition_count();
  const PointSet& k = t.initial();
  const auto& b = t.entries();
  CheckReport report;

  auto per_proposition = [&](std::string id, auto&& violated, const char* note) {
    for (std::size_t bits = 0; bits < count; ++bits) {
      if (violated(prop(n, bits))) {
        report.verdicts.push_back(fails(std::move(id), {prop(n, bits)}, note));
        return;
      }
    }
    report.verdicts.push_back(holds(std::move(id)));
  };
  auto per_pair = [&](std::string id, auto&& violated, const char* note) {
    for (std::size_t eb = 0; eb < count; ++eb) {
      for (std::size_t fb = 0; fb < count; ++fb) {
        if (violated(prop(n, eb), prop(n, fb))) {
          report.verdicts.push_back(fails(std::move(id), {prop(n, eb), prop(n, fb)}, note));
          return;
        }
      }
    }
    report.verdicts.push_back(holds(std::move(id)));
  };

  if (which.test(1)) report.verdicts.push_back(holds("AGM1", "closure is built into the representation"));
  if (which.test(2)) {
    per_proposition("AGM2", [&](const PointSet& e) { return !b[e.bits()].subset_of(e); },
                    "B(E) is not contained in E");
  }
  if (which.test(3)) {
    per_proposition("AGM3", [&](const PointSet& e) { return !(e & k).subset_of(b[e.bits()]); },
                    "B(E) is not contained in the expansion of K by E");
  }
  if (which.test(4)) {
    per_proposition(
        "AGM4",
        [&](const PointSet& e) {
          const PointSet ek = e & k;
          return !ek.empty() && !b[e.bits()].subset_of(ek);
        },
        "E is compatible with K but the expansion of K by E is not contained in B(E)");
  }
  if (which.test(5)) {
    per_proposition("AGM5", [&](const PointSet& e) { return b[e.bits()].empty() != e.empty(); },
                    "B(E) is inconsistent exactly when E is not a contradiction (or vice versa)");
  }
  if (which.test(6)) report.verdicts.push_back(holds("AGM6", "tables are keyed by truth set"));
  if (which.test(7)) {
    per_pair("AGM7",
             [&](const PointSet& e, const PointSet& f) {
               return !(b[e.bits()] & f).subset_of(b[(e & f).bits()]);
             },
             "B(E n F) is not contained in the expansion of B(E) by F");
  }
  if (which.test(8)) {
    per_pair("AGM8",
             [&](const PointSet& e, const PointSet& f) {
               const PointSet bf = b[e.bits()] & f;
               return !bf.empty() && !b[(e & f).bits()].subset_of(bf);
             },
             "F is compatible with B(E) but the expansion of B(E) by F is not contained in "
             "B(E n F)");
  }
  return report;
}

CheckReport check_filtered(const RevisionTable& t, const CredibilityLabeling& c) {
  if (!same_universe(t.universe_ptr(), c.universe_ptr())) {
    throw UniverseMismatch("labeling over another universe");
  }
  const PointSet& k = t.initial();
  if (k.empty()) throw InvariantError("filtered revision needs consistent initial beliefs");
  const std::size_t n = t.universe().size();
  const std::size_t count = t.proposition_count();

  struct Slot {
    const char* id;
    const char* note;
    std::optional<PointSet> witness;
  };
  Slot f1{"F1", "rejected information changed the beliefs", {}};
  Slot f2a{"F2a", "credible information compatible with K did not yield the expansion of K", {}};
  Slot f2b{"F2b", "allowable information compatible with K changed the beliefs", {}};
  Slot f3{"F3", "information contradicting K produced inconsistent beliefs", {}};
  Slot f3a{"F3a", "credible information contradicting K was not accepted", {}};
  Slot f3b{"F3b",
           "allowable information contradicting K did not yield a minimal contraction by its "
           "negation",
           {}};
  auto mark = [](Slot& s, const PointSet& e) {
    if (!s.witness) s.witness = e;
  };

  for (std::size_t bits = 0; bits < count; ++bits) {
    const PointSet e = prop(n, bits);
    const PointSet& entry = t.entries()[bits];
    const Credibility label = c.label(e);
    if (label == Credibility::kRejected && entry != k) mark(f1, e);
    if (e.intersects(k)) {
      if (label == Credibility::kCredible && entry != (k & e)) mark(f2a, e);
      if (label == Credibility::kAllowable && entry != k) mark(f2b, e);
      continue;
    }
    if (entry.empty()) mark(f3, e);
    if (label == Credibility::kCredible && !entry.subset_of(e)) mark(f3a, e);
    if (label == Credibility::kAllowable) {
      const PointSet outside = e.complement();
      // B(E) within K minus ~phi, and re-adding ~phi gives back K.
      const bool within = k.subset_of(entry) && !entry.subset_of(outside);
      const bool recovers = (entry & outside) == k;
      if (!within || !recovers) mark(f3b, e);
    }
  }

  CheckReport report;
  for (Slot* s : {&f1, &f2a, &f2b, &f3, &f3a, &f3b}) {
    if (s->witness) {
      report.verdicts.push_back(fails(s->id, {*s->witness}, s->note));
    } else {
      report.verdicts.push_back(holds(s->id));
    }
  }
  report.verdicts.push_back(holds("F4", "tables are keyed by truth set"));
  return report;
}

RevisionTable build_filtered(const RevisionTable& star, const CredibilityLabeling& c) {
  if (!same_universe(star.universe_ptr(), c.universe_ptr())) {
    throw UniverseMismatch("labeling over another universe");
  }
  const PointSet& k = star.initial();
  if (k.empty()) throw InvariantError("initial beliefs must be consistent");
  const CheckReport basic = check_agm(star, basic_postulates());
  if (const Verdict* v = basic.first_failure()) {
    throw InvariantError("not a basic AGM table: " + v->id + " fails at E=" +
                         format_points(v->witness.front(), star.universe()));
  }
  const std::size_t n = star.universe().size();
  std::vector<PointSet> entries(star.proposition_count(), PointSet(n));
  for (std::size_t bits = 0; bits < entries.size(); ++bits) {
    const PointSet& revised = star.entries()[bits];
    switch (c.label(prop(n, bits))) {
      case Credibility::kRejected: entries[bits] = k; break;
      case Credibility::kCredible: entries[bits] = revised; break;
      case Credibility::kAllowable: entries[bits] = k | revised; break;
    }
  }
  return RevisionTable(star.universe_ptr(), k, std::move(entries));
}

// ---------------------------------------------------------------------------
// Recovery

bool admissible_selection(const PointSet& e, const PointSet& k, Credibility label,
                          const PointSet& filtered_entry, const PointSet& s) {
  if (e.empty() || s.empty() || !s.subset_of(e)) return false;
  const PointSet compatible = e & k;
  if (!compatible.empty() && s != compatible) return false;
  switch (label) {
    case Credibility::kCredible: return filtered_entry == s;
    case Credibility::kAllowable: return filtered_entry == (k | s);
    case Credibility::kRejected: return filtered_entry == k;
  }
  return false;
}

std::optional<PointSet> choose_selection(const PointSet& e, const PointSet& k, Credibility label,
                                         const PointSet& filtered_entry) {
  if (e.empty()) return std::nullopt;
  PointSet candidate = e & k;
  if (candidate.empty()) {
    switch (label) {
      case Credibility::kCredible: candidate = filtered_entry; break;
      case Credibility::kAllowable: candidate = filtered_entry - k; break;
      case Credibility::kRejected: candidate = e; break;
    }
  }
  if (admissible_selection(e, k, label, filtered_entry, candidate)) return candidate;
  return std::nullopt;
}

Recovery recover_basic(const RevisionTable& filtered, const CredibilityLabeling& c) {
  if (!same_universe(filtered.universe_ptr(), c.universe_ptr())) {
    throw UniverseMismatch("labeling over another universe");
  }
  Recovery out;
  const PointSet& k = filtered.initial();
  if (k.empty()) {
    out.reason = "initial beliefs are inconsistent";
    return out;
  }
  const std::size_t n = filtered.universe().size();
  const PointSet none = PointSet(n);
  if (filtered.entry(none) != k) {
    out.infeasible = none;
    out.reason = "revision by a contradiction must leave K unchanged";
    return out;
  }
  std::vector<PointSet> entries(filtered.proposition_count(), none);
  for (std::size_t bits = 1; bits < entries.size(); ++bits) {
    const PointSet e = prop(n, bits);
    const Credibility label = c.label(e);
    auto chosen = choose_selection(e, k, label, filtered.entries()[bits]);
    if (!chosen) {
      out.infeasible = e;
      out.reason = std::string("no admissible selection for a proposition labeled ") +
                   to_char(label);
      return out;
    }
    entries[bits] = *chosen;
  }
  out.star = RevisionTable(filtered.universe_ptr(), k, std::move(entries));
  return out;
}

}  // namespace filtra
