#include "filtra/gcs.hpp"

#include <algorithm>
#include <set>

namespace filtra {

std::vector<PointSet> Gcs::events() const {
  std::set<PointSet> all;
  for (const auto* family : {&credible, &allowable, &rejected}) {
    all.insert(family->begin(), family->end());
  }
  return {all.begin(), all.end()};
}

std::optional<Credibility> Gcs::class_of(const PointSet& e) const {
  auto in = [&](const std::vector<PointSet>& family) {
    return std::find(family.begin(), family.end(), e) != family.end();
  };
  if (in(credible)) return Credibility::kCredible;
  if (in(allowable)) return Credibility::kAllowable;
  if (in(rejected)) return Credibility::kRejected;
  return std::nullopt;
}

const PointSet* Gcs::f(const PointSet& e) const {
  auto it = choice.find(e);
  return it == choice.end() ? nullptr : &it->second;
}

const PointSet& Gcs::f_omega() const {
  const PointSet* v = f(universe->all());
  if (v == nullptr) throw InvariantError("f(Omega) is undefined");
  return *v;
}

namespace {

void check_sizes(const Gcs& g) {
  if (!g.universe) throw InvariantError("GCS needs a universe");
  const std::size_t n = g.universe->size();
  auto same = [&](const PointSet& s) {
    if (s.universe_size() != n) throw UniverseMismatch("event over another universe");
  };
  for (const auto* family : {&g.credible, &g.allowable, &g.rejected}) {
    std::for_each(family->begin(), family->end(), same);
  }
  for (const auto& [e, v] : g.choice) {
    same(e);
    same(v);
  }
}

// Collects the first witness per clause while scanning events in order.
class ClauseCollector {
 public:
  explicit ClauseCollector(std::vector<std::pair<std::string, std::string>> clauses)
      : clauses_(std::move(clauses)), witness_(clauses_.size()) {}

  void fail(const std::string& id, std::vector<PointSet> witness) {
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (clauses_[i].first == id && !witness_[i]) witness_[i] = std::move(witness);
    }
  }

  CheckReport report() const {
    CheckReport out;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (witness_[i]) {
        out.verdicts.push_back({clauses_[i].first, false, *witness_[i], clauses_[i].second});
      } else {
        out.verdicts.push_back({clauses_[i].first, true, {}, {}});
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> clauses_;
  std::vector<std::optional<std::vector<PointSet>>> witness_;
};

}  // namespace

CheckReport validate_gcs(const Gcs& g) {
  check_sizes(g);
  ClauseCollector c({
      {"1", "the set of states is empty"},
      {"2.disjoint", "event belongs to more than one family"},
      {"2.omega", "Omega is not a credible event"},
      {"2.empty", "the empty event is not rejected"},
      {"3.domain", "f must be defined exactly on the events"},
      {"3a", "f(Omega) is empty"},
      {"3b", "rejected event with f(E) != f(Omega)"},
      {"3c", "credible event with f(E) empty or not contained in E"},
      {"3d", "allowable event with f(E) disjoint from E"},
  });
  const Universe& u = *g.universe;
  if (u.size() == 0) c.fail("1", {});

  std::map<PointSet, int> memberships;
  for (const auto* family : {&g.credible, &g.allowable, &g.rejected}) {
    for (const PointSet& e : std::set<PointSet>(family->begin(), family->end())) ++memberships[e];
  }
  for (const auto& [e, count] : memberships) {
    if (count > 1) c.fail("2.disjoint", {e});
  }
  if (std::find(g.credible.begin(), g.credible.end(), u.all()) == g.credible.end()) {
    c.fail("2.omega", {u.all()});
  }
  if (std::find(g.rejected.begin(), g.rejected.end(), u.none()) == g.rejected.end()) {
    c.fail("2.empty", {u.none()});
  }

  const auto events = g.events();
  for (const auto& e : events) {
    if (g.f(e) == nullptr) c.fail("3.domain", {e});
  }
  for (const auto& [e, v] : g.choice) {
    if (!std::binary_search(events.begin(), events.end(), e)) c.fail("3.domain", {e});
  }

  const PointSet* f_omega = g.f(u.all());
  if (f_omega == nullptr || f_omega->empty()) c.fail("3a", {u.all()});
  for (const auto& e : g.rejected) {
    const PointSet* v = g.f(e);
    if (v != nullptr && f_omega != nullptr && *v != *f_omega) c.fail("3b", {e});
  }
  for (const auto& e : g.credible) {
    const PointSet* v = g.f(e);
    if (v != nullptr && (v->empty() || !v->subset_of(e))) c.fail("3c", {e});
  }
  for (const auto& e : g.allowable) {
    const PointSet* v = g.f(e);
    if (v != nullptr && !v->intersects(e)) c.fail("3d", {e});
  }
  return c.report();
}

Prop2Report check_prop2(const Gcs& g) {
  const CheckReport valid = validate_gcs(g);
  if (const Verdict* v = valid.first_failure()) {
    throw InvariantError("not a generalized choice structure: clause " + v->id + " fails");
  }
  ClauseCollector c({
      {"1a", "credible event compatible with f(Omega) but f(E) != E n f(Omega)"},
      {"1b", "allowable event compatible with f(Omega) but f(E) != f(Omega)"},
      {"2", "allowable event disjoint from f(Omega) but f(E) is not f(Omega) u E' for a "
            "nonempty E' within E"},
  });
  Prop2Report report;
  const PointSet& k = g.f_omega();
  for (const PointSet& e : g.events()) {
    const PointSet& fe = *g.f(e);
    const auto cls = g.class_of(e);
    if (e.intersects(k)) {
      if (cls == Credibility::kCredible && fe != (e & k)) c.fail("1a", {e});
      if (cls == Credibility::kAllowable && fe != k) c.fail("1b", {e});
      continue;
    }
    if (cls != Credibility::kAllowable) continue;
    const PointSet added = fe - k;
    if (k.subset_of(fe) && !added.empty() && added.subset_of(e)) {
      report.splits.push_back({e, added});
    } else {
      c.fail("2", {e});
    }
  }
  report.clauses = c.report();
  return report;
}

// ---------------------------------------------------------------------------
// Models

const PointSet& Model::image_of(const PointSet& proposition) const {
  if (proposition.universe_size() != canonical->size()) {
    throw UniverseMismatch("proposition over another universe");
  }
  return image[proposition.bits()];
}

PointSet Model::valuations_of(const PointSet& x) const {
  PointSet out = canonical->none();
  for (std::size_t i : x.members()) out.insert(valuation.at(i));
  return out;
}

std::vector<PointSet> Model::information() const {
  std::vector<PointSet> out;
  const std::size_t n = canonical->size();
  for (std::size_t bits = 0; bits < image.size(); ++bits) {
    if (gcs.f(image[bits]) != nullptr) out.emplace_back(n, bits);
  }
  return out;
}

Model build_model(const Gcs& g, const AtomSet& atoms) {
  check_sizes(g);
  const Universe& u = *g.universe;
  std::vector<std::size_t> source;
  for (const auto& name : atoms) {
    auto idx = u.atoms().index_of(name);
    if (!idx) throw InvariantError("atom '" + name + "' has no valuation in the GCS states");
    source.push_back(*idx);
  }
  std::vector<Point> points;
  for (const auto& p : u.points()) {
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (p.holds(source[i])) a |= std::uint64_t{1} << i;
    }
    points.push_back({p.id, a});
  }
  Gcs projected = g;
  projected.universe = std::make_shared<const Universe>(atoms, std::move(points));

  UniversePtr canonical = canonical_universe(atoms, kDefaultAtomLimit);
  const std::size_t n = projected.universe->size();
  std::vector<std::size_t> valuation;
  for (const auto& p : projected.universe->points()) {
    valuation.push_back(canonical_index(p.assignment, atoms.size()));
  }

  std::map<PointSet, Credibility> forced;
  for (const auto& e : g.rejected) forced[e] = Credibility::kRejected;
  for (const auto& e : g.allowable) forced[e] = Credibility::kAllowable;
  for (const auto& e : g.credible) forced[e] = Credibility::kCredible;

  const std::size_t count = std::size_t{1} << canonical->size();
  std::vector<PointSet> image(count, PointSet(n));
  std::vector<Credibility> labels(count, Credibility::kRejected);
  for (std::size_t bits = 0; bits < count; ++bits) {
    PointSet img(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> valuation[i]) & 1U) img.insert(i);
    }
    image[bits] = img;
    if (auto it = forced.find(img); it != forced.end()) {
      labels[bits] = it->second;
    } else if (bits == count - 1) {
      labels[bits] = Credibility::kCredible;
    }
  }
  if (labels[count - 1] != Credibility::kCredible || labels[0] != Credibility::kRejected) {
    throw InvariantError("event families force a label on a tautology or contradiction that "
                         "no credibility partition allows");
  }
  CredibilityLabeling labeling(canonical, std::move(labels));
  return Model{std::move(projected), std::move(canonical), std::move(image), std::move(valuation),
               std::move(labeling)};
}

std::optional<BeliefSet> PartialRevision::revise(const Formula& phi) const {
  const PointSet e = truth_set(phi, initial.universe());
  auto it = entries.find(e);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

PartialRevision induced_beliefs(const Model& m) {
  const UniversePtr& omega = m.gcs.universe;
  PartialRevision out{BeliefSet(omega, m.gcs.f_omega()), {}, {}};
  std::set<PointSet> info;
  for (const PointSet& p : m.information()) info.insert(m.image_of(p));
  out.info.assign(info.begin(), info.end());
  for (const PointSet& e : out.info) out.entries.emplace(e, BeliefSet(omega, *m.gcs.f(e)));
  return out;
}

}  // namespace filtra
