#ifndef FILTRA_GCS_HPP
#define FILTRA_GCS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "filtra/belief.hpp"
#include "filtra/point_set.hpp"
#include "filtra/preorder.hpp"
#include "filtra/random.hpp"
#include "filtra/report.hpp"
#include "filtra/revision.hpp"
#include "filtra/universe.hpp"

namespace filtra {

inline constexpr std::size_t kOracleOmegaLimit = 5;
inline constexpr std::size_t kBruteforceOmegaLimit = 4;
inline constexpr std::size_t kRationalizeOmegaLimit = 6;

// Generalized choice structure: states (the universe's points), the credible,
// allowable and rejected families of events, and the choice function f on
// their union. Nothing is enforced on construction; see validate_gcs.
struct Gcs {
  UniversePtr universe;
  std::vector<PointSet> credible;
  std::vector<PointSet> allowable;
  std::vector<PointSet> rejected;
  std::map<PointSet, PointSet> choice;

  // Union of the three families, sorted, without duplicates.
  std::vector<PointSet> events() const;
  // Class of e, checking credible, allowable, rejected in that order.
  std::optional<Credibility> class_of(const PointSet& e) const;
  const PointSet* f(const PointSet& e) const;
  // f(Omega); throws InvariantError if undefined.
  const PointSet& f_omega() const;
};

// Verdicts "1", "2.disjoint", "2.omega", "2.empty", "3.domain", "3a".."3d",
// each failure witnessed by the offending event.
CheckReport validate_gcs(const Gcs& g);

// An allowable event E disjoint from f(Omega) with f(E) = f(Omega) u added.
struct AllowableSplit {
  PointSet event;
  PointSet added;
};

struct Prop2Report {
  CheckReport clauses;  // verdicts "1a", "1b", "2"
  std::vector<AllowableSplit> splits;

  bool passed() const { return clauses.passed(); }
};

// Throws InvariantError when validate_gcs fails.
Prop2Report check_prop2(const Gcs& g);

// A GCS with a valuation (the point assignments over `atoms`) and the
// credibility labeling the events force on formulas.
struct Model {
  Gcs gcs;                          // universe restricted to the model's atoms
  UniversePtr canonical;            // all valuations of the atoms
  std::vector<PointSet> image;      // image[P.bits()] = ||P|| on Omega
  std::vector<std::size_t> valuation;  // canonical point index of each state
  CredibilityLabeling labeling;

  const Universe& omega() const { return *gcs.universe; }
  const PointSet& image_of(const PointSet& proposition) const;
  // Canonical points realized by the states in x.
  PointSet valuations_of(const PointSet& x) const;
  // Propositions whose image is an event of the GCS, in bitmask order.
  std::vector<PointSet> information() const;
};

// Propositions whose image lies in a family take that family's label; the
// rest are rejected except the tautology class. Throws InvariantError if
// an atom is missing from the universe or the forced labels conflict.
Model build_model(const Gcs& g, const AtomSet& atoms);

// Initial beliefs, informative events and their revisions, all over Omega.
struct PartialRevision {
  BeliefSet initial;
  std::vector<PointSet> info;
  std::map<PointSet, BeliefSet> entries;

  // Revision by phi, or nullopt when ||phi|| is not an informative event.
  std::optional<BeliefSet> revise(const Formula& phi) const;
};

PartialRevision induced_beliefs(const Model& m);

// Witness of extendability. Both tables are over the model's canonical
// universe; `filtered` extends the induced partial revision and equals
// build_filtered(star, labeling).
struct ExtensionCertificate {
  RevisionTable star;
  RevisionTable filtered;
};

struct ExtensionResult {
  std::optional<ExtensionCertificate> certificate;
  std::optional<PointSet> infeasible_proposition;
  std::optional<PointSet> infeasible_event;

  bool ok() const { return certificate.has_value(); }
};

// Decides whether the model's partial revision extends to a filtered
// revision built from a basic AGM function. Throws LimitError past
// `omega_limit` states.
ExtensionResult extension_oracle(const Model& m, std::size_t omega_limit = kOracleOmegaLimit);

// Re-checks a certificate from scratch: verdicts "initial", "basic-agm",
// "rebuild", "extends".
CheckReport verify_certificate(const Model& m, const ExtensionCertificate& c);

// Smallest atom count whose valuations can separate n states.
std::size_t default_atom_budget(std::size_t omega_size);

struct ConsistencyVerdict {
  bool consistent = true;
  std::size_t atoms = 0;
  std::size_t models_checked = 0;
  // Set when inconsistent.
  std::optional<Model> counter_model;
  std::optional<PointSet> infeasible_proposition;
  std::optional<PointSet> infeasible_event;
};

// Runs extension_oracle on every valuation of `atoms` atoms (up to atom
// permutation) and reports the first model that cannot be extended.
ConsistencyVerdict agm_consistency_bruteforce(const Gcs& g, std::optional<std::size_t> atoms = {},
                                              std::size_t omega_limit = kBruteforceOmegaLimit);

// Total pre-order whose most plausible elements reproduce f on every
// credible event, or nullopt. Throws LimitError past `limit` states.
std::optional<PlausibilityOrder> find_rationalizing_preorder(
    const Gcs& g, std::size_t limit = kRationalizeOmegaLimit);

// Points named s0..s{n-1}, no atoms.
UniversePtr bare_states(std::size_t n);

// Calls visit for every GCS over n bare states: every assignment of the
// nonempty proper subsets to {none, C, A, R} and every f map on the
// resulting events. Invalid structures are included.
void for_each_gcs(std::size_t n, const std::function<void(const Gcs&)>& visit);

// Random valid GCS over n bare states. About a third conform to the
// characterization, a third break it in one event and a third are
// unconstrained beyond validity.
Gcs random_gcs(Rng& rng, std::size_t n);

}  // namespace filtra

#endif  // FILTRA_GCS_HPP
