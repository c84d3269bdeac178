#ifndef FILTRA_REVISION_HPP
#define FILTRA_REVISION_HPP

#include <bitset>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "filtra/belief.hpp"
#include "filtra/formula.hpp"
#include "filtra/point_set.hpp"
#include "filtra/preorder.hpp"
#include "filtra/report.hpp"
#include "filtra/universe.hpp"

namespace filtra {

// Tables index every proposition of the universe, so 2^16 entries is the cap.
inline constexpr std::size_t kMaxTablePoints = 16;

// Full-domain revision function on the semantic quotient: one belief set
// (given by its models) for every proposition E of the universe. Revising by
// phi looks up entry(||phi||), which makes extensionality automatic.
class RevisionTable {
 public:
  // `entries[E.bits()]` is the models of the revision by E.
  RevisionTable(UniversePtr universe, PointSet initial, std::vector<PointSet> entries);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const PointSet& initial() const { return initial_; }
  BeliefSet initial_beliefs() const { return BeliefSet(universe_, initial_); }

  std::size_t proposition_count() const { return entries_.size(); }
  const std::vector<PointSet>& entries() const { return entries_; }
  const PointSet& entry(const PointSet& e) const;
  BeliefSet revise(const PointSet& e) const { return BeliefSet(universe_, entry(e)); }
  BeliefSet revise(const Formula& f) const { return revise(truth_set(f, *universe_)); }

  // Copy with one entry replaced.
  RevisionTable with_entry(const PointSet& e, const PointSet& value) const;

  friend bool operator==(const RevisionTable& a, const RevisionTable& b) {
    return same_universe(a.universe_, b.universe_) && a.initial_ == b.initial_ &&
           a.entries_ == b.entries_;
  }

 private:
  UniversePtr universe_;
  PointSet initial_;
  std::vector<PointSet> entries_;
};

enum class Credibility : unsigned char { kCredible, kAllowable, kRejected };

char to_char(Credibility c);
std::optional<Credibility> credibility_from_char(char c);

// Credibility class of every proposition. The full set is credible, the empty
// set is rejected, and credible or allowable propositions are nonempty.
class CredibilityLabeling {
 public:
  CredibilityLabeling(UniversePtr universe, std::vector<Credibility> labels);

  // Every proposition other than the full and empty sets gets `rest`.
  static CredibilityLabeling uniform(UniversePtr universe, Credibility rest);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  Credibility label(const PointSet& e) const;
  const std::vector<Credibility>& labels() const { return labels_; }

  CredibilityLabeling with_label(const PointSet& e, Credibility c) const;

  friend bool operator==(const CredibilityLabeling& a, const CredibilityLabeling& b) {
    return same_universe(a.universe_, b.universe_) && a.labels_ == b.labels_;
  }

 private:
  UniversePtr universe_;
  std::vector<Credibility> labels_;
};

// Semantic selection function: S(E) for each nonempty E (index E.bits(),
// slot 0 unused). Valid when S(E) is a nonempty subset of E and equals
// E n initial whenever that intersection is nonempty.
struct SelectionFunction {
  UniversePtr universe;
  PointSet initial;
  std::vector<PointSet> choice;
};

// Throws InvariantError naming the offending proposition.
void validate_selection(const SelectionFunction& s);

SelectionFunction selection_from_preorder(UniversePtr universe, const PlausibilityOrder& o);

// entries[E] = min(E), initial = min(all points), entries[empty] = empty.
RevisionTable revision_from_preorder(UniversePtr universe, const PlausibilityOrder& o);

// entries[E] = S(E), entries[empty] = empty. Throws InvariantError when `s`
// is not a valid selection function.
RevisionTable revision_from_selection(const SelectionFunction& s);

using PostulateSet = std::bitset<9>;  // bit k = AGMk, bit 0 unused

PostulateSet basic_postulates();
PostulateSet all_postulates();
// "1-8", "1,3,5", "2-4,7". Throws InvariantError on malformed input.
PostulateSet parse_postulates(const std::string& text);

// One verdict per requested postulate (ids "AGM1".."AGM8"), each witnessed
// by the first offending proposition (and second proposition for 7 and 8) in
// bitmask order.
CheckReport check_agm(const RevisionTable& t, PostulateSet which = all_postulates());

// Verdicts F1, F2a, F2b, F3, F3a, F3b, F4. Throws InvariantError if the
// initial beliefs are inconsistent or the labeling is over another universe.
CheckReport check_filtered(const RevisionTable& t, const CredibilityLabeling& c);

// Filtered table from a basic AGM table: rejected -> K, credible -> B*(E),
// allowable -> K n B*(E). Throws InvariantError naming the first violated
// basic postulate of `star`.
RevisionTable build_filtered(const RevisionTable& star, const CredibilityLabeling& c);

struct Recovery {
  std::optional<RevisionTable> star;
  std::optional<PointSet> infeasible;  // first proposition with no admissible S(E)
  std::string reason;

  bool ok() const { return star.has_value(); }
};

// Finds a basic AGM table that build_filtered maps onto `filtered`, choosing
// the largest admissible S(E) when several exist.
Recovery recover_basic(const RevisionTable& filtered, const CredibilityLabeling& c);

// Whether S(E) = s is admissible for the nonempty proposition e: s is a
// nonempty subset of e, equals e n k when that is nonempty, and rebuilds
// `filtered_entry` under `label`.
bool admissible_selection(const PointSet& e, const PointSet& k, Credibility label,
                          const PointSet& filtered_entry, const PointSet& s);

// The largest admissible S(E), or nullopt when none exists.
std::optional<PointSet> choose_selection(const PointSet& e, const PointSet& k, Credibility label,
                                         const PointSet& filtered_entry);

}  // namespace filtra

#endif  // FILTRA_REVISION_HPP
