#ifndef FILTRA_FORMULA_HPP
#define FILTRA_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "filtra/point_set.hpp"
#include "filtra/universe.hpp"

namespace filtra {

enum class Connective { kAtom, kNot, kOr };

// Propositional formula over the primitive connectives {~, |}. The derived
// connectives are smart constructors that desugar on the spot. Nodes are
// shared and immutable, so copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula disjunction(Formula lhs, Formula rhs);

  // ~(~a | ~b)
  static Formula conjunction(Formula lhs, Formula rhs);
  // ~a | b
  static Formula implication(Formula lhs, Formula rhs);
  // (a -> b) & (b -> a)
  static Formula biconditional(Formula lhs, Formula rhs);

  Connective kind() const;
  // Only valid for kAtom.
  const std::string& atom_name() const;
  // Only valid for kNot.
  const Formula& operand() const;
  // Only valid for kOr.
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t depth() const;
  std::size_t size() const;
  void collect_atoms(std::set<std::string>& out) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar (loosest to tightest): <->, ->, |, &, ~. `->` is right
// associative; `|`, `&` and `<->` are left associative. Throws ParseError or
// UnknownAtomError.
Formula parse_formula(std::string_view text, const AtomSet& atoms);

// Fully parenthesized: atoms bare, "(~f)", "(f | g)".
std::string print_formula(const Formula& f);

// Throws UnknownAtomError if f mentions an atom the universe does not declare.
PointSet truth_set(const Formula& f, const Universe& u);

enum class Classification { kTautology, kContradiction, kContingent };

// Evaluated on the canonical universe of u's atoms.
Classification classify(const Formula& f, const Universe& u);
bool are_equivalent(const Formula& f, const Formula& g, const Universe& u);

const char* to_string(Classification c);

// A readable formula whose truth set on u is exactly s, built as a greedy
// DNF of maximal cubes. nullopt when no formula over u's atoms defines s
// (two points with the same valuation fall on different sides).
std::optional<std::string> representative_formula(const PointSet& s, const Universe& u);

}  // namespace filtra

#endif  // FILTRA_FORMULA_HPP
