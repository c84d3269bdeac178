// Independent reference implementations used by the test suites. Nothing
// here calls into the code under test beyond reading AST nodes and ids.
#ifndef FILTRA_TESTS_ORACLE_HPP
#define FILTRA_TESTS_ORACLE_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "filtra/formula.hpp"

namespace oracle {

using Assignment = std::map<std::string, bool>;

// Truth-table semantics straight from the recursive definition.
inline bool eval(const filtra::Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case filtra::Connective::kAtom: return a.at(f.atom_name());
    case filtra::Connective::kNot: return !eval(f.operand(), a);
    case filtra::Connective::kOr: return eval(f.lhs(), a) || eval(f.rhs(), a);
  }
  return false;
}

// Every assignment of `atoms`, first atom varying slowest.
inline std::vector<Assignment> all_assignments(const std::vector<std::string>& atoms) {
  std::vector<Assignment> out;
  const std::size_t n = atoms.size();
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[atoms[i]] = ((k >> (n - 1 - i)) & 1U) != 0;
    out.push_back(a);
  }
  return out;
}

// F |= phi by truth tables.
inline bool entails(const std::vector<filtra::Formula>& premises, const filtra::Formula& phi,
                    const std::vector<std::string>& atoms) {
  for (const auto& a : all_assignments(atoms)) {
    bool all = true;
    for (const auto& p : premises) all = all && eval(p, a);
    if (all && !eval(phi, a)) return false;
  }
  return true;
}

// Random AST of exactly `depth`, using all five connectives.
inline filtra::Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                                      std::size_t depth, bool derived = true) {
  using filtra::Formula;
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
  if (depth == 0) return Formula::atom(atoms[pick_atom(rng)]);
  std::uniform_int_distribution<int> pick_op(0, derived ? 4 : 1);
  std::uniform_int_distribution<std::size_t> shallower(0, depth - 1);
  const int op = pick_op(rng);
  if (op == 0) return Formula::negation(random_formula(rng, atoms, depth - 1, derived));
  Formula deep = random_formula(rng, atoms, depth - 1, derived);
  Formula other = random_formula(rng, atoms, shallower(rng), derived);
  if (std::bernoulli_distribution(0.5)(rng)) std::swap(deep, other);
  switch (op) {
    case 1: return Formula::disjunction(deep, other);
    case 2: return Formula::conjunction(deep, other);
    case 3: return Formula::implication(deep, other);
    default: return Formula::biconditional(deep, other);
  }
}

}  // namespace oracle

#endif  // FILTRA_TESTS_ORACLE_HPP
