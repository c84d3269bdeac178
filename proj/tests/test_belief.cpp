#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "filtra/belief.hpp"
#include "filtra/error.hpp"
#include "oracle.hpp"

using namespace filtra;

namespace {

const AtomSet kPQ{"p", "q"};
const std::vector<std::string> kNames{"p", "q"};

Formula f(const std::string& text) { return parse_formula(text, kPQ); }

// Every formula over p, q of depth <= 2 with ~ and | only, plus a few
// derived ones. Enough to hit all 16 propositions.
std::vector<Formula> small_formulas() {
  std::vector<Formula> layer{Formula::atom("p"), Formula::atom("q")};
  std::vector<Formula> all = layer;
  for (int d = 0; d < 2; ++d) {
    std::vector<Formula> next;
    for (const auto& a : all) next.push_back(Formula::negation(a));
    for (const auto& a : all) {
      for (const auto& b : all) next.push_back(Formula::disjunction(a, b));
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

// Membership read off the definition: K contains phi when every point of K
// satisfies phi under the reference evaluator.
bool member(const BeliefSet& k, const Formula& phi) {
  const auto rows = oracle::all_assignments(kNames);
  for (std::size_t i : k.points().members()) {
    if (!oracle::eval(phi, rows[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("belief sets from points") {
  const auto u = canonical_universe(AtomSet{"p"});
  const BeliefSet all = belief_set_from_points(u->all(), u);
  CHECK(contains(all, parse_formula("p | ~p", u->atoms())));
  CHECK_FALSE(contains(all, parse_formula("p", u->atoms())));
  const BeliefSet none = belief_set_from_points(u->none(), u);
  CHECK_FALSE(is_consistent(none));
  CHECK(contains(none, parse_formula("p & ~p", u->atoms())));
  const BeliefSet w1 = belief_set_from_points(PointSet::singleton(2, 1), u);
  CHECK(contains(w1, parse_formula("p", u->atoms())));
  CHECK_FALSE(contains(w1, parse_formula("~p", u->atoms())));
  CHECK(is_consistent(w1));
  CHECK_THROWS(BeliefSet(u, PointSet(3, 0)));
}

TEST_CASE("contains and expand") {
  const auto u = canonical_universe(kPQ);  // w1 q, w2 p, w3 both
  const BeliefSet both(u, PointSet::singleton(4, 3));
  CHECK(contains(both, f("p & q")));
  CHECK_FALSE(contains(both, f("~p")));
  const BeliefSet one(u, PointSet(4, 0b0110));  // exactly one true
  const BeliefSet after = expand(one, f("p"));
  CHECK(after.points() == PointSet::singleton(4, 2));
  CHECK(contains(after, f("~q")));
  CHECK(expand(one, f("p | ~p")) == one);
  CHECK(theory_subset(one, after));
}

TEST_CASE("footnote identity on random triples") {
  std::mt19937_64 rng(2024);
  const auto u = canonical_universe(kPQ);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const BeliefSet k(u, PointSet(4, rng() % 16));
    const Formula phi = oracle::random_formula(rng, kNames, rng() % 4);
    const Formula psi = oracle::random_formula(rng, kNames, rng() % 4);
    const bool lhs = contains(expand(k, phi), psi);
    CHECK(lhs == member(k, Formula::implication(phi, psi)));
    hits += lhs ? 1 : 0;
  }
  CHECK(hits > 1000);
  CHECK(hits < 9000);
}

TEST_CASE("intersection is model union") {
  const auto u = canonical_universe(kPQ);
  const BeliefSet k1(u, PointSet::singleton(4, 1));
  const BeliefSet k2(u, PointSet::singleton(4, 2));
  CHECK(intersect(k1, k2).points() == PointSet(4, 0b0110));
  const BeliefSet phi(u, u->none());
  CHECK(intersect(k1, phi) == k1);
  const auto other = canonical_universe(kPQ);
  CHECK_NOTHROW(intersect(k1, BeliefSet(other, PointSet(4, 1))));
  const auto three = canonical_universe(AtomSet{"p", "q", "r"});
  CHECK_THROWS_AS(intersect(k1, BeliefSet(three, PointSet(8, 1))), UniverseMismatch);

  const auto formulas = small_formulas();
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const BeliefSet x(u, PointSet(4, a));
      const BeliefSet y(u, PointSet(4, b));
      const BeliefSet both = intersect(x, y);
      CHECK(both == intersect(y, x));
      CHECK(intersect(x, x) == x);
      for (std::size_t i = 0; i < formulas.size(); i += 7) {
        CHECK(member(both, formulas[i]) == (member(x, formulas[i]) && member(y, formulas[i])));
      }
    }
  }
}

TEST_CASE("consistency agrees with the syntactic definition") {
  const auto u = canonical_universe(kPQ);
  const auto formulas = small_formulas();
  for (std::uint64_t a = 0; a < 16; ++a) {
    const BeliefSet k(u, PointSet(4, a));
    bool clash = false;
    for (const auto& phi : formulas) {
      if (member(k, phi) && member(k, Formula::negation(phi))) clash = true;
    }
    CHECK(is_consistent(k) == !clash);
  }
}

TEST_CASE("closure under tautological implication") {
  std::mt19937_64 rng(8);
  const auto u = canonical_universe(kPQ);
  int used = 0;
  for (int i = 0; i < 3000; ++i) {
    const BeliefSet k(u, PointSet(4, rng() % 16));
    const Formula a = oracle::random_formula(rng, kNames, rng() % 3);
    const Formula b = oracle::random_formula(rng, kNames, rng() % 3);
    const Formula psi = oracle::random_formula(rng, kNames, rng() % 3);
    if (!contains(k, a) || !contains(k, b)) continue;
    if (!oracle::entails({}, Formula::implication(Formula::conjunction(a, b), psi), kNames)) continue;
    ++used;
    CHECK(contains(k, psi));
  }
  CHECK(used > 100);
}
