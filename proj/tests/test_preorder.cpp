#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "filtra/error.hpp"
#include "filtra/preorder.hpp"
#include "filtra/random.hpp"

using namespace filtra;

namespace {

// Every vector in {0..n-1}^n whose used ranks are exactly 0..m.
std::set<std::vector<unsigned>> contiguous_rank_vectors(std::size_t n) {
  std::set<std::vector<unsigned>> out;
  std::vector<unsigned> v(n, 0);
  while (true) {
    std::set<unsigned> used(v.begin(), v.end());
    if (*used.rbegin() + 1 == used.size()) out.insert(v);
    std::size_t i = 0;
    while (i < n && v[i] == n - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("weak order counts match the brute-force filter") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto expected = contiguous_rank_vectors(n);
    std::set<std::vector<unsigned>> seen;
    std::size_t visits = 0;
    for_each_weak_order(n, [&](const PlausibilityOrder& o) {
      ++visits;
      seen.insert(o.ranks());
    });
    CHECK(visits == expected.size());
    CHECK(seen == expected);
  }
  CHECK(contiguous_rank_vectors(2).size() == 3);
  CHECK(contiguous_rank_vectors(3).size() == 13);
  CHECK(contiguous_rank_vectors(4).size() == 75);
}

TEST_CASE("enumerate_preorders on universes") {
  const auto u2 = canonical_universe(AtomSet{"p"});
  CHECK(enumerate_preorders(*u2).size() == 3);
  const auto u4 = canonical_universe(AtomSet{"p", "q"});
  CHECK(enumerate_preorders(*u4).size() == 75);
  const auto u8 = canonical_universe(AtomSet{"p", "q", "r"});
  CHECK_THROWS_AS(enumerate_preorders(*u8), LimitError);
}

TEST_CASE("order queries") {
  const PlausibilityOrder o({1, 0, 0, 2});
  CHECK(o.level_count() == 3);
  CHECK(o.level(0) == PointSet(4, 0b0110));
  CHECK(o.most_plausible(PointSet(4, 0b1001)) == PointSet(4, 0b0001));
  CHECK(o.most_plausible(PointSet(4, 0b1111)) == PointSet(4, 0b0110));
  CHECK(o.most_plausible(PointSet(4, 0)).empty());
  const auto parts = o.ordered_partition();
  REQUIRE(parts.size() == 3);
  CHECK(parts[2] == PointSet(4, 0b1000));
  CHECK_THROWS_AS(PlausibilityOrder({0, 2}), InvariantError);
  CHECK_THROWS_AS(PlausibilityOrder({1, 1}), InvariantError);
}

TEST_CASE("random preorders are reproducible and well formed") {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 200; ++i) {
    const PlausibilityOrder x = random_preorder(a, 5);
    CHECK(x == random_preorder(b, 5));
    CHECK(contiguous_rank_vectors(5).count(x.ranks()) == 1);
  }
}
