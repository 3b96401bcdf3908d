#include <catch2/catch_amalgamated.hpp>

#include "orbittie/corpus.hpp"
#include "orbittie/det_rng.hpp"
#include "orbittie/infospace.hpp"
#include "support/generators.hpp"

using namespace orbittie;

namespace {
bool has_violation(const std::vector<std::string>& violations, const std::string& needle) {
  for (const auto& v : violations) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("roundrobin validation") {
  // complete 3-team schedule
  InfoItem ok(RoundRobinRecord(3, {{0, 1, 1}, {0, 2, 0}, {1, 2, -2}}));
  CHECK(validate(ok, 3).empty());

  // both orientations recorded with the same sign
  InfoItem anti(RoundRobinRecord(2, {{0, 1, 1}, {1, 0, 1}}));
  CHECK(has_violation(validate(anti, 2), "antisymmetry"));

  InfoItem missing(RoundRobinRecord(3, {{0, 1, 1}}));
  CHECK(has_violation(validate(missing, 3), "missing match"));

  InfoItem dup(RoundRobinRecord(2, {{0, 1, 1}, {1, 0, -1}}));
  CHECK(has_violation(validate(dup, 2), "more than once"));
}

TEST_CASE("swiss validation") {
  InfoItem twice(SwissRecord(3, 1, {{1, 0, 1, GameResult::win}, {1, 0, 2, GameResult::draw}}));
  CHECK(has_violation(validate(twice, 3), "paired twice in round 1"));

  InfoItem bad_round(SwissRecord(2, 1, {{2, 0, 1, GameResult::win}}));
  CHECK(has_violation(validate(bad_round, 2), "round"));

  InfoItem ok(SwissRecord(4, 2, {{1, 0, 1, GameResult::win},
                                 {1, 2, 3, GameResult::draw},
                                 {2, 0, 2, GameResult::loss}}));
  CHECK(validate(ok, 4).empty());
}

TEST_CASE("graph and coalition and voting validation") {
  CHECK(has_violation(validate(InfoItem(GraphEdges(2, {{0, 0}})), 2), "self-loop"));
  CHECK(has_violation(validate(InfoItem(GraphEdges(2, {{0, 1}, {1, 0}})), 2), "duplicate edge"));

  std::map<std::uint32_t, Rational> partial{{0u, Rational(0)}};
  CHECK(has_violation(validate(InfoItem(CoalitionValues(2, partial)), 2), "missing"));

  InfoItem neg(VotingProfile(2, {{WeakOrder::all_tied(2), -1}}));
  CHECK(has_violation(validate(neg, 2), "negative"));
}

TEST_CASE("act_item, pinned examples") {
  // edge {a,b} relabeled by (b c) becomes {a,c}
  Permutation bc = Permutation::from_cycles(3, {{1, 2}});
  CHECK(act_item(bc, InfoItem(GraphEdges(3, {{0, 1}}))) == InfoItem(GraphEdges(3, {{0, 2}})));

  // v({a}) = 1 pulled back along (a b) becomes v({b}) = 1
  std::map<std::uint32_t, Rational> v;
  for (std::uint32_t m = 0; m < 4; ++m) v[m] = Rational(0);
  v[1u] = Rational(1);
  std::map<std::uint32_t, Rational> expect;
  for (std::uint32_t m = 0; m < 4; ++m) expect[m] = Rational(0);
  expect[2u] = Rational(1);
  Permutation ab = Permutation::from_cycles(2, {{0, 1}});
  CHECK(act_item(ab, InfoItem(CoalitionValues(2, v))) == InfoItem(CoalitionValues(2, expect)));

  // the cyclic profile maps to itself under the 3-cycle
  Input condorcet = builtin_example("condorcet");
  Permutation rho = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(act_item(rho, condorcet.item) == condorcet.item);
}

TEST_CASE("items_equal") {
  Input condorcet = builtin_example("condorcet");
  CHECK(items_equal(condorcet.item, condorcet.item));
  CHECK_FALSE(items_equal(InfoItem(GraphEdges(2, {})), InfoItem(GraphEdges(2, {{0, 1}}))));
  CHECK_THROWS_AS(items_equal(InfoItem(GraphEdges(2, {})), fixed_point(InfoKind::voting, 2)),
                  PreconditionError);

  // rationals canonicalize: 1/2 == 2/4
  std::map<std::uint32_t, Rational> half{{0u, Rational(1, 2)}, {1u, Rational(0)}};
  std::map<std::uint32_t, Rational> two_quarters{{0u, Rational(2, 4)}, {1u, Rational(0)}};
  CHECK(items_equal(InfoItem(CoalitionValues(1, half)),
                    InfoItem(CoalitionValues(1, two_quarters))));
}

TEST_CASE("fixed points, pinned examples") {
  CHECK(fixed_point(InfoKind::graph, 4) == InfoItem(GraphEdges(4, {})));
  CHECK(fixed_point(InfoKind::roundrobin, 3) ==
        InfoItem(RoundRobinRecord(3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}})));
  CHECK(fixed_point(InfoKind::voting, 3) == InfoItem(VotingProfile(3, {})));
}

TEST_CASE("fixed points are fixed by the whole symmetric group") {
  int n = 5;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation sigma(images);
    for (InfoKind kind : testgen::all_kinds()) {
      InfoItem star = fixed_point(kind, n);
      CHECK(act_item(sigma, star) == star);
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST_CASE("action and identity laws for items of every kind") {
  DetRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + rng.below(6);
    for (InfoKind kind : testgen::all_kinds()) {
      InfoItem item = testgen::random_item(rng, kind, n);
      REQUIRE(validate(item, n).empty());
      Permutation s = random_permutation(rng, n);
      Permutation t = random_permutation(rng, n);
      CHECK(act_item(compose(s, t), item) == act_item(s, act_item(t, item)));
      CHECK(act_item(Permutation::identity(n), item) == item);
      CHECK(validate(act_item(s, item), n).empty());  // validity preserved
    }
  }
}

TEST_CASE("relabeling preserves total ballot count") {
  DetRng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + rng.below(6);
    InfoItem item = testgen::random_voting(rng, n);
    Permutation s = random_permutation(rng, n);
    CHECK(act_item(s, item).as<VotingProfile>().total_ballots() ==
          item.as<VotingProfile>().total_ballots());
  }
}

TEST_CASE("degree standings") {
  // path a-c-d-b: ends have degree 1, middles degree 2
  GraphEdges path(4, {{0, 2}, {2, 3}, {3, 1}});
  CHECK(degree_standings(path) == WeakOrder({{2, 3}, {0, 1}}));
  CHECK(degree_standings(GraphEdges(3, {})) == WeakOrder::all_tied(3));
}
