#include <catch2/catch_amalgamated.hpp>

#include "orbittie/corpus.hpp"
#include "orbittie/det_rng.hpp"
#include "orbittie/oracle.hpp"
#include "orbittie/stabilizer.hpp"
#include "support/generators.hpp"

using namespace orbittie;

TEST_CASE("brute stabilizer, pinned examples") {
  PermGroup condorcet = brute_stabilizer(builtin_example("condorcet"));
  auto elements = condorcet.closure(100);
  CHECK(elements.size() == 3);
  CHECK(elements.count(Permutation::identity(3)) == 1);
  CHECK(elements.count(Permutation::from_cycles(3, {{0, 1, 2}})) == 1);
  CHECK(elements.count(Permutation::from_cycles(3, {{0, 2, 1}})) == 1);

  Input zero = make_input(fixed_point(InfoKind::voting, 3), WeakOrder::all_tied(3));
  CHECK(brute_stabilizer(zero).order(100) == 6);

  // strict standings restrict to class-preserving permutations: only the identity
  DetRng rng(2);
  Input strict = make_input(testgen::random_coalition(rng, 3), WeakOrder({{0}, {1}, {2}}));
  for (const auto& sigma : brute_stabilizer(strict).closure(100)) {
    CHECK(act(sigma, strict.standings) == strict.standings);
  }
}

TEST_CASE("brute orbit partition, pinned examples") {
  CHECK(brute_orbit_partition(builtin_example("two-pairs")) == Partition({{0, 1}, {2, 3}}));

  DetRng rng(3);
  // a generic roundrobin with strict standings has a trivial stabilizer
  Input strict = make_input(testgen::random_roundrobin(rng, 4),
                            WeakOrder({{0}, {1}, {2}, {3}}));
  CHECK(brute_orbit_partition(strict) == Partition::discrete(4));
}

TEST_CASE("brute rule counts, pinned examples") {
  CHECK(brute_consistent_rule_count(builtin_example("three-way")) == 6);
  CHECK(brute_consistent_rule_count(builtin_example("two-pairs")) == 8);

  // all-tied standings with a trivial stabilizer leave all n! orders
  std::vector<RoundRobinMatch> skewed = {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}};
  Input in = make_input(InfoItem(RoundRobinRecord(3, skewed)), WeakOrder::all_tied(3));
  REQUIRE(brute_orbit_partition(in) == Partition::discrete(3));
  CHECK(brute_consistent_rule_count(in) == 6);
}

TEST_CASE("brute fixed linear orders") {
  CHECK(brute_fixed_linear_orders(Permutation::from_cycles(2, {{0, 1}})).empty());
  CHECK(brute_fixed_linear_orders(Permutation::identity(3)).size() == 6);
  CHECK(brute_fixed_linear_orders(Permutation::from_cycles(4, {{0, 1, 2}})).empty());
}

TEST_CASE("non-identity permutations fix no linear order, exhaustively") {
  DetRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng.below(5);
    Permutation sigma = random_permutation(rng, n);
    auto fixed = brute_fixed_linear_orders(sigma);
    if (sigma.is_identity()) {
      CHECK(fixed.size() > 0);
    } else {
      CHECK(fixed.empty());
    }
  }
}

TEST_CASE("oracle caps") {
  Limits limits;
  limits.oracle_n = 4;
  Input in = make_input(fixed_point(InfoKind::graph, 5), WeakOrder::all_tied(5));
  CHECK_THROWS_AS(brute_stabilizer(in, limits), ResourceLimitError);
  CHECK_THROWS_AS(brute_orbit_partition(in, limits), ResourceLimitError);
  CHECK_THROWS_AS(brute_consistent_rule_count(in, limits), ResourceLimitError);
  CHECK_THROWS_AS(brute_fixed_linear_orders(Permutation::identity(5), limits),
                  ResourceLimitError);
}

TEST_CASE("search agrees with the oracle on mixed inputs") {
  DetRng rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(5);
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    PermGroup fast = joint_stabilizer(in);
    PermGroup brute = brute_stabilizer(in);
    CHECK(fast.same_group(brute, 100000));
    CHECK(orbit_partition(in) == brute_orbit_partition(in));
  }
}
