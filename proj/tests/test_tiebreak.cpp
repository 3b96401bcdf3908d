#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "orbittie/corpus.hpp"
#include "orbittie/det_rng.hpp"
#include "orbittie/oracle.hpp"
#include "orbittie/tiebreak.hpp"
#include "support/generators.hpp"

using namespace orbittie;

namespace {

Completion two_pairs_completion() {
  Completion c;
  c.beta[{0, 1}] = {0, 1};  // a > b
  c.beta[{2, 3}] = {2, 3};  // c > d
  c.gamma = {{{0, 1}, {2, 3}}};
  return c;
}

}  // namespace

TEST_CASE("validate_completion") {
  Input in = builtin_example("two-pairs");
  Partition omega = orbit_partition(in);
  CHECK(validate_completion(two_pairs_completion(), omega, in.standings).empty());

  Completion missing = two_pairs_completion();
  missing.beta.erase({2, 3});
  CHECK_FALSE(validate_completion(missing, omega, in.standings).empty());

  Completion wrong = two_pairs_completion();
  wrong.beta[{0, 1}] = {0, 2};  // ranks a member of another block
  CHECK_FALSE(validate_completion(wrong, omega, in.standings).empty());
}

TEST_CASE("lift, pinned examples") {
  Input two_pairs = builtin_example("two-pairs");
  CHECK(lift(two_pairs_completion(), orbit_partition(two_pairs), two_pairs.standings) ==
        LinearOrder({0, 1, 2, 3}));

  Input three_way = builtin_example("three-way");
  Partition omega = orbit_partition(three_way);
  Completion c;
  c.beta[{0, 1, 2}] = {2, 0, 1};  // c > a > b
  c.beta[{3}] = {3};
  c.gamma = {{{0, 1, 2}}, {{3}}};
  CHECK(lift(c, omega, three_way.standings) == LinearOrder({2, 0, 1, 3}));

  // discrete orbit partition and strict standings leave no free data
  Input strict = make_input(fixed_point(InfoKind::graph, 3), WeakOrder({{2}, {0}, {1}}));
  Partition discrete = Partition::discrete(3);
  Completion unique;
  unique.beta[{0}] = {0};
  unique.beta[{1}] = {1};
  unique.beta[{2}] = {2};
  unique.gamma = {{{2}}, {{0}}, {{1}}};
  CHECK(lift(unique, discrete, strict.standings) == LinearOrder({2, 0, 1}));
}

TEST_CASE("extract_completion, pinned examples") {
  Input in = builtin_example("two-pairs");
  Partition omega = orbit_partition(in);
  CHECK(extract_completion(LinearOrder({0, 1, 2, 3}), omega, in.standings) ==
        two_pairs_completion());

  CHECK_THROWS_WITH(extract_completion(LinearOrder({0, 2, 1, 3}), omega, in.standings),
                    Catch::Matchers::ContainsSubstring("split"));

  Input three_way = builtin_example("three-way");
  auto c = extract_completion(LinearOrder({2, 0, 1, 3}), orbit_partition(three_way),
                              three_way.standings);
  CHECK(c.beta.at({0, 1, 2}) == std::vector<int>{2, 0, 1});

  // reversing a settled comparison is rejected with the pair named
  CHECK_THROWS_WITH(extract_completion(LinearOrder({3, 0, 1, 2}), orbit_partition(three_way),
                                       three_way.standings),
                    Catch::Matchers::ContainsSubstring("reverses"));
}

TEST_CASE("weak_from_pair, pinned examples") {
  WeakOrder tied = WeakOrder::all_tied(4);
  Partition p({{0, 1}, {2, 3}});
  BlockOrderingDelta d{{{{0, 1}, {2, 3}}}};
  CHECK(weak_from_pair(p, d, tied) == WeakOrder({{0, 1}, {2, 3}}));

  WeakOrder w({{0, 1, 2}, {3}});
  BlockOrderingDelta trivial{{{{0, 1, 2}}, {{3}}}};
  CHECK(weak_from_pair(indifference_partition(w), trivial, w) == w);

  BlockOrderingDelta strict_d{{{{1}, {0}, {2}}, {{3}}}};
  CHECK(weak_from_pair(Partition::discrete(4), strict_d, w) ==
        WeakOrder({{1}, {0}, {2}, {3}}));
}

TEST_CASE("pair_from_weak, pinned examples") {
  WeakOrder tied = WeakOrder::all_tied(4);
  auto [p, d] = pair_from_weak(WeakOrder({{0, 1}, {2, 3}}), tied);
  CHECK(p == Partition({{0, 1}, {2, 3}}));
  REQUIRE(d.per_class.size() == 1);
  CHECK(d.per_class[0] == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  WeakOrder w({{0, 2}, {1}});
  auto [p2, d2] = pair_from_weak(w, w);
  CHECK(p2 == indifference_partition(w));

  CHECK_THROWS_AS(pair_from_weak(WeakOrder({{1}, {0}}), WeakOrder({{0}, {1}})),
                  PreconditionError);
}

TEST_CASE("rule counting") {
  CHECK(count_consistent_rules(builtin_example("three-way")) == 6);
  CHECK(count_consistent_rules(builtin_example("two-pairs")) == 8);

  // discrete orbits matching discrete standings leave exactly one rule
  Input strict = make_input(fixed_point(InfoKind::graph, 3), WeakOrder({{0}, {1}, {2}}));
  CHECK(count_consistent_rules(strict) == 1);
}

TEST_CASE("axiom checks") {
  Input in = builtin_example("two-pairs");
  Partition omega = orbit_partition(in);  // {{a,b},{c,d}}
  Partition part = indifference_partition(in.standings);

  auto at_part = check_axioms(part, omega, in.standings);
  CHECK(at_part.saturated);
  CHECK_FALSE(at_part.maximally_fine);

  auto at_discrete = check_axioms(Partition::discrete(4), omega, in.standings);
  CHECK_FALSE(at_discrete.saturated);
  CHECK(at_discrete.maximally_fine);

  // the crossing partition on the realized path example satisfies neither
  Input path4 = builtin_example("path4");
  auto crossing = check_axioms(Partition({{0, 2}, {1, 3}}), orbit_partition(path4),
                               path4.standings);
  CHECK_FALSE(crossing.saturated);
  CHECK_FALSE(crossing.maximally_fine);

  auto at_omega = check_axioms(omega, omega, in.standings);
  CHECK(at_omega.saturated);
  CHECK(at_omega.maximally_fine);

  // not a rule output: doesn't refine the standings classes
  Input three_way = builtin_example("three-way");
  CHECK_THROWS_AS(check_axioms(Partition({{0, 3}, {1}, {2}}), orbit_partition(three_way),
                               three_way.standings),
                  PreconditionError);
}

TEST_CASE("default completion uses label order") {
  CHECK(lift(default_completion(builtin_example("two-pairs")), builtin_example("two-pairs")) ==
        LinearOrder({0, 1, 2, 3}));
  CHECK(lift(default_completion(builtin_example("three-way")), builtin_example("three-way")) ==
        LinearOrder({0, 1, 2, 3}));
  Input petersen = builtin_example("petersen");
  CHECK(lift(default_completion(petersen), petersen) ==
        LinearOrder({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST_CASE("round trip: extract after lift is the identity on completions") {
  DetRng rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + rng.below(5);
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    Completion c = testgen::random_completion(rng, omega, in.standings);
    LinearOrder lifted = lift(c, omega, in.standings);
    CHECK(strict_refines(lifted, in.standings));
    CHECK(is_consistent(lifted, omega));
    CHECK(extract_completion(lifted, omega, in.standings) == c);
  }
}

TEST_CASE("round trip: lift after extract is the identity on consistent rankings") {
  DetRng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng.below(3);  // exhaustive n! sweep per input
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    std::vector<int> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 0);
    do {
      LinearOrder t(ranking);
      if (!strict_refines(t, in.standings) || !is_consistent(t, omega)) continue;
      CHECK(lift(extract_completion(t, omega, in.standings), omega, in.standings) == t);
    } while (std::next_permutation(ranking.begin(), ranking.end()));
  }
}

TEST_CASE("weak-order bijection round trips") {
  DetRng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng.below(7);
    WeakOrder w = testgen::random_weak_order(rng, n);

    Partition p = testgen::random_refining_partition(rng, indifference_partition(w));
    BlockOrderingDelta d = testgen::random_delta(rng, p, w);
    WeakOrder v = weak_from_pair(p, d, w);
    CHECK(weak_refines(v, w));
    CHECK(indifference_partition(v) == p);
    auto [p_back, d_back] = pair_from_weak(v, w);
    CHECK(p_back == p);
    CHECK(d_back == d);

    // and the other direction, starting from a refining weak order
    Partition p2 = testgen::random_refining_partition(rng, indifference_partition(w));
    WeakOrder v2 = weak_from_pair(p2, testgen::random_delta(rng, p2, w), w);
    auto [p_rt, d_rt] = pair_from_weak(v2, w);
    CHECK(weak_from_pair(p_rt, d_rt, w) == v2);
  }
}

TEST_CASE("characterization: both axioms hold only at the orbit partition") {
  DetRng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(3);
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    for (const auto& p : refining_partitions(indifference_partition(in.standings))) {
      auto ax = check_axioms(p, omega, in.standings);
      CHECK((ax.saturated && ax.maximally_fine) == (p == omega));
    }
  }
}

TEST_CASE("composition: ordering blocks as a weak order then inserting beta equals the lift") {
  DetRng rng(67);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + rng.below(5);
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    Completion c = testgen::random_completion(rng, omega, in.standings);

    // gamma, read as a block ordering, promotes omega to a weak order...
    WeakOrder blocks_ordered = weak_from_pair(omega, BlockOrderingDelta{c.gamma}, in.standings);
    // ...whose classes are omega blocks; ordering each by beta reproduces the lift
    std::vector<int> ranking;
    for (const auto& cls : blocks_ordered.classes()) {
      ranking.insert(ranking.end(), c.beta.at(cls).begin(), c.beta.at(cls).end());
    }
    CHECK(LinearOrder(ranking) == lift(c, omega, in.standings));
  }
}
