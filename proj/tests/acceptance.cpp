// Acceptance suite: one binary, one pass/fail line per criterion, with the
// measured wall time. Exit code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "orbittie/corpus.hpp"
#include "orbittie/oracle.hpp"
#include "orbittie/report.hpp"
#include "orbittie/stabilizer.hpp"
#include "orbittie/tiebreak.hpp"
#include "support/generators.hpp"

using namespace orbittie;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

bool certificate_is_valid(const FixedOrderCertificate& cert, const WeakOrder& standings,
                          Check& check) {
  bool good = true;
  good = good && strict_refines(cert.probe, standings);
  good = good && act(cert.sigma, cert.probe) != cert.probe;
  std::size_t m = cert.cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    good = good && cert.sigma(cert.cycle[i]) == cert.cycle[(i + 1) % m];
  }
  auto pos = cert.probe.position_of();
  auto dir = [&](std::size_t i) {
    return pos[static_cast<std::size_t>(cert.cycle[i])] <
           pos[static_cast<std::size_t>(cert.cycle[(i + 1) % m])];
  };
  std::size_t b = static_cast<std::size_t>(cert.broken_link);
  good = good && b >= 1 && b < m && dir(b) != dir(b - 1);
  check.expect(good, "descending-cycle certificate invalid");
  return good;
}

}  // namespace

// 1. Condorcet: omega one block of three, stabilizer order 3.
static bool criterion1(std::string& detail) {
  Input in = builtin_example("condorcet");
  Check c;
  c.expect(orbit_partition(in) == Partition({{0, 1, 2}}), "omega != {{a,b,c}}");
  c.expect(joint_stabilizer(in).order(1000) == 3, "stabilizer order != 3");
  detail = c.ok ? "omega = {{a,b,c}}, |Stab| = 3" : c.why.str();
  return c.ok;
}

// 2. Three-way: omega, rule count 6, brute count agrees.
static bool criterion2(std::string& detail) {
  Input in = builtin_example("three-way");
  Check c;
  c.expect(orbit_partition(in) == Partition({{0, 1, 2}, {3}}), "omega != {{a,b,c},{d}}");
  c.expect(count_consistent_rules(in) == 6, "count != 6");
  c.expect(brute_consistent_rule_count(in) == 6, "brute count != 6");
  detail = c.ok ? "omega = {{a,b,c},{d}}, count = 6 (search and brute)" : c.why.str();
  return c.ok;
}

// 3. Two-pairs: stabilizer <(a b),(c d)> of order 4, omega, count 8.
static bool criterion3(std::string& detail) {
  Input in = builtin_example("two-pairs");
  Check c;
  PermGroup stab = joint_stabilizer(in);
  PermGroup expected(4, {Permutation::from_cycles(4, {{0, 1}}),
                         Permutation::from_cycles(4, {{2, 3}})});
  c.expect(stab.same_group(expected, 1000), "stabilizer != <(a b),(c d)>");
  c.expect(stab.order(1000) == 4, "stabilizer order != 4");
  c.expect(stab.orbits() == Partition({{0, 1}, {2, 3}}), "omega != {{a,b},{c,d}}");
  c.expect(count_consistent_rules(in) == 8, "count != 8");
  detail = c.ok ? "Stab = <(a b),(c d)>, order 4, count = 8" : c.why.str();
  return c.ok;
}

// 4. Petersen: one ten-vertex orbit; order 120 confirmed by the 10! sweep.
static bool criterion4(std::string& detail) {
  Input in = builtin_example("petersen");
  Check c;

  auto search_start = std::chrono::steady_clock::now();
  PermGroup fast = joint_stabilizer(in);
  double search_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - search_start).count();
  c.expect(search_s < 1.0, "search path took " + std::to_string(search_s) + " s (limit 1)");
  c.expect(fast.orbits() == Partition({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}),
           "omega is not a single block of all ten");
  c.expect(fast.order(10'000'000) == 120, "search stabilizer order != 120");

  Limits oracle_limits;
  oracle_limits.oracle_n = 10;  // explicit cap override for the 10! sweep
  PermGroup brute = brute_stabilizer(in, oracle_limits);
  c.expect(brute.same_group(fast, 10'000'000), "brute stabilizer differs from search");

  std::ostringstream os;
  os << "single 10-vertex orbit, |Stab| = 120 (search " << std::fixed << std::setprecision(3)
     << search_s << " s, brute over 10! permutations)";
  detail = c.ok ? os.str() : c.why.str();
  return c.ok;
}

// 5. Impossibility: corpus witnesses fix no linear order; certificates valid.
static bool criterion5(std::string& detail) {
  Check c;
  int entries = 0;
  for (const auto& name : {"condorcet", "two-pairs", "three-way", "petersen", "path4"}) {
    Input in = builtin_example(name);
    auto witness = symmetric_witness(in);
    if (!witness) continue;
    ++entries;
    Limits limits;
    limits.oracle_n = in.n;  // exhaustive at this entry's n
    c.expect(brute_fixed_linear_orders(witness->sigma, limits).empty(),
             std::string(name) + ": witness fixes a linear order");
    auto cert = verify_no_fixed_linear_order(witness->sigma, in.standings);
    certificate_is_valid(cert, in.standings, c);
  }
  c.expect(entries == 5, "expected a symmetric witness in all five entries");
  detail = c.ok ? "all 5 corpus witnesses fix no linear order; certificates check out"
                : c.why.str();
  return c.ok;
}

// 6. Characterization: both axioms hold exactly at omega, exhaustively over
// partitions refining the standings classes, 200+ seeded inputs of all kinds.
static bool criterion6(std::string& detail) {
  Check c;
  DetRng rng(601);
  int cases = 0;
  while (cases < 200) {
    for (InfoKind kind : testgen::all_kinds()) {
      int n = 2 + rng.below(4);  // n <= 5
      Input in = testgen::random_input(rng, kind, n);
      Partition omega = orbit_partition(in);
      for (const auto& p : refining_partitions(indifference_partition(in.standings))) {
        auto ax = check_axioms(p, omega, in.standings);
        c.expect((ax.saturated && ax.maximally_fine) == (p == omega),
                 "axiom conjunction mismatches omega at case " + std::to_string(cases));
      }
      ++cases;
    }
    if (!c.ok) break;
  }
  detail = c.ok ? std::to_string(cases) + " inputs, all refining partitions swept" : c.why.str();
  return c.ok;
}

// 7. Decomposition round trips.
static bool criterion7(std::string& detail) {
  Check c;
  DetRng rng(701);

  int completions = 0;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    int n = 2 + rng.below(6);  // n <= 7
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    Completion comp = testgen::random_completion(rng, omega, in.standings);
    LinearOrder lifted = lift(comp, omega, in.standings);
    c.expect(strict_refines(lifted, in.standings) && is_consistent(lifted, omega),
             "lift is not a partition-consistent refinement");
    c.expect(extract_completion(lifted, omega, in.standings) == comp,
             "extract(lift(C)) != C");
    ++completions;
  }

  int rankings = 0;
  for (int trial = 0; trial < 60 && c.ok; ++trial) {
    int n = 2 + rng.below(4);  // n <= 5, exhaustive over n! orders
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Partition omega = orbit_partition(in);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      LinearOrder t(perm);
      if (!strict_refines(t, in.standings) || !is_consistent(t, omega)) continue;
      c.expect(lift(extract_completion(t, omega, in.standings), omega, in.standings) == t,
               "lift(extract(T)) != T");
      ++rankings;
    } while (c.ok && std::next_permutation(perm.begin(), perm.end()));
  }

  detail = c.ok ? std::to_string(completions) + " random completions and " +
                      std::to_string(rankings) + " enumerated consistent rankings round-trip"
                : c.why.str();
  return c.ok;
}

// 8. Weak-order bijection round trips, both directions.
static bool criterion8(std::string& detail) {
  Check c;
  DetRng rng(801);
  int cases = 0;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    int n = 1 + rng.below(7);  // n <= 7
    WeakOrder w = testgen::random_weak_order(rng, n);

    Partition p = testgen::random_refining_partition(rng, indifference_partition(w));
    BlockOrderingDelta d = testgen::random_delta(rng, p, w);
    WeakOrder v = weak_from_pair(p, d, w);
    auto [p_back, d_back] = pair_from_weak(v, w);
    c.expect(p_back == p && d_back == d, "pair -> weak -> pair is not the identity");

    Partition p2 = testgen::random_refining_partition(rng, indifference_partition(w));
    WeakOrder v2 = weak_from_pair(p2, testgen::random_delta(rng, p2, w), w);
    auto [p_rt, d_rt] = pair_from_weak(v2, w);
    c.expect(weak_from_pair(p_rt, d_rt, w) == v2, "weak -> pair -> weak is not the identity");
    ++cases;
  }
  detail = c.ok ? std::to_string(cases) + " seeded cases, both directions exact" : c.why.str();
  return c.ok;
}

// 9. Oracle equivalence of the search across all five kinds.
static bool criterion9(std::string& detail) {
  Check c;
  DetRng rng(901);
  int per_kind = 100;
  for (InfoKind kind : testgen::all_kinds()) {
    for (int trial = 0; trial < per_kind && c.ok; ++trial) {
      int n = 2 + rng.below(6);  // n <= 7
      Input in = testgen::random_input(rng, kind, n);
      PermGroup fast = joint_stabilizer(in);
      PermGroup brute = brute_stabilizer(in);
      c.expect(fast.same_group(brute, 1'000'000),
               std::string(kind_name(kind)) + ": stabilizers differ");
      c.expect(fast.orbits() == brute_orbit_partition(in),
               std::string(kind_name(kind)) + ": orbit partitions differ");
    }
  }
  detail = c.ok ? "100 inputs per kind, search == n! sweep" : c.why.str();
  return c.ok;
}

// 10. Equivariance of omega and conjugation of stabilizers.
static bool criterion10(std::string& detail) {
  Check c;
  DetRng rng(1001);
  int cases = 0;
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    int n = 2 + rng.below(5);  // n <= 6
    Input in = testgen::random_input(rng, testgen::all_kinds()[trial % 5], n);
    Permutation sigma = random_permutation(rng, n);
    Input moved = act_input(sigma, in);

    c.expect(orbit_partition(moved) == act(sigma, orbit_partition(in)),
             "omega(sigma . input) != sigma . omega(input)");

    auto original = joint_stabilizer(in).closure(1'000'000);
    std::set<Permutation> conjugated;
    for (const auto& tau : original) {
      conjugated.insert(compose(sigma, compose(tau, invert(sigma))));
    }
    c.expect(joint_stabilizer(moved).closure(1'000'000) == conjugated,
             "Stab(sigma . input) != sigma Stab(input) sigma^-1");
    ++cases;
  }
  detail = c.ok ? std::to_string(cases) + " seeded (sigma, input) pairs" : c.why.str();
  return c.ok;
}

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "condorcet orbit partition and stabilizer order", 1.0, criterion1},
      {2, "three-way orbit partition and rule count", 1.0, criterion2},
      {3, "two-pairs stabilizer, orbits, and rule count", 1.0, criterion3},
      {4, "petersen search vs 10! brute force", 120.0, criterion4},
      {5, "impossibility on all corpus witnesses", 10.0, criterion5},
      {6, "axioms characterize omega (n <= 5, 200+ inputs)", 60.0, criterion6},
      {7, "decomposition round trips", 60.0, criterion7},
      {8, "weak-order bijection round trips", 30.0, criterion8},
      {9, "oracle equivalence across all kinds", 300.0, criterion9},
      {10, "equivariance and conjugation", 60.0, criterion10},
  };

  int failed = 0;
  for (auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.limit_s) {
      ok = false;
      detail += " [exceeded " + std::to_string(criterion.limit_s) + " s limit]";
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << criterion.id
              << ": " << criterion.name << " — " << detail << " (" << std::fixed
              << std::setprecision(2) << elapsed << " s)" << std::endl;
  }
  if (failed == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
  } else {
    std::cout << failed << " acceptance criteria FAILED" << std::endl;
  }
  return failed;
}
