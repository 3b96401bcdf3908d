#pragma once

#include <numeric>
#include <set>
#include <vector>

#include "orbittie/action.hpp"
#include "orbittie/group.hpp"
#include "orbittie/input.hpp"
#include "orbittie/tiebreak.hpp"

namespace orbittie {

/// Brute-force reference implementations. These evaluate the definitions
/// literally over full n! sweeps, in lexicographic order, sharing nothing
/// with the optimized search beyond the action primitives — an oracle that
/// reused the pruning could not catch pruning bugs.

namespace detail {

inline void check_oracle_cap(int n, const Limits& limits, const char* what) {
  if (n > limits.oracle_n) {
    throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds the oracle cap " + std::to_string(limits.oracle_n));
  }
}

inline std::vector<Permutation> all_stabilizing_elements(const Input& in) {
  std::vector<int> images(static_cast<std::size_t>(in.n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> found;
  do {
    Permutation sigma(images);
    if (act(sigma, in.standings) == in.standings &&
        items_equal(act_item(sigma, in.item), in.item)) {
      found.push_back(std::move(sigma));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return found;
}

}  // namespace detail

/// Filters all n! permutations by the two fixing conditions and returns the
/// full element set (as generators of a PermGroup).
inline PermGroup brute_stabilizer(const Input& in, const Limits& limits = Limits::defaults()) {
  detail::check_oracle_cap(in.n, limits, "brute_stabilizer");
  return PermGroup(in.n, detail::all_stabilizing_elements(in));
}

/// Orbits read directly off the full element set by a point-image sweep.
inline Partition brute_orbit_partition(const Input& in,
                                       const Limits& limits = Limits::defaults()) {
  detail::check_oracle_cap(in.n, limits, "brute_orbit_partition");
  auto elements = detail::all_stabilizing_elements(in);
  std::vector<bool> placed(static_cast<std::size_t>(in.n), false);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < in.n; ++x) {
    if (placed[static_cast<std::size_t>(x)]) continue;
    std::set<int> orbit;
    for (const auto& sigma : elements) orbit.insert(sigma(x));
    std::vector<int> block(orbit.begin(), orbit.end());
    for (int v : block) placed[static_cast<std::size_t>(v)] = true;
    blocks.push_back(std::move(block));
  }
  return Partition(std::move(blocks));
}

/// Counts all n! linear orders that refine the standings and keep every
/// orbit block contiguous (orbit partition also taken from the brute path).
inline BigInt brute_consistent_rule_count(const Input& in,
                                          const Limits& limits = Limits::defaults()) {
  detail::check_oracle_cap(in.n, limits, "brute_consistent_rule_count");
  Partition omega = brute_orbit_partition(in, limits);
  std::vector<int> ranking(static_cast<std::size_t>(in.n));
  std::iota(ranking.begin(), ranking.end(), 0);
  BigInt count = 0;
  do {
    LinearOrder l(ranking);
    if (strict_refines(l, in.standings) && is_consistent(l, omega)) ++count;
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return count;
}

/// All linear orders fixed by sigma — empty for every non-identity sigma,
/// which is the impossibility theorem's engine stated where it is literally
/// checkable.
inline std::vector<LinearOrder> brute_fixed_linear_orders(
    const Permutation& sigma, const Limits& limits = Limits::defaults()) {
  detail::check_oracle_cap(sigma.n(), limits, "brute_fixed_linear_orders");
  std::vector<int> ranking(static_cast<std::size_t>(sigma.n()));
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<LinearOrder> fixed;
  do {
    LinearOrder l(ranking);
    if (act(sigma, l) == l) fixed.push_back(std::move(l));
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return fixed;
}

}  // namespace orbittie
