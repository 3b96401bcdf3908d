#pragma once

#include <string>
#include <vector>

#include "orbittie/infospace.hpp"
#include "orbittie/input.hpp"

namespace orbittie {

/// Built-in example inputs. The first five are the worked examples of the
/// tie-breaking framework (the cyclic voting profile, the paired-voter
/// profile, the rock-paper-scissors round robin, the Petersen graph, and the
/// four-vertex path whose automorphisms swap ends and middles);
/// "empty:<kind>:<n>" gives the globally fixed item of each kind with
/// all-tied standings.
inline Input builtin_example(const std::string& name) {
  auto tied_voting = [](int n, std::vector<std::vector<std::vector<int>>> ballots,
                        long long count) {
    std::vector<std::pair<WeakOrder, long long>> entries;
    for (auto& b : ballots) entries.emplace_back(WeakOrder(std::move(b)), count);
    return make_input(InfoItem(VotingProfile(n, entries)), WeakOrder::all_tied(n));
  };

  if (name == "condorcet") {
    // one ballot each of a>b>c, b>c>a, c>a>b
    return tied_voting(3, {{{0}, {1}, {2}}, {{1}, {2}, {0}}, {{2}, {0}, {1}}}, 1);
  }
  if (name == "two-pairs") {
    // two ballots each of a>b>c>d, b>a>c>d, a>b>d>c, b>a>d>c
    return tied_voting(4,
                       {{{0}, {1}, {2}, {3}},
                        {{1}, {0}, {2}, {3}},
                        {{0}, {1}, {3}, {2}},
                        {{1}, {0}, {3}, {2}}},
                       2);
  }
  if (name == "three-way") {
    // a beats b, b beats c, c beats a, and everyone beats d, all by +1
    std::vector<RoundRobinMatch> matches = {
        {0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 1}, {1, 3, 1}, {2, 3, 1}};
    return make_input(InfoItem(RoundRobinRecord(4, std::move(matches))),
                      WeakOrder({{0, 1, 2}, {3}}));
  }
  if (name == "petersen") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);          // outer cycle
      edges.emplace_back(i, i + 5);                // spokes
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    GraphEdges g(10, std::move(edges));
    WeakOrder standings = degree_standings(g);
    return make_input(InfoItem(std::move(g)), std::move(standings));
  }
  if (name == "path4") {
    // the path a-c-d-b; its automorphisms are the identity and (a b)(c d)
    return make_input(InfoItem(GraphEdges(4, {{0, 2}, {2, 3}, {3, 1}})), WeakOrder::all_tied(4));
  }
  if (name.rfind("empty:", 0) == 0) {
    auto second = name.find(':', 6);
    if (second != std::string::npos) {
      auto kind = kind_from_name(name.substr(6, second - 6));
      int n = 0;
      try {
        n = std::stoi(name.substr(second + 1));
      } catch (...) {
        n = 0;
      }
      if (kind && n >= 1 && n <= 20) {
        return make_input(fixed_point(*kind, n), WeakOrder::all_tied(n));
      }
    }
    throw ParseError("empty example must be \"empty:<kind>:<n>\" with 1 <= n <= 20");
  }
  throw ParseError("unknown example \"" + name +
                   "\" (known: condorcet, two-pairs, three-way, petersen, path4, "
                   "empty:<kind>:<n>)");
}

inline std::vector<std::string> builtin_example_names() {
  return {"condorcet", "two-pairs", "three-way", "petersen", "path4", "empty:<kind>:<n>"};
}

}  // namespace orbittie
