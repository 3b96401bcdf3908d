#pragma once

#include <set>
#include <string>
#include <vector>

#include "orbittie/infospace.hpp"
#include "orbittie/orders.hpp"

namespace orbittie {

/// A tie-breaking problem: auxiliary data plus the standings to refine.
/// Labels name the player indices (index order = file order, never
/// alphabetical); all computation is index-based.
struct Input {
  int n = 0;
  std::vector<std::string> labels;
  InfoItem item;
  WeakOrder standings;

  int index_of(const std::string& label) const {
    for (int i = 0; i < n; ++i) {
      if (labels[static_cast<std::size_t>(i)] == label) return i;
    }
    throw ParseError("unknown player label: " + label);
  }

  const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Input&, const Input&) = default;
};

/// "a", "b", ..., "z", then "p26", "p27", ...
inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      labels.push_back("p" + std::to_string(i));
    }
  }
  return labels;
}

/// Validating constructor: checks label uniqueness, standings coverage, and
/// the item's kind-specific invariants. Throws ValidationError with the full
/// violation list.
inline Input make_input(std::vector<std::string> labels, InfoItem item, WeakOrder standings) {
  int n = static_cast<int>(labels.size());
  std::vector<std::string> bad;
  if (n < 1) bad.push_back("at least one player required");
  std::set<std::string> unique(labels.begin(), labels.end());
  if (static_cast<int>(unique.size()) != n) bad.push_back("duplicate player labels");
  if (standings.n() != n) {
    bad.push_back("standings must cover all players exactly once");
  }
  auto item_bad = validate(item, n, &labels);
  bad.insert(bad.end(), item_bad.begin(), item_bad.end());
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return Input{n, std::move(labels), std::move(item), std::move(standings)};
}

inline Input make_input(InfoItem item, WeakOrder standings) {
  int n = standings.n();
  return make_input(default_labels(n), std::move(item), std::move(standings));
}

/// Diagonal action: relabel auxiliary data and standings together.
inline Input act_input(const Permutation& sigma, const Input& in) {
  return Input{in.n, in.labels, act_item(sigma, in.item), act(sigma, in.standings)};
}

}  // namespace orbittie
