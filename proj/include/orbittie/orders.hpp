#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <vector>

#include "orbittie/errors.hpp"

namespace orbittie {

namespace detail {

// Checks that the given sets are disjoint, nonempty, and cover 0..n-1.
inline void check_covering(const std::vector<std::vector<int>>& sets, const char* what) {
  int n = 0;
  for (const auto& s : sets) n += static_cast<int>(s.size());
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const auto& s : sets) {
    if (s.empty()) throw PreconditionError(std::string(what) + ": empty class/block");
    for (int v : s) {
      if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
        throw PreconditionError(std::string(what) +
                                ": members do not partition the index set");
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
}

inline std::vector<int> member_to_group(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<int> g(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (int v : sets[k]) g[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  return g;
}

}  // namespace detail

/// A weak order (ranking with ties) on {0,...,n-1}, stored as its ordered
/// list of indifference classes, top class first. Members within a class are
/// kept sorted so equal orders have equal representations.
class WeakOrder {
public:
  WeakOrder() = default;

  explicit WeakOrder(std::vector<std::vector<int>> classes) : classes_(std::move(classes)) {
    for (auto& c : classes_) std::sort(c.begin(), c.end());
    detail::check_covering(classes_, "WeakOrder");
  }

  static WeakOrder all_tied(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return WeakOrder({all});
  }

  int n() const {
    int total = 0;
    for (const auto& c : classes_) total += static_cast<int>(c.size());
    return total;
  }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  /// class index of each player: 0 = top class.
  std::vector<int> class_of() const { return detail::member_to_group(classes_, n()); }

  /// x strictly above y?
  bool strictly_above(int x, int y) const {
    auto cls = class_of();
    return cls[static_cast<std::size_t>(x)] < cls[static_cast<std::size_t>(y)];
  }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  friend auto operator<=>(const WeakOrder& a, const WeakOrder& b) {
    return a.classes_ <=> b.classes_;
  }

private:
  std::vector<std::vector<int>> classes_;
};

/// A strict complete ranking of {0,...,n-1}, best first.
class LinearOrder {
public:
  LinearOrder() = default;

  explicit LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
    std::vector<bool> hit(ranking_.size(), false);
    for (int v : ranking_) {
      if (v < 0 || v >= n() || hit[static_cast<std::size_t>(v)]) {
        throw PreconditionError("LinearOrder: ranking is not a bijection");
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  int n() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }

  /// position of each player, 0 = best.
  std::vector<int> position_of() const {
    std::vector<int> pos(ranking_.size());
    for (std::size_t p = 0; p < ranking_.size(); ++p) {
      pos[static_cast<std::size_t>(ranking_[p])] = static_cast<int>(p);
    }
    return pos;
  }

  WeakOrder as_weak_order() const {
    std::vector<std::vector<int>> classes;
    classes.reserve(ranking_.size());
    for (int v : ranking_) classes.push_back({v});
    return WeakOrder(std::move(classes));
  }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

private:
  std::vector<int> ranking_;
};

/// A partition of {0,...,n-1}. Blocks are kept sorted internally and ordered
/// by least element, so equal partitions have equal representations.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    detail::check_covering(blocks_, "Partition");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  static Partition discrete(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return Partition(std::move(blocks));
  }

  static Partition trivial(int n) { return Partition({WeakOrder::all_tied(n).classes()[0]}); }

  int n() const {
    int total = 0;
    for (const auto& b : blocks_) total += static_cast<int>(b.size());
    return total;
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  std::vector<int> block_of() const { return detail::member_to_group(blocks_, n()); }

  bool is_discrete() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const auto& b) { return b.size() == 1; });
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.blocks_ <=> b.blocks_;
  }

private:
  std::vector<std::vector<int>> blocks_;
};

/// The partition of {0,...,n-1} into the indifference classes of W.
inline Partition indifference_partition(const WeakOrder& w) {
  return Partition(w.classes());
}

/// P refines Q: every block of P is contained in some block of Q.
inline bool refines(const Partition& p, const Partition& q) {
  if (p.n() != q.n()) throw DimensionError("refines: partitions of different sets");
  auto qb = q.block_of();
  for (const auto& block : p.blocks()) {
    int home = qb[static_cast<std::size_t>(block.front())];
    for (int v : block) {
      if (qb[static_cast<std::size_t>(v)] != home) return false;
    }
  }
  return true;
}

/// Every block of P occupies consecutive positions in L.
inline bool is_consistent(const LinearOrder& l, const Partition& p) {
  if (l.n() != p.n()) throw DimensionError("is_consistent: dimension mismatch");
  auto pos = l.position_of();
  for (const auto& block : p.blocks()) {
    int lo = l.n(), hi = -1;
    for (int v : block) {
      lo = std::min(lo, pos[static_cast<std::size_t>(v)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(v)]);
    }
    if (hi - lo + 1 != static_cast<int>(block.size())) return false;
  }
  return true;
}

namespace detail {

// set partitions of `members` via restricted-growth assignment
inline void set_partitions_of(const std::vector<int>& members,
                              std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> group(members.size(), 0);
  std::function<void(std::size_t, int)> descend = [&](std::size_t i, int groups) {
    if (i == members.size()) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(groups));
      for (std::size_t k = 0; k < members.size(); ++k) {
        blocks[static_cast<std::size_t>(group[k])].push_back(members[k]);
      }
      out.push_back(std::move(blocks));
      return;
    }
    for (int g = 0; g <= groups; ++g) {
      group[i] = g;
      descend(i + 1, std::max(groups, g + 1));
    }
  };
  descend(0, 0);
}

}  // namespace detail

/// All partitions refining `coarse` (the product of the set-partition
/// lattices of its blocks), in a deterministic order. Desk scale only;
/// refuses beyond `cap` results.
inline std::vector<Partition> refining_partitions(const Partition& coarse,
                                                  std::size_t cap = 100'000) {
  std::vector<std::vector<std::vector<std::vector<int>>>> per_block;
  for (const auto& block : coarse.blocks()) {
    per_block.emplace_back();
    detail::set_partitions_of(block, per_block.back());
  }
  std::vector<Partition> out;
  std::vector<std::size_t> pick(per_block.size(), 0);
  while (true) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t b = 0; b < per_block.size(); ++b) {
      const auto& chosen = per_block[b][pick[b]];
      blocks.insert(blocks.end(), chosen.begin(), chosen.end());
    }
    out.push_back(Partition(std::move(blocks)));
    if (out.size() > cap) {
      throw ResourceLimitError("refining_partitions: too many partitions to enumerate");
    }
    std::size_t b = 0;
    while (b < per_block.size() && ++pick[b] == per_block[b].size()) {
      pick[b] = 0;
      ++b;
    }
    if (b == per_block.size()) break;
  }
  return out;
}

/// Every comparison settled strictly by W is preserved by L.
inline bool strict_refines(const LinearOrder& l, const WeakOrder& w) {
  if (l.n() != w.n()) throw DimensionError("strict_refines: dimension mismatch");
  auto cls = w.class_of();
  // Positions in the ranking must be weakly increasing in class index,
  // exactly when no settled pair is reversed.
  int worst_seen = -1;
  for (int v : l.ranking()) {
    int c = cls[static_cast<std::size_t>(v)];
    if (c < worst_seen) return false;
    worst_seen = std::max(worst_seen, c);
  }
  return true;
}

}  // namespace orbittie
