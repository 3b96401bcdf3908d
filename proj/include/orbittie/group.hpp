#pragma once

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "orbittie/errors.hpp"
#include "orbittie/orders.hpp"
#include "orbittie/perm.hpp"

namespace orbittie {

/// A permutation group on {0,...,n-1} given by generators. Generators are
/// deduplicated, identity-free, and kept in lexicographic order on image
/// arrays so serialized output is deterministic.
///
/// Orbit structure is computed once at construction: for every point p a
/// transversal element u_p (a product of generators and their inverses)
/// carries the orbit root to p, which is all the witness machinery needs:
/// witness(x, y) = u_y . u_x^-1 maps x to y whenever x, y share an orbit.
class PermGroup {
public:
  explicit PermGroup(int n, std::vector<Permutation> generators = {}) : n_(n) {
    for (auto& g : generators) {
      if (g.n() != n_) throw DimensionError("PermGroup: generator degree mismatch");
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()),
                      generators_.end());
    build_orbits();
  }

  int n() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

  /// The partition of {0,...,n-1} into orbits.
  const Partition& orbits() const { return orbits_; }

  /// Some group element mapping x to y, or nullopt when x, y lie in
  /// different orbits. The result is a product of generator transversals.
  std::optional<Permutation> witness(int x, int y) const {
    if (root_[static_cast<std::size_t>(x)] != root_[static_cast<std::size_t>(y)]) {
      return std::nullopt;
    }
    return compose(transversal_[static_cast<std::size_t>(y)],
                   invert(transversal_[static_cast<std::size_t>(x)]));
  }

  /// Full element enumeration (breadth-first products of generators).
  /// Throws ResourceLimitError beyond `cap` elements.
  std::set<Permutation> closure(std::uint64_t cap) const {
    std::set<Permutation> seen;
    std::deque<Permutation> todo;
    seen.insert(Permutation::identity(n_));
    todo.push_back(Permutation::identity(n_));
    while (!todo.empty()) {
      Permutation cur = std::move(todo.front());
      todo.pop_front();
      for (const auto& g : generators_) {
        Permutation next = compose(g, cur);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            throw ResourceLimitError("group closure exceeds configured element cap");
          }
          todo.push_back(std::move(next));
        }
      }
    }
    return seen;
  }

  std::uint64_t order(std::uint64_t cap) const { return closure(cap).size(); }

  bool contains(const Permutation& sigma, std::uint64_t cap) const {
    return closure(cap).count(sigma) > 0;
  }

  /// Same element set as `other`?
  bool same_group(const PermGroup& other, std::uint64_t cap) const {
    return n_ == other.n_ && closure(cap) == other.closure(cap);
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_;
  }

private:
  void build_orbits() {
    transversal_.assign(static_cast<std::size_t>(n_), Permutation::identity(n_));
    root_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < n_; ++start) {
      if (root_[static_cast<std::size_t>(start)] != -1) continue;
      std::vector<int> orbit{start};
      root_[static_cast<std::size_t>(start)] = start;
      std::deque<int> frontier{start};
      while (!frontier.empty()) {
        int p = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators_) {
          int q = g(p);
          if (root_[static_cast<std::size_t>(q)] == -1) {
            root_[static_cast<std::size_t>(q)] = start;
            transversal_[static_cast<std::size_t>(q)] =
                compose(g, transversal_[static_cast<std::size_t>(p)]);
            orbit.push_back(q);
            frontier.push_back(q);
          }
        }
      }
      blocks.push_back(std::move(orbit));
    }
    orbits_ = Partition(std::move(blocks));
  }

  int n_ = 0;
  std::vector<Permutation> generators_;
  Partition orbits_;
  std::vector<Permutation> transversal_;  // root of orbit -> point
  std::vector<int> root_;                 // orbit root of each point
};

inline Partition orbits_of(const PermGroup& g) { return g.orbits(); }

/// Reduces a full element set to a canonical generator list: scan elements in
/// lexicographic order and keep those not yet generated. Deterministic, and
/// small in practice at desk scale.
inline PermGroup group_from_elements(int n, const std::set<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::set<Permutation> have{Permutation::identity(n)};
  for (const auto& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    have = PermGroup(n, gens).closure(elements.size() + 1);
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace orbittie
