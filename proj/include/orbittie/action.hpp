#pragma once

#include <vector>

#include "orbittie/orders.hpp"
#include "orbittie/perm.hpp"

namespace orbittie {

namespace detail {

inline void check_degree(const Permutation& sigma, int n, const char* what) {
  if (sigma.n() != n) {
    throw DimensionError(std::string(what) + ": permutation degree does not match object");
  }
}

inline std::vector<std::vector<int>> map_groups(const Permutation& sigma,
                                                const std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    std::vector<int> img;
    img.reserve(g.size());
    for (int v : g) img.push_back(sigma(v));
    out.push_back(std::move(img));
  }
  return out;
}

}  // namespace detail

/// Relabeling action: x (sigma.W) y iff sigma^-1(x) W sigma^-1(y). In class
/// form this is the image of each class, class order unchanged.
inline WeakOrder act(const Permutation& sigma, const WeakOrder& w) {
  detail::check_degree(sigma, w.n(), "act(WeakOrder)");
  return WeakOrder(detail::map_groups(sigma, w.classes()));
}

inline LinearOrder act(const Permutation& sigma, const LinearOrder& l) {
  detail::check_degree(sigma, l.n(), "act(LinearOrder)");
  std::vector<int> r;
  r.reserve(l.ranking().size());
  for (int v : l.ranking()) r.push_back(sigma(v));
  return LinearOrder(std::move(r));
}

/// sigma.P = { sigma(B) : B in P }.
inline Partition act(const Permutation& sigma, const Partition& p) {
  detail::check_degree(sigma, p.n(), "act(Partition)");
  return Partition(detail::map_groups(sigma, p.blocks()));
}

}  // namespace orbittie
