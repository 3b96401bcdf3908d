#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbittie/group.hpp"
#include "orbittie/infospace.hpp"
#include "orbittie/input.hpp"

namespace orbittie {

namespace detail {

/// Per-player invariant signatures: if some stabilizing permutation maps x to
/// y then sig(x) = sig(y), so candidate images can be restricted to equal
/// signatures. Cheap necessary conditions only; the search's exact leaf test
/// is what accepts an element.
inline std::vector<std::string> player_signatures(const InfoItem& item,
                                                  const std::vector<int>& class_of) {
  int n = item.n();
  std::vector<std::string> sig(static_cast<std::size_t>(n));
  switch (item.kind()) {
    case InfoKind::swiss: {
      const auto& s = item.as<SwissRecord>();
      for (int x = 0; x < n; ++x) {
        std::vector<std::tuple<int, int, int, int>> entries;
        for (const auto& g : s.games()) {
          if (g.white == x) {
            entries.emplace_back(g.round, static_cast<int>(g.result), 0,
                                 class_of[static_cast<std::size_t>(g.black)]);
          } else if (g.black == x) {
            entries.emplace_back(g.round, static_cast<int>(flip(g.result)), 1,
                                 class_of[static_cast<std::size_t>(g.white)]);
          }
        }
        std::sort(entries.begin(), entries.end());
        std::ostringstream os;
        for (const auto& [t, r, c, oc] : entries) os << t << ':' << r << ':' << c << ':' << oc << ';';
        sig[static_cast<std::size_t>(x)] = os.str();
      }
      break;
    }
    case InfoKind::roundrobin: {
      const auto& h = item.as<RoundRobinRecord>().matrix();
      for (int x = 0; x < n; ++x) {
        std::vector<std::pair<int, long long>> entries;
        for (int z = 0; z < n; ++z) {
          if (z == x) continue;
          entries.emplace_back(class_of[static_cast<std::size_t>(z)],
                               h[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)]);
        }
        std::sort(entries.begin(), entries.end());
        std::ostringstream os;
        for (const auto& [c, d] : entries) os << c << ':' << d << ';';
        sig[static_cast<std::size_t>(x)] = os.str();
      }
      break;
    }
    case InfoKind::voting:
      // No per-player pruning beyond the indifference class; ballots are
      // global objects and the exact leaf test carries the weight.
      break;
    case InfoKind::coalition: {
      const auto& c = item.as<CoalitionValues>();
      std::uint32_t full = (1u << n) - 1u;
      for (int x = 0; x < n; ++x) {
        std::uint32_t xbit = 1u << x;
        std::vector<std::pair<int, Rational>> increments;
        for (std::uint32_t s = 0; s <= full; ++s) {
          if (s & xbit) continue;
          increments.emplace_back(std::popcount(s), c.value(s | xbit) - c.value(s));
          if (s == full) break;
        }
        std::sort(increments.begin(), increments.end());
        std::ostringstream os;
        for (const auto& [size, inc] : increments) os << size << ':' << format_rational(inc) << ';';
        sig[static_cast<std::size_t>(x)] = os.str();
      }
      break;
    }
    case InfoKind::graph: {
      const auto& g = item.as<GraphEdges>();
      int classes = 0;
      for (int ci : class_of) classes = std::max(classes, ci + 1);
      std::vector<std::vector<int>> neighbor_classes(
          static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(classes), 0));
      for (const auto& [u, v] : g.edges()) {
        if (u == v) continue;
        ++neighbor_classes[static_cast<std::size_t>(u)]
                          [static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
        ++neighbor_classes[static_cast<std::size_t>(v)]
                          [static_cast<std::size_t>(class_of[static_cast<std::size_t>(u)])];
      }
      for (int x = 0; x < n; ++x) {
        std::ostringstream os;
        for (int cnt : neighbor_classes[static_cast<std::size_t>(x)]) os << cnt << ';';
        sig[static_cast<std::size_t>(x)] = os.str();
      }
      break;
    }
  }
  return sig;
}

/// Incremental feasibility of extending a partial class-preserving map with
/// x -> y, given the players already assigned. Sound necessary conditions of
/// sigma.h = h restricted to assigned points; never accepts on its own.
class PrefixChecker {
public:
  explicit PrefixChecker(const InfoItem& item) : item_(item) {
    switch (item.kind()) {
      case InfoKind::graph:
        adj_ = item.as<GraphEdges>().adjacency();
        break;
      case InfoKind::roundrobin:
        matrix_ = item.as<RoundRobinRecord>().matrix();
        break;
      case InfoKind::swiss: {
        const auto& s = item.as<SwissRecord>();
        int n = item.n();
        pair_records_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            if (x != y) pair_records_[index(x, y)] = s.pair_record(x, y);
          }
        }
        break;
      }
      default:
        break;
    }
  }

  bool ok(int x, int y, const std::vector<int>& img, const std::vector<int>& assigned) const {
    switch (item_.kind()) {
      case InfoKind::graph:
        for (int p : assigned) {
          if (adj_[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] !=
              adj_[static_cast<std::size_t>(y)][static_cast<std::size_t>(img[static_cast<std::size_t>(p)])]) {
            return false;
          }
        }
        return true;
      case InfoKind::roundrobin:
        for (int p : assigned) {
          if (matrix_[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] !=
              matrix_[static_cast<std::size_t>(y)][static_cast<std::size_t>(img[static_cast<std::size_t>(p)])]) {
            return false;
          }
        }
        return true;
      case InfoKind::swiss:
        for (int p : assigned) {
          if (pair_records_[index(x, p)] !=
              pair_records_[index(y, img[static_cast<std::size_t>(p)])]) {
            return false;
          }
        }
        return true;
      case InfoKind::coalition: {
        // Every subset of already-assigned players, extended by x, must keep
        // its worth under the partial image map.
        const auto& c = item_.as<CoalitionValues>();
        std::size_t k = assigned.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          std::uint32_t domain = 1u << x;
          std::uint32_t image = 1u << y;
          for (std::size_t j = 0; j < k; ++j) {
            if (mask & (1u << j)) {
              domain |= 1u << assigned[j];
              image |= 1u << img[static_cast<std::size_t>(assigned[j])];
            }
          }
          if (c.value(domain) != c.value(image)) return false;
        }
        return true;
      }
      case InfoKind::voting:
        return true;
    }
    return true;
  }

private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(item_.n()) +
           static_cast<std::size_t>(y);
  }

  const InfoItem& item_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<long long>> matrix_;
  std::vector<std::vector<std::tuple<int, int, int>>> pair_records_;
};

}  // namespace detail

/// All permutations fixing both the auxiliary data and the standings,
/// found by backtracking over class-preserving maps (any permutation fixing
/// the standings preserves each indifference class, and conversely), with
/// signature and prefix pruning. Acceptance of an element is always the
/// exact test sigma.h = h, so pruning cannot produce wrong answers.
/// Returns a canonical generator set with orbit witnesses.
inline PermGroup joint_stabilizer(const Input& in, const Limits& limits = Limits::defaults()) {
  int n = in.n;
  auto class_of = in.standings.class_of();
  auto sig = detail::player_signatures(in.item, class_of);
  detail::PrefixChecker prefix(in.item);

  // Candidate images per player: same class, same signature.
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y : in.standings.classes()[static_cast<std::size_t>(
             class_of[static_cast<std::size_t>(x)])]) {
      if (sig[static_cast<std::size_t>(x)] == sig[static_cast<std::size_t>(y)]) {
        candidates[static_cast<std::size_t>(x)].push_back(y);
      }
    }
  }

  // Assign players class by class in index order.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (const auto& cls : in.standings.classes()) {
    for (int x : cls) order.push_back(x);
  }

  std::set<Permutation> found;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> assigned;
  assigned.reserve(static_cast<std::size_t>(n));
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      Permutation sigma(img);
      if (items_equal(act_item(sigma, in.item), in.item)) found.insert(std::move(sigma));
      return;
    }
    int x = order[depth];
    for (int y : candidates[static_cast<std::size_t>(x)]) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (++nodes > limits.search_nodes) {
        throw ResourceLimitError("joint stabilizer search exceeded the node cap (" +
                                 std::to_string(limits.search_nodes) + ")");
      }
      if (!prefix.ok(x, y, img, assigned)) continue;
      img[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      assigned.push_back(x);
      descend(depth + 1);
      assigned.pop_back();
      used[static_cast<std::size_t>(y)] = false;
      img[static_cast<std::size_t>(x)] = -1;
    }
  };
  descend(0);

  return group_from_elements(n, found);
}

/// Omega(h, standings): the partition of players into orbits of the joint
/// stabilizer. Always refines the indifference partition of the standings.
inline Partition orbit_partition(const Input& in, const Limits& limits = Limits::defaults()) {
  return joint_stabilizer(in, limits).orbits();
}

/// Two distinct players exchanged by an intrinsic symmetry of the input.
struct SymmetricWitness {
  int x = 0;
  int y = 0;
  Permutation sigma;
};

/// A witness from the first non-singleton orbit block (canonical block
/// order), or nullopt when every orbit is a singleton.
inline std::optional<SymmetricWitness> symmetric_witness(
    const Input& in, const Limits& limits = Limits::defaults()) {
  PermGroup stab = joint_stabilizer(in, limits);
  for (const auto& block : stab.orbits().blocks()) {
    if (block.size() < 2) continue;
    int x = block[0];
    int y = block[1];
    auto sigma = stab.witness(x, y);
    return SymmetricWitness{x, y, *sigma};
  }
  return std::nullopt;
}

/// Executable form of the no-fixed-linear-order argument: for a non-identity
/// sigma and any linear order L, walking the sigma-cycle of a moved point
/// would force the descending chain x > sigma(x) > sigma^2(x) > ... > x if L
/// were sigma-invariant. The certificate pins the concrete link where the
/// probe order L breaks the chain, which exhibits sigma.L != L.
struct FixedOrderCertificate {
  Permutation sigma;
  LinearOrder probe;                  // a concrete linear order refining the standings
  std::vector<int> cycle;             // sigma-orbit of the least moved point
  int broken_link = 0;                // L disagrees with the sigma-image of link broken_link-1
  std::uint64_t orders_checked = 0;   // full sweep of L(N) when n <= 6

  /// "a > b > a" style rendering of the impossible chain.
  std::string chain_string(const std::vector<std::string>& labels) const {
    std::string out;
    for (int v : cycle) {
      out += labels[static_cast<std::size_t>(v)];
      out += " > ";
    }
    out += labels[static_cast<std::size_t>(cycle.front())];
    return out;
  }
};

inline FixedOrderCertificate verify_no_fixed_linear_order(const Permutation& sigma,
                                                          const WeakOrder& w) {
  if (sigma.n() != w.n()) {
    throw DimensionError("verify_no_fixed_linear_order: dimension mismatch");
  }
  if (sigma.is_identity()) {
    throw PreconditionError(
        "verify_no_fixed_linear_order: the identity fixes every linear order");
  }
  int n = w.n();

  // Concrete probe: the standings linearized in index order.
  std::vector<int> ranking;
  ranking.reserve(static_cast<std::size_t>(n));
  for (const auto& cls : w.classes()) {
    for (int v : cls) ranking.push_back(v);
  }
  LinearOrder probe(std::move(ranking));
  auto pos = probe.position_of();

  int x0 = 0;
  while (sigma(x0) == x0) ++x0;
  std::vector<int> cycle{x0};
  for (int v = sigma(x0); v != x0; v = sigma(v)) cycle.push_back(v);

  // Around the closed cycle the probe's comparisons cannot all point the
  // same way, so adjacent links with opposite directions exist; the first
  // such pair is the certificate.
  std::size_t m = cycle.size();
  auto dir = [&](std::size_t i) {
    return pos[static_cast<std::size_t>(cycle[i])] <
           pos[static_cast<std::size_t>(cycle[(i + 1) % m])];
  };
  int broken = -1;
  for (std::size_t i = 1; i < m; ++i) {
    if (dir(i) != dir(i - 1)) {
      broken = static_cast<int>(i);
      break;
    }
  }
  if (broken == -1) {
    // would require every link of a closed cycle to descend, i.e. x > x
    throw std::logic_error("linear order contains a monotone closed cycle");
  }

  FixedOrderCertificate cert{sigma, probe, std::move(cycle), broken, 0};

  if (n <= 6) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      LinearOrder l(perm);
      if (act(sigma, l) == l) {
        throw PreconditionError("a non-identity permutation fixed a linear order");
      }
      ++cert.orders_checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cert;
}

}  // namespace orbittie
