#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbittie/input.hpp"
#include "orbittie/orders.hpp"
#include "orbittie/stabilizer.hpp"

namespace orbittie {

using BigInt = boost::multiprecision::cpp_int;

/// The arbitrary data of a strict tie-breaking rule at one input: a linear
/// order inside every orbit block (beta) and, per indifference class, a
/// linear order on the orbit blocks it contains (gamma).
struct Completion {
  std::map<std::vector<int>, std::vector<int>> beta;  // block (sorted) -> its members, best first
  std::vector<std::vector<std::vector<int>>> gamma;   // per class: blocks, best first

  friend bool operator==(const Completion&, const Completion&) = default;
};

/// Per-class linear orders on the blocks of an arbitrary partition refining
/// the standings' indifference partition (the gamma shape, detached from
/// orbit partitions).
struct BlockOrderingDelta {
  std::vector<std::vector<std::vector<int>>> per_class;

  friend bool operator==(const BlockOrderingDelta&, const BlockOrderingDelta&) = default;
};

namespace detail {

// blocks of `p` lying inside each class of `w`, in canonical block order
inline std::vector<std::vector<std::vector<int>>> blocks_by_class(const Partition& p,
                                                                  const WeakOrder& w) {
  auto cls = w.class_of();
  std::vector<std::vector<std::vector<int>>> out(w.classes().size());
  for (const auto& block : p.blocks()) {
    out[static_cast<std::size_t>(cls[static_cast<std::size_t>(block.front())])].push_back(block);
  }
  return out;
}

inline std::string block_name(const std::vector<int>& block,
                              const std::vector<std::string>* labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ",";
    out += player_name(block[i], labels);
  }
  return out + "}";
}

}  // namespace detail

/// Shape check: beta covers exactly the orbit blocks, gamma covers exactly
/// the standings classes and orders exactly the blocks each class contains.
inline std::vector<std::string> validate_completion(
    const Completion& c, const Partition& omega, const WeakOrder& standings,
    const std::vector<std::string>* labels = nullptr) {
  std::vector<std::string> bad;
  std::set<std::vector<int>> expected(omega.blocks().begin(), omega.blocks().end());
  for (const auto& [block, order] : c.beta) {
    if (!expected.count(block)) {
      bad.push_back("beta orders " + detail::block_name(block, labels) +
                    ", which is not an orbit block");
      continue;
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != block) {
      bad.push_back("beta order for " + detail::block_name(block, labels) +
                    " does not rank exactly that block's members");
    }
  }
  for (const auto& block : omega.blocks()) {
    if (!c.beta.count(block)) {
      bad.push_back("beta missing for block " + detail::block_name(block, labels));
    }
  }

  auto per_class = detail::blocks_by_class(omega, standings);
  if (c.gamma.size() != per_class.size()) {
    bad.push_back("gamma must order blocks for each of the " +
                  std::to_string(per_class.size()) + " indifference classes");
    return bad;
  }
  for (std::size_t e = 0; e < per_class.size(); ++e) {
    std::set<std::vector<int>> want(per_class[e].begin(), per_class[e].end());
    std::set<std::vector<int>> got;
    for (const auto& block : c.gamma[e]) {
      std::vector<int> canon = block;
      std::sort(canon.begin(), canon.end());
      if (!want.count(canon)) {
        bad.push_back("gamma for class " + std::to_string(e) + " lists " +
                      detail::block_name(block, labels) + ", not an orbit block of that class");
      } else if (!got.insert(canon).second) {
        bad.push_back("gamma for class " + std::to_string(e) + " repeats " +
                      detail::block_name(block, labels));
      }
    }
    if (got.size() != want.size()) {
      bad.push_back("gamma for class " + std::to_string(e) + " must order exactly its " +
                    std::to_string(want.size()) + " orbit blocks");
    }
  }
  return bad;
}

/// The lift: classes as the standings order them, blocks within a class as
/// gamma orders them, members within a block as beta orders them. The result
/// strictly refines the standings and is consistent with the orbit partition.
inline LinearOrder lift(const Completion& c, const Partition& omega,
                        const WeakOrder& standings) {
  auto bad = validate_completion(c, omega, standings);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  std::vector<int> ranking;
  ranking.reserve(static_cast<std::size_t>(standings.n()));
  for (const auto& blocks : c.gamma) {
    for (const auto& block : blocks) {
      std::vector<int> canon = block;
      std::sort(canon.begin(), canon.end());
      const auto& order = c.beta.at(canon);
      ranking.insert(ranking.end(), order.begin(), order.end());
    }
  }
  return LinearOrder(std::move(ranking));
}

/// Reads the completion back off a partition-consistent refining ranking:
/// beta is the ranking restricted to each block, gamma orders blocks by the
/// position of any representative (well-defined because blocks are
/// non-interleaved intervals). Rejects rankings outside the bijection's
/// domain instead of repairing them.
inline Completion extract_completion(const LinearOrder& t, const Partition& omega,
                                     const WeakOrder& standings,
                                     const std::vector<std::string>* labels = nullptr) {
  if (!strict_refines(t, standings)) {
    auto cls = standings.class_of();
    auto pos = t.position_of();
    for (int x = 0; x < t.n(); ++x) {
      for (int y = 0; y < t.n(); ++y) {
        if (cls[static_cast<std::size_t>(x)] < cls[static_cast<std::size_t>(y)] &&
            pos[static_cast<std::size_t>(x)] > pos[static_cast<std::size_t>(y)]) {
          throw PreconditionError("ranking reverses the settled comparison " +
                                  detail::player_name(x, labels) + " above " +
                                  detail::player_name(y, labels));
        }
      }
    }
  }
  if (!is_consistent(t, omega)) {
    auto pos = t.position_of();
    auto in_block = omega.block_of();
    for (const auto& block : omega.blocks()) {
      int lo = t.n(), hi = -1;
      for (int v : block) {
        lo = std::min(lo, pos[static_cast<std::size_t>(v)]);
        hi = std::max(hi, pos[static_cast<std::size_t>(v)]);
      }
      if (hi - lo + 1 == static_cast<int>(block.size())) continue;
      for (int p = lo; p <= hi; ++p) {
        int z = t.ranking()[static_cast<std::size_t>(p)];
        if (in_block[static_cast<std::size_t>(z)] !=
            in_block[static_cast<std::size_t>(block.front())]) {
          throw PreconditionError("block " + detail::block_name(block, labels) + " split by " +
                                  detail::player_name(z, labels));
        }
      }
    }
  }

  auto pos = t.position_of();
  Completion c;
  for (const auto& block : omega.blocks()) {
    std::vector<int> order = block;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    });
    c.beta[block] = std::move(order);
  }
  auto per_class = detail::blocks_by_class(omega, standings);
  c.gamma.resize(per_class.size());
  for (std::size_t e = 0; e < per_class.size(); ++e) {
    auto blocks = per_class[e];
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
      return pos[static_cast<std::size_t>(a.front())] < pos[static_cast<std::size_t>(b.front())];
    });
    c.gamma[e] = std::move(blocks);
  }
  return c;
}

/// true iff every comparison settled strictly by `coarse` is preserved
/// strictly by `fine` (weak-order refinement).
inline bool weak_refines(const WeakOrder& fine, const WeakOrder& coarse) {
  if (fine.n() != coarse.n()) throw DimensionError("weak_refines: dimension mismatch");
  auto cf = fine.class_of();
  auto cc = coarse.class_of();
  for (int x = 0; x < fine.n(); ++x) {
    for (int y = 0; y < fine.n(); ++y) {
      if (cc[static_cast<std::size_t>(x)] < cc[static_cast<std::size_t>(y)] &&
          cf[static_cast<std::size_t>(x)] >= cf[static_cast<std::size_t>(y)]) {
        return false;
      }
    }
  }
  return true;
}

/// Forward half of the weak-order bijection: a partition refining the
/// standings' classes plus per-class block orders determines the refining
/// weak order whose classes are the partition's blocks.
inline WeakOrder weak_from_pair(const Partition& p, const BlockOrderingDelta& delta,
                                const WeakOrder& w) {
  if (!refines(p, indifference_partition(w))) {
    throw PreconditionError("weak_from_pair: partition does not refine the standings classes");
  }
  auto per_class = detail::blocks_by_class(p, w);
  if (delta.per_class.size() != per_class.size()) {
    throw PreconditionError("weak_from_pair: delta does not match the class count");
  }
  std::vector<std::vector<int>> classes;
  classes.reserve(p.blocks().size());
  for (std::size_t e = 0; e < per_class.size(); ++e) {
    std::set<std::vector<int>> want(per_class[e].begin(), per_class[e].end());
    std::set<std::vector<int>> got;
    for (const auto& block : delta.per_class[e]) {
      std::vector<int> canon = block;
      std::sort(canon.begin(), canon.end());
      if (!want.count(canon) || !got.insert(canon).second) {
        throw PreconditionError("weak_from_pair: delta for class " + std::to_string(e) +
                                " does not order exactly that class's blocks");
      }
      classes.push_back(std::move(canon));
    }
    if (got.size() != want.size()) {
      throw PreconditionError("weak_from_pair: delta for class " + std::to_string(e) +
                              " does not order exactly that class's blocks");
    }
  }
  return WeakOrder(std::move(classes));
}

/// Inverse half: reads (Part(V), induced block ordering) off a refining weak
/// order V. Round trips with weak_from_pair in both directions.
inline std::pair<Partition, BlockOrderingDelta> pair_from_weak(const WeakOrder& v,
                                                               const WeakOrder& w) {
  if (!weak_refines(v, w)) {
    throw PreconditionError("pair_from_weak: the first order does not refine the second");
  }
  Partition p = indifference_partition(v);
  auto cls_v = v.class_of();
  auto per_class = detail::blocks_by_class(p, w);
  BlockOrderingDelta delta;
  delta.per_class.resize(per_class.size());
  for (std::size_t e = 0; e < per_class.size(); ++e) {
    auto blocks = per_class[e];
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
      return cls_v[static_cast<std::size_t>(a.front())] <
             cls_v[static_cast<std::size_t>(b.front())];
    });
    delta.per_class[e] = std::move(blocks);
  }
  return {std::move(p), std::move(delta)};
}

/// Number of partition-consistent strict rankings at this input: free choices
/// are the orders within blocks and the block orders within classes.
inline BigInt count_consistent_rules(const Partition& omega, const WeakOrder& standings) {
  auto factorial = [](std::size_t k) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned>(i);
    return f;
  };
  BigInt count = 1;
  for (const auto& block : omega.blocks()) count *= factorial(block.size());
  for (const auto& blocks : detail::blocks_by_class(omega, standings)) {
    count *= factorial(blocks.size());
  }
  return count;
}

struct AxiomCheck {
  bool saturated = false;       // orbit partition refines the output
  bool maximally_fine = false;  // output refines the orbit partition
};

/// Both axioms hold together exactly when the output equals the orbit
/// partition; the check requires the output to be a legal rule value
/// (refining the standings classes).
inline AxiomCheck check_axioms(const Partition& p_out, const Partition& omega,
                               const WeakOrder& standings) {
  if (!refines(p_out, indifference_partition(standings))) {
    throw PreconditionError(
        "check_axioms: partition does not refine the standings classes, so it is not a "
        "tie-breaking rule output");
  }
  return AxiomCheck{refines(omega, p_out), refines(p_out, omega)};
}

/// The deterministic stand-in for external tie-breaking data: within blocks
/// by label ascending, blocks by least label ascending. Everything this
/// completion decides is arbitrary in the paper's sense, and reports tag it
/// as such.
inline Completion default_completion(const Partition& omega, const WeakOrder& standings,
                                     const std::vector<std::string>& labels) {
  auto by_label = [&](int a, int b) {
    return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
  };
  Completion c;
  for (const auto& block : omega.blocks()) {
    std::vector<int> order = block;
    std::sort(order.begin(), order.end(), by_label);
    c.beta[block] = std::move(order);
  }
  auto per_class = detail::blocks_by_class(omega, standings);
  c.gamma.resize(per_class.size());
  for (std::size_t e = 0; e < per_class.size(); ++e) {
    auto blocks = per_class[e];
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
      return labels[static_cast<std::size_t>(
                 *std::min_element(a.begin(), a.end(), by_label))] <
             labels[static_cast<std::size_t>(*std::min_element(b.begin(), b.end(), by_label))];
    });
    c.gamma[e] = std::move(blocks);
  }
  return c;
}

// Input-level conveniences: derive the orbit partition, then delegate.

inline std::vector<std::string> validate_completion(const Completion& c, const Input& in,
                                                    const Limits& limits = Limits::defaults()) {
  return validate_completion(c, orbit_partition(in, limits), in.standings, &in.labels);
}

inline LinearOrder lift(const Completion& c, const Input& in,
                        const Limits& limits = Limits::defaults()) {
  return lift(c, orbit_partition(in, limits), in.standings);
}

inline Completion extract_completion(const LinearOrder& t, const Input& in,
                                     const Limits& limits = Limits::defaults()) {
  return extract_completion(t, orbit_partition(in, limits), in.standings, &in.labels);
}

inline BigInt count_consistent_rules(const Input& in, const Limits& limits = Limits::defaults()) {
  return count_consistent_rules(orbit_partition(in, limits), in.standings);
}

inline AxiomCheck check_axioms(const Partition& p_out, const Input& in,
                               const Limits& limits = Limits::defaults()) {
  return check_axioms(p_out, orbit_partition(in, limits), in.standings);
}

inline Completion default_completion(const Input& in, const Limits& limits = Limits::defaults()) {
  return default_completion(orbit_partition(in, limits), in.standings, in.labels);
}

}  // namespace orbittie
