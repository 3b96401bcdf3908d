#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "orbittie/action.hpp"
#include "orbittie/orders.hpp"
#include "orbittie/perm.hpp"
#include "orbittie/rational.hpp"

namespace orbittie {

enum class InfoKind { swiss, roundrobin, voting, coalition, graph };

inline const char* kind_name(InfoKind k) {
  switch (k) {
    case InfoKind::swiss: return "swiss";
    case InfoKind::roundrobin: return "roundrobin";
    case InfoKind::voting: return "voting";
    case InfoKind::coalition: return "coalition";
    case InfoKind::graph: return "graph";
  }
  return "?";
}

inline std::optional<InfoKind> kind_from_name(const std::string& s) {
  for (InfoKind k : {InfoKind::swiss, InfoKind::roundrobin, InfoKind::voting,
                     InfoKind::coalition, InfoKind::graph}) {
    if (s == kind_name(k)) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Swiss pairing-and-result record.
// ---------------------------------------------------------------------------

enum class GameResult { win, draw, loss };  // from white's perspective

inline GameResult flip(GameResult r) {
  switch (r) {
    case GameResult::win: return GameResult::loss;
    case GameResult::loss: return GameResult::win;
    default: return GameResult::draw;
  }
}

struct SwissGame {
  int round = 0;
  int white = 0;
  int black = 0;
  GameResult result = GameResult::draw;

  friend bool operator==(const SwissGame&, const SwissGame&) = default;
  friend auto operator<=>(const SwissGame& a, const SwissGame& b) {
    return std::tie(a.round, a.white, a.black, a.result) <=>
           std::tie(b.round, b.white, b.black, b.result);
  }
};

/// Each played game is stored exactly once, from the white player's
/// perspective; the mirrored entry of the pairing function is derived, never
/// stored, so the pairing consistency condition holds by construction.
/// Unpaired (player, opponent, round) triples derive to "no game".
class SwissRecord {
public:
  SwissRecord() = default;
  SwissRecord(int n, int rounds, std::vector<SwissGame> games)
      : n_(n), rounds_(rounds), games_(std::move(games)) {
    std::sort(games_.begin(), games_.end());
  }

  int n() const { return n_; }
  int rounds() const { return rounds_; }
  const std::vector<SwissGame>& games() const { return games_; }

  /// Rounds in which x and y met, with x's result and color. Encoded as
  /// (round, result code for x, 0 = x had white / 1 = x had black), sorted.
  std::vector<std::tuple<int, int, int>> pair_record(int x, int y) const {
    std::vector<std::tuple<int, int, int>> rec;
    for (const auto& g : games_) {
      if (g.white == x && g.black == y) {
        rec.emplace_back(g.round, static_cast<int>(g.result), 0);
      } else if (g.white == y && g.black == x) {
        rec.emplace_back(g.round, static_cast<int>(flip(g.result)), 1);
      }
    }
    return rec;  // games_ is round-sorted already
  }

  friend bool operator==(const SwissRecord&, const SwissRecord&) = default;

private:
  int n_ = 0;
  int rounds_ = 0;
  std::vector<SwissGame> games_;
};

// ---------------------------------------------------------------------------
// Round-robin goal-difference record.
// ---------------------------------------------------------------------------

struct RoundRobinMatch {
  int x = 0;  // canonical form keeps x < y with diff measured for x
  int y = 0;
  long long diff = 0;

  friend bool operator==(const RoundRobinMatch&, const RoundRobinMatch&) = default;
  friend auto operator<=>(const RoundRobinMatch& a, const RoundRobinMatch& b) {
    return std::tie(a.x, a.y, a.diff) <=> std::tie(b.x, b.y, b.diff);
  }
};

/// Complete round-robin results. Matches canonicalize to x < y (negating the
/// difference when flipped), which makes antisymmetry structural; duplicates
/// and self-matches survive canonicalization so validation can name them.
class RoundRobinRecord {
public:
  RoundRobinRecord() = default;
  RoundRobinRecord(int n, std::vector<RoundRobinMatch> matches)
      : n_(n), matches_(std::move(matches)) {
    for (auto& m : matches_) {
      if (m.x > m.y) {
        std::swap(m.x, m.y);
        m.diff = -m.diff;
      }
    }
    std::sort(matches_.begin(), matches_.end());
  }

  int n() const { return n_; }
  const std::vector<RoundRobinMatch>& matches() const { return matches_; }

  /// Full antisymmetric matrix; requires a valid (complete) record.
  std::vector<std::vector<long long>> matrix() const {
    std::vector<std::vector<long long>> h(
        static_cast<std::size_t>(n_), std::vector<long long>(static_cast<std::size_t>(n_), 0));
    for (const auto& m : matches_) {
      h[static_cast<std::size_t>(m.x)][static_cast<std::size_t>(m.y)] = m.diff;
      h[static_cast<std::size_t>(m.y)][static_cast<std::size_t>(m.x)] = -m.diff;
    }
    return h;
  }

  friend bool operator==(const RoundRobinRecord&, const RoundRobinRecord&) = default;

private:
  int n_ = 0;
  std::vector<RoundRobinMatch> matches_;
};

// ---------------------------------------------------------------------------
// Anonymous voting profile: histogram over ballots (ballots are weak orders).
// ---------------------------------------------------------------------------

class VotingProfile {
public:
  VotingProfile() = default;
  VotingProfile(int n, const std::vector<std::pair<WeakOrder, long long>>& entries) : n_(n) {
    for (const auto& [ballot, count] : entries) ballots_[ballot] += count;
    std::erase_if(ballots_, [](const auto& kv) { return kv.second == 0; });
  }

  int n() const { return n_; }
  const std::map<WeakOrder, long long>& ballots() const { return ballots_; }

  long long total_ballots() const {
    long long total = 0;
    for (const auto& [ballot, count] : ballots_) total += count;
    return total;
  }

  friend bool operator==(const VotingProfile&, const VotingProfile&) = default;

private:
  int n_ = 0;
  std::map<WeakOrder, long long> ballots_;  // zero counts dropped (finite support)
};

// ---------------------------------------------------------------------------
// Cooperative-game characteristic function, exact rational values.
// ---------------------------------------------------------------------------

class CoalitionValues {
public:
  CoalitionValues() = default;
  CoalitionValues(int n, std::map<std::uint32_t, Rational> values)
      : n_(n), values_(std::move(values)) {}

  int n() const { return n_; }
  const std::map<std::uint32_t, Rational>& values() const { return values_; }

  const Rational& value(std::uint32_t mask) const {
    auto it = values_.find(mask);
    if (it == values_.end()) {
      throw PreconditionError("coalition value undefined for a subset");
    }
    return it->second;
  }

  friend bool operator==(const CoalitionValues&, const CoalitionValues&) = default;

private:
  int n_ = 0;
  std::map<std::uint32_t, Rational> values_;  // subset bitmask -> v(S)
};

// ---------------------------------------------------------------------------
// Undirected simple graph.
// ---------------------------------------------------------------------------

class GraphEdges {
public:
  GraphEdges() = default;
  GraphEdges(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<std::vector<bool>> adjacency() const {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n_),
                                       std::vector<bool>(static_cast<std::size_t>(n_), false));
    for (const auto& [u, v] : edges_) {
      adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
      adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
      if (u != v) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      }
    }
    return deg;
  }

  friend bool operator==(const GraphEdges&, const GraphEdges&) = default;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // canonical u < v, sorted
};

// ---------------------------------------------------------------------------
// The tagged union and its operations.
// ---------------------------------------------------------------------------

class InfoItem {
public:
  using Payload =
      std::variant<SwissRecord, RoundRobinRecord, VotingProfile, CoalitionValues, GraphEdges>;

  InfoItem() = default;
  InfoItem(Payload payload) : payload_(std::move(payload)) {}

  InfoKind kind() const { return static_cast<InfoKind>(payload_.index()); }

  int n() const {
    return std::visit([](const auto& p) { return p.n(); }, payload_);
  }

  template <typename T>
  const T& as() const {
    const T* p = std::get_if<T>(&payload_);
    if (!p) throw PreconditionError("InfoItem holds a different kind");
    return *p;
  }

  const Payload& payload() const { return payload_; }

  friend bool operator==(const InfoItem&, const InfoItem&) = default;

private:
  Payload payload_;
};

/// Exact structural equality on canonical forms. The stabilizer test
/// sigma.h = h is this equality, so it must be exact (rationals compare
/// exactly; no tolerance anywhere).
inline bool items_equal(const InfoItem& a, const InfoItem& b) {
  if (a.kind() != b.kind()) {
    throw PreconditionError("items_equal: items of different kinds");
  }
  if (a.n() != b.n()) {
    throw DimensionError("items_equal: items on different player counts");
  }
  return a == b;
}

namespace detail {

inline std::string player_name(int i, const std::vector<std::string>* labels) {
  if (labels && i >= 0 && i < static_cast<int>(labels->size())) return (*labels)[static_cast<std::size_t>(i)];
  return "#" + std::to_string(i);
}

inline std::string subset_name(std::uint32_t mask, int n,
                               const std::vector<std::string>* labels) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += player_name(i, labels);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace detail

/// Kind-specific validity. Returns the (possibly empty) list of violations
/// instead of throwing, so a report can name all offending entries at once.
/// `labels`, when given, is used only to render messages.
inline std::vector<std::string> validate(const InfoItem& item, int n,
                                         const std::vector<std::string>* labels = nullptr) {
  std::vector<std::string> bad;
  auto name = [&](int i) { return detail::player_name(i, labels); };
  if (item.n() != n) {
    bad.push_back("item player count " + std::to_string(item.n()) +
                  " does not match input player count " + std::to_string(n));
    return bad;
  }

  switch (item.kind()) {
    case InfoKind::swiss: {
      const auto& s = item.as<SwissRecord>();
      if (s.rounds() < 0) bad.push_back("swiss: negative round count");
      std::map<std::pair<int, std::pair<int, int>>, int> pair_seen;
      std::map<std::pair<int, int>, int> player_seen;  // (round, player) -> games
      for (const auto& g : s.games()) {
        if (g.round < 1 || g.round > s.rounds()) {
          bad.push_back("swiss: game between " + name(g.white) + " and " + name(g.black) +
                        " has round " + std::to_string(g.round) + " outside 1.." +
                        std::to_string(s.rounds()));
        }
        if (g.white == g.black) {
          bad.push_back("swiss: player " + name(g.white) + " paired against itself in round " +
                        std::to_string(g.round));
          continue;
        }
        if (g.white < 0 || g.white >= n || g.black < 0 || g.black >= n) {
          bad.push_back("swiss: game references an unknown player index");
          continue;
        }
        auto key = std::make_pair(g.round, std::minmax(g.white, g.black));
        if (++pair_seen[key] == 2) {
          bad.push_back("swiss: players " + name(g.white) + " and " + name(g.black) +
                        " paired twice in round " + std::to_string(g.round));
        }
        for (int p : {g.white, g.black}) {
          if (++player_seen[{g.round, p}] == 2) {
            bad.push_back("swiss: player " + name(p) + " paired twice in round " +
                          std::to_string(g.round));
          }
        }
      }
      break;
    }
    case InfoKind::roundrobin: {
      const auto& rr = item.as<RoundRobinRecord>();
      std::map<std::pair<int, int>, std::vector<long long>> per_pair;
      for (const auto& m : rr.matches()) {
        if (m.x == m.y) {
          bad.push_back("roundrobin: match of " + name(m.x) + " against itself");
          continue;
        }
        if (m.x < 0 || m.x >= n || m.y < 0 || m.y >= n) {
          bad.push_back("roundrobin: match references an unknown player index");
          continue;
        }
        per_pair[{m.x, m.y}].push_back(m.diff);
      }
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          auto it = per_pair.find({x, y});
          if (it == per_pair.end()) {
            bad.push_back("roundrobin: missing match between " + name(x) + " and " + name(y));
          } else if (it->second.size() > 1) {
            bool all_same = std::all_of(it->second.begin(), it->second.end(),
                                        [&](long long d) { return d == it->second.front(); });
            if (all_same) {
              bad.push_back("roundrobin: match between " + name(x) + " and " + name(y) +
                            " recorded more than once");
            } else {
              bad.push_back("roundrobin: antisymmetry violated at (" + name(x) + "," + name(y) +
                            ")");
            }
          }
        }
      }
      break;
    }
    case InfoKind::voting: {
      const auto& v = item.as<VotingProfile>();
      for (const auto& [ballot, count] : v.ballots()) {
        if (ballot.n() != n) {
          bad.push_back("voting: a ballot does not rank the full player set");
        }
        if (count < 0) {
          bad.push_back("voting: negative ballot count " + std::to_string(count));
        }
      }
      break;
    }
    case InfoKind::coalition: {
      const auto& c = item.as<CoalitionValues>();
      if (n > 30) {
        bad.push_back("coalition: player count too large for subset enumeration");
        break;
      }
      std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
      for (const auto& [mask, value] : c.values()) {
        (void)value;
        if (mask > full) {
          bad.push_back("coalition: value given for a subset outside the player set");
        }
      }
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!c.values().count(mask)) {
          bad.push_back("coalition: value missing for subset " +
                        detail::subset_name(mask, n, labels));
        }
        if (mask == full) break;  // avoid wrap at n = 0
      }
      break;
    }
    case InfoKind::graph: {
      const auto& g = item.as<GraphEdges>();
      std::map<std::pair<int, int>, int> seen;
      for (const auto& [u, v] : g.edges()) {
        if (u == v) {
          bad.push_back("graph: self-loop at " + name(u));
          continue;
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
          bad.push_back("graph: edge references an unknown vertex index");
          continue;
        }
        if (++seen[{u, v}] == 2) {
          bad.push_back("graph: duplicate edge {" + name(u) + "," + name(v) + "}");
        }
      }
      break;
    }
  }
  return bad;
}

/// Relabeling action on auxiliary data, kind by kind. Preserves validity.
inline InfoItem act_item(const Permutation& sigma, const InfoItem& item) {
  if (sigma.n() != item.n()) {
    throw DimensionError("act_item: permutation degree does not match item");
  }
  switch (item.kind()) {
    case InfoKind::swiss: {
      const auto& s = item.as<SwissRecord>();
      std::vector<SwissGame> games;
      games.reserve(s.games().size());
      for (const auto& g : s.games()) {
        games.push_back({g.round, sigma(g.white), sigma(g.black), g.result});
      }
      return InfoItem(SwissRecord(s.n(), s.rounds(), std::move(games)));
    }
    case InfoKind::roundrobin: {
      const auto& rr = item.as<RoundRobinRecord>();
      std::vector<RoundRobinMatch> matches;
      matches.reserve(rr.matches().size());
      for (const auto& m : rr.matches()) {
        matches.push_back({sigma(m.x), sigma(m.y), m.diff});
      }
      return InfoItem(RoundRobinRecord(rr.n(), std::move(matches)));
    }
    case InfoKind::voting: {
      const auto& v = item.as<VotingProfile>();
      std::vector<std::pair<WeakOrder, long long>> entries;
      entries.reserve(v.ballots().size());
      for (const auto& [ballot, count] : v.ballots()) {
        entries.emplace_back(act(sigma, ballot), count);
      }
      return InfoItem(VotingProfile(v.n(), entries));
    }
    case InfoKind::coalition: {
      const auto& c = item.as<CoalitionValues>();
      std::map<std::uint32_t, Rational> values;
      for (const auto& [mask, value] : c.values()) {
        std::uint32_t image = 0;
        for (int i = 0; i < c.n(); ++i) {
          if (mask & (1u << i)) image |= (1u << sigma(i));
        }
        values[image] = value;
      }
      return InfoItem(CoalitionValues(c.n(), std::move(values)));
    }
    case InfoKind::graph: {
      const auto& g = item.as<GraphEdges>();
      std::vector<std::pair<int, int>> edges;
      edges.reserve(g.edges().size());
      for (const auto& [u, v] : g.edges()) edges.emplace_back(sigma(u), sigma(v));
      return InfoItem(GraphEdges(g.n(), std::move(edges)));
    }
  }
  throw PreconditionError("act_item: unknown kind");
}

/// The globally fixed element h* of each information space: empty record,
/// all-draws matrix, zero histogram, zero characteristic function, edgeless
/// graph. Fixed by every relabeling.
inline InfoItem fixed_point(InfoKind kind, int n) {
  if (n < 1) throw PreconditionError("fixed_point: need at least one player");
  switch (kind) {
    case InfoKind::swiss:
      return InfoItem(SwissRecord(n, 0, {}));
    case InfoKind::roundrobin: {
      std::vector<RoundRobinMatch> matches;
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) matches.push_back({x, y, 0});
      }
      return InfoItem(RoundRobinRecord(n, std::move(matches)));
    }
    case InfoKind::voting:
      return InfoItem(VotingProfile(n, {}));
    case InfoKind::coalition: {
      std::map<std::uint32_t, Rational> values;
      if (n > 30) throw PreconditionError("fixed_point: coalition player count too large");
      std::uint32_t full = (1u << n) - 1u;
      for (std::uint32_t mask = 0;; ++mask) {
        values[mask] = Rational(0);
        if (mask == full) break;
      }
      return InfoItem(CoalitionValues(n, std::move(values)));
    }
    case InfoKind::graph:
      return InfoItem(GraphEdges(n, {}));
  }
  throw PreconditionError("fixed_point: unknown kind");
}

/// Convenience standings for the graph adapter: classes by descending degree.
/// Every other centrality is supplied by the caller as a WeakOrder.
inline WeakOrder degree_standings(const GraphEdges& g) {
  auto deg = g.degrees();
  std::map<int, std::vector<int>, std::greater<>> by_degree;
  for (int i = 0; i < g.n(); ++i) by_degree[deg[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_degree.size());
  for (auto& [d, members] : by_degree) {
    (void)d;
    classes.push_back(std::move(members));
  }
  return WeakOrder(std::move(classes));
}

}  // namespace orbittie
