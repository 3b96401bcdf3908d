#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "orbittie/infospace.hpp"
#include "orbittie/input.hpp"
#include "orbittie/tiebreak.hpp"

namespace orbittie {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Serialization (canonical: object keys alphabetical, arrays in canonical
// member order, rationals as exact strings).
// ---------------------------------------------------------------------------

namespace detail {

inline Json labels_of(const std::vector<int>& members, const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (int v : members) arr.push_back(labels[static_cast<std::size_t>(v)]);
  return arr;
}

inline std::string coalition_key(std::uint32_t mask, const std::vector<std::string>& labels) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (mask & (1u << i)) parts.push_back(labels[i]);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

inline const char* result_name(GameResult r) {
  switch (r) {
    case GameResult::win: return "w";
    case GameResult::draw: return "d";
    case GameResult::loss: return "l";
  }
  return "?";
}

}  // namespace detail

inline Json to_json(const WeakOrder& w, const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (const auto& cls : w.classes()) arr.push_back(detail::labels_of(cls, labels));
  return arr;
}

inline Json to_json(const LinearOrder& l, const std::vector<std::string>& labels) {
  return detail::labels_of(l.ranking(), labels);
}

inline Json to_json(const Partition& p, const std::vector<std::string>& labels) {
  Json arr = Json::array();
  for (const auto& block : p.blocks()) arr.push_back(detail::labels_of(block, labels));
  return arr;
}

inline Json to_json(const Permutation& sigma, const std::vector<std::string>& labels) {
  Json obj = Json::object();
  for (int i = 0; i < sigma.n(); ++i) {
    obj[labels[static_cast<std::size_t>(i)]] = labels[static_cast<std::size_t>(sigma(i))];
  }
  return obj;
}

inline Json info_to_json(const InfoItem& item, const std::vector<std::string>& labels) {
  Json obj = Json::object();
  obj["kind"] = kind_name(item.kind());
  switch (item.kind()) {
    case InfoKind::swiss: {
      const auto& s = item.as<SwissRecord>();
      obj["rounds"] = s.rounds();
      Json games = Json::array();
      for (const auto& g : s.games()) {
        games.push_back({{"round", g.round},
                         {"white", labels[static_cast<std::size_t>(g.white)]},
                         {"black", labels[static_cast<std::size_t>(g.black)]},
                         {"result", detail::result_name(g.result)}});
      }
      obj["games"] = std::move(games);
      break;
    }
    case InfoKind::roundrobin: {
      const auto& rr = item.as<RoundRobinRecord>();
      Json matches = Json::array();
      for (const auto& m : rr.matches()) {
        matches.push_back({{"x", labels[static_cast<std::size_t>(m.x)]},
                           {"y", labels[static_cast<std::size_t>(m.y)]},
                           {"diff", m.diff}});
      }
      obj["matches"] = std::move(matches);
      break;
    }
    case InfoKind::voting: {
      const auto& v = item.as<VotingProfile>();
      Json ballots = Json::array();
      for (const auto& [ballot, count] : v.ballots()) {
        ballots.push_back({{"order", to_json(ballot, labels)}, {"count", count}});
      }
      obj["ballots"] = std::move(ballots);
      break;
    }
    case InfoKind::coalition: {
      const auto& c = item.as<CoalitionValues>();
      Json values = Json::object();
      for (const auto& [mask, value] : c.values()) {
        values[detail::coalition_key(mask, labels)] = format_rational(value);
      }
      obj["values"] = std::move(values);
      break;
    }
    case InfoKind::graph: {
      const auto& g = item.as<GraphEdges>();
      Json edges = Json::array();
      for (const auto& [u, v] : g.edges()) {
        edges.push_back(Json::array({labels[static_cast<std::size_t>(u)],
                                     labels[static_cast<std::size_t>(v)]}));
      }
      obj["edges"] = std::move(edges);
      break;
    }
  }
  return obj;
}

inline Json input_to_json(const Input& in) {
  Json obj = Json::object();
  obj["players"] = in.labels;
  obj["standings"] = to_json(in.standings, in.labels);
  obj["info"] = info_to_json(in.item, in.labels);
  return obj;
}

inline std::string serialize_input(const Input& in) { return input_to_json(in).dump(2) + "\n"; }

inline Json completion_to_json(const Completion& c, const Input& in) {
  Json beta = Json::object();
  for (const auto& [block, order] : c.beta) {
    std::vector<std::string> parts;
    parts.reserve(block.size());
    for (int v : block) parts.push_back(in.label(v));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) key += "|";
      key += parts[i];
    }
    beta[key] = detail::labels_of(order, in.labels);
  }
  Json gamma = Json::object();
  for (std::size_t e = 0; e < c.gamma.size(); ++e) {
    Json blocks = Json::array();
    for (const auto& block : c.gamma[e]) blocks.push_back(detail::labels_of(block, in.labels));
    gamma["class" + std::to_string(e)] = std::move(blocks);
  }
  return Json{{"beta", std::move(beta)}, {"gamma", std::move(gamma)}};
}

// ---------------------------------------------------------------------------
// Parsing. Every failure is a ParseError naming the offending path;
// kind-level validity problems surface as ValidationError from make_input.
// ---------------------------------------------------------------------------

namespace detail {

class LabelMap {
public:
  explicit LabelMap(const std::vector<std::string>& labels) : labels_(labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) index_[labels[i]] = static_cast<int>(i);
  }

  int resolve(const Json& j, const std::string& path) const {
    if (!j.is_string()) throw ParseError(path + ": expected a player label string");
    auto it = index_.find(j.get<std::string>());
    if (it == index_.end()) {
      throw ParseError(path + ": unknown player label \"" + j.get<std::string>() + "\"");
    }
    return it->second;
  }

  /// Coalition keys are sorted label strings concatenated ("", "a", "ab").
  /// Tokenized by longest label match.
  std::uint32_t resolve_coalition_key(const std::string& key, const std::string& path) const {
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
      int best = -1;
      std::size_t best_len = 0;
      for (const auto& [label, idx] : index_) {
        if (label.size() > best_len && key.compare(pos, label.size(), label) == 0) {
          best = idx;
          best_len = label.size();
        }
      }
      if (best < 0) {
        throw ParseError(path + ": coalition key \"" + key +
                         "\" is not a concatenation of player labels");
      }
      if (mask & (1u << best)) {
        throw ParseError(path + ": coalition key \"" + key + "\" repeats player \"" +
                         labels_[static_cast<std::size_t>(best)] + "\"");
      }
      mask |= 1u << best;
      pos += best_len;
    }
    return mask;
  }

private:
  const std::vector<std::string>& labels_;
  std::map<std::string, int> index_;
};

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(path + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

inline long long int_field(const Json& obj, const char* key, const std::string& path) {
  const Json& j = field(obj, key, path);
  if (!j.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
  return j.get<long long>();
}

inline std::vector<std::vector<int>> parse_classes(const Json& j, const LabelMap& map,
                                                   const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array of classes");
  std::vector<std::vector<int>> classes;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& cls = j[k];
    std::string cpath = path + "[" + std::to_string(k) + "]";
    if (!cls.is_array()) throw ParseError(cpath + ": expected an array of player labels");
    std::vector<int> members;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      members.push_back(map.resolve(cls[i], cpath + "[" + std::to_string(i) + "]"));
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

inline WeakOrder parse_weak_order(const Json& j, const LabelMap& map, const std::string& path) {
  try {
    return WeakOrder(parse_classes(j, map, path));
  } catch (const PreconditionError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Rational parse_rational_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    throw ParseError(path + ": coalition values must be exact (integer or \"p/q\" string)");
  }
  if (!j.is_string()) throw ParseError(path + ": expected a rational value");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline InfoItem parse_info(const Json& j, const LabelMap& map, int n, const std::string& path) {
  const Json& kind_j = field(j, "kind", path);
  if (!kind_j.is_string()) throw ParseError(path + ".kind: expected a string");
  auto kind = kind_from_name(kind_j.get<std::string>());
  if (!kind) throw ParseError(path + ".kind: unknown kind \"" + kind_j.get<std::string>() + "\"");

  switch (*kind) {
    case InfoKind::swiss: {
      int rounds = static_cast<int>(int_field(j, "rounds", path));
      const Json& games_j = field(j, "games", path);
      if (!games_j.is_array()) throw ParseError(path + ".games: expected an array");
      std::vector<SwissGame> games;
      for (std::size_t k = 0; k < games_j.size(); ++k) {
        std::string gpath = path + ".games[" + std::to_string(k) + "]";
        const Json& g = games_j[k];
        SwissGame game;
        game.round = static_cast<int>(int_field(g, "round", gpath));
        game.white = map.resolve(field(g, "white", gpath), gpath + ".white");
        game.black = map.resolve(field(g, "black", gpath), gpath + ".black");
        const Json& res = field(g, "result", gpath);
        std::string r = res.is_string() ? res.get<std::string>() : "";
        if (r == "w") game.result = GameResult::win;
        else if (r == "d") game.result = GameResult::draw;
        else if (r == "l") game.result = GameResult::loss;
        else throw ParseError(gpath + ".result: expected \"w\", \"d\" or \"l\"");
        games.push_back(game);
      }
      return InfoItem(SwissRecord(n, rounds, std::move(games)));
    }
    case InfoKind::roundrobin: {
      const Json& matches_j = field(j, "matches", path);
      if (!matches_j.is_array()) throw ParseError(path + ".matches: expected an array");
      std::vector<RoundRobinMatch> matches;
      for (std::size_t k = 0; k < matches_j.size(); ++k) {
        std::string mpath = path + ".matches[" + std::to_string(k) + "]";
        const Json& m = matches_j[k];
        matches.push_back({map.resolve(field(m, "x", mpath), mpath + ".x"),
                           map.resolve(field(m, "y", mpath), mpath + ".y"),
                           int_field(m, "diff", mpath)});
      }
      return InfoItem(RoundRobinRecord(n, std::move(matches)));
    }
    case InfoKind::voting: {
      const Json& ballots_j = field(j, "ballots", path);
      if (!ballots_j.is_array()) throw ParseError(path + ".ballots: expected an array");
      std::vector<std::pair<WeakOrder, long long>> entries;
      for (std::size_t k = 0; k < ballots_j.size(); ++k) {
        std::string bpath = path + ".ballots[" + std::to_string(k) + "]";
        const Json& b = ballots_j[k];
        WeakOrder order = parse_weak_order(field(b, "order", bpath), map, bpath + ".order");
        long long count = int_field(b, "count", bpath);
        entries.emplace_back(std::move(order), count);
      }
      return InfoItem(VotingProfile(n, entries));
    }
    case InfoKind::coalition: {
      const Json& values_j = field(j, "values", path);
      if (!values_j.is_object()) throw ParseError(path + ".values: expected an object");
      std::map<std::uint32_t, Rational> values;
      for (const auto& [key, value] : values_j.items()) {
        std::string vpath = path + ".values[\"" + key + "\"]";
        std::uint32_t mask = map.resolve_coalition_key(key, vpath);
        if (!values.emplace(mask, parse_rational_json(value, vpath)).second) {
          throw ParseError(vpath + ": duplicate coalition");
        }
      }
      return InfoItem(CoalitionValues(n, std::move(values)));
    }
    case InfoKind::graph: {
      const Json& edges_j = field(j, "edges", path);
      if (!edges_j.is_array()) throw ParseError(path + ".edges: expected an array");
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < edges_j.size(); ++k) {
        std::string epath = path + ".edges[" + std::to_string(k) + "]";
        const Json& e = edges_j[k];
        if (!e.is_array() || e.size() != 2) {
          throw ParseError(epath + ": expected a two-label array");
        }
        edges.emplace_back(map.resolve(e[0], epath + "[0]"), map.resolve(e[1], epath + "[1]"));
      }
      return InfoItem(GraphEdges(n, std::move(edges)));
    }
  }
  throw ParseError(path + ": unknown kind");
}

}  // namespace detail

inline Input input_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  const Json& players_j = detail::field(doc, "players", "document");
  if (!players_j.is_array() || players_j.empty()) {
    throw ParseError("players: expected a nonempty array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < players_j.size(); ++i) {
    if (!players_j[i].is_string() || players_j[i].get<std::string>().empty()) {
      throw ParseError("players[" + std::to_string(i) + "]: expected a nonempty string");
    }
    labels.push_back(players_j[i].get<std::string>());
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) throw ParseError("players: duplicate labels");

  detail::LabelMap map(labels);
  int n = static_cast<int>(labels.size());
  WeakOrder standings =
      detail::parse_weak_order(detail::field(doc, "standings", "document"), map, "standings");
  InfoItem item = detail::parse_info(detail::field(doc, "info", "document"), map, n, "info");
  return make_input(std::move(labels), std::move(item), std::move(standings));
}

inline Input parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return input_from_json(doc);
}

/// {"beta":{"a|b":["a","b"],...},"gamma":{"class0":[[...],[...]],...}}
inline Completion completion_from_json(const Json& doc, const Input& in) {
  if (!doc.is_object()) throw ParseError("completion: expected a JSON object");
  detail::LabelMap map(in.labels);
  Completion c;
  const Json& beta_j = detail::field(doc, "beta", "completion");
  if (!beta_j.is_object()) throw ParseError("completion.beta: expected an object");
  for (const auto& [key, order_j] : beta_j.items()) {
    std::string bpath = "completion.beta[\"" + key + "\"]";
    std::vector<int> block;
    std::size_t pos = 0;
    while (pos <= key.size()) {
      auto bar = key.find('|', pos);
      std::string part = key.substr(pos, bar == std::string::npos ? bar : bar - pos);
      block.push_back(map.resolve(Json(part), bpath));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    std::sort(block.begin(), block.end());
    if (!order_j.is_array()) throw ParseError(bpath + ": expected an array of labels");
    std::vector<int> order;
    for (std::size_t i = 0; i < order_j.size(); ++i) {
      order.push_back(map.resolve(order_j[i], bpath + "[" + std::to_string(i) + "]"));
    }
    if (!c.beta.emplace(std::move(block), std::move(order)).second) {
      throw ParseError(bpath + ": duplicate block");
    }
  }
  const Json& gamma_j = detail::field(doc, "gamma", "completion");
  if (!gamma_j.is_object()) throw ParseError("completion.gamma: expected an object");
  c.gamma.resize(gamma_j.size());
  for (const auto& [key, blocks_j] : gamma_j.items()) {
    std::string gpath = "completion.gamma[\"" + key + "\"]";
    if (key.rfind("class", 0) != 0) throw ParseError(gpath + ": keys must be \"class<k>\"");
    std::size_t e = 0;
    try {
      e = std::stoul(key.substr(5));
    } catch (...) {
      throw ParseError(gpath + ": keys must be \"class<k>\"");
    }
    if (e >= c.gamma.size()) {
      throw ParseError(gpath + ": class index out of range (classes must be contiguous)");
    }
    c.gamma[e] = detail::parse_classes(blocks_j, map, gpath);
  }
  return c;
}

/// A ranking file is a JSON array of labels, best first.
inline LinearOrder ranking_from_json(const Json& doc, const Input& in) {
  detail::LabelMap map(in.labels);
  if (!doc.is_array()) throw ParseError("ranking: expected a JSON array of labels");
  if (static_cast<int>(doc.size()) != in.n) {
    throw ParseError("ranking: must rank all " + std::to_string(in.n) + " players");
  }
  std::vector<int> ranking;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    ranking.push_back(map.resolve(doc[i], "ranking[" + std::to_string(i) + "]"));
  }
  try {
    return LinearOrder(std::move(ranking));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("ranking: ") + e.what());
  }
}

}  // namespace orbittie
