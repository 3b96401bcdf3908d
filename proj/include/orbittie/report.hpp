#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbittie/det_rng.hpp"
#include "orbittie/json_io.hpp"
#include "orbittie/oracle.hpp"
#include "orbittie/stabilizer.hpp"
#include "orbittie/tiebreak.hpp"

namespace orbittie {

/// Everything a command run reports. Fields are filled per command; the
/// provenance lists tag every strict comparison of a lifted ranking with
/// what decided it: the standings (forced), gamma (arbitrary block order),
/// or beta (arbitrary order inside a block).
struct RunReport {
  std::string command;
  Input input;
  Partition part;  // indifference classes of the standings
  std::optional<Partition> omega;
  std::optional<PermGroup> stabilizer;
  std::optional<std::uint64_t> stabilizer_order;
  bool witness_requested = false;
  std::optional<SymmetricWitness> witness;
  std::optional<BigInt> rule_count;
  std::optional<LinearOrder> ranking;
  std::string completion_source;  // "default" or "file" when ranking is set
  std::optional<Completion> completion;
  std::vector<std::pair<int, int>> standings_pairs;  // (winner, loser)
  std::vector<std::pair<int, int>> gamma_pairs;
  std::vector<std::pair<int, int>> beta_pairs;
};

namespace detail {

inline void fill_provenance(RunReport& r) {
  const auto& ranking = r.ranking->ranking();
  auto cls = r.input.standings.class_of();
  auto blk = r.omega->block_of();
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    for (std::size_t q = p + 1; q < ranking.size(); ++q) {
      int x = ranking[p], y = ranking[q];
      if (cls[static_cast<std::size_t>(x)] != cls[static_cast<std::size_t>(y)]) {
        r.standings_pairs.emplace_back(x, y);
      } else if (blk[static_cast<std::size_t>(x)] != blk[static_cast<std::size_t>(y)]) {
        r.gamma_pairs.emplace_back(x, y);
      } else {
        r.beta_pairs.emplace_back(x, y);
      }
    }
  }
}

}  // namespace detail

inline RunReport report_orbits(const Input& in, const Limits& limits = Limits::defaults()) {
  RunReport r;
  r.command = "orbits";
  r.input = in;
  r.part = indifference_partition(in.standings);
  PermGroup stab = joint_stabilizer(in, limits);
  r.omega = stab.orbits();
  r.witness_requested = true;
  for (const auto& block : stab.orbits().blocks()) {
    if (block.size() >= 2) {
      r.witness = SymmetricWitness{block[0], block[1], *stab.witness(block[0], block[1])};
      break;
    }
  }
  r.stabilizer = std::move(stab);
  return r;
}

inline RunReport report_stabilizer(const Input& in, const Limits& limits = Limits::defaults()) {
  RunReport r;
  r.command = "stabilizer";
  r.input = in;
  r.part = indifference_partition(in.standings);
  PermGroup stab = joint_stabilizer(in, limits);
  r.omega = stab.orbits();
  r.stabilizer_order = stab.order(limits.closure_size);
  r.stabilizer = std::move(stab);
  return r;
}

inline RunReport report_count(const Input& in, const Limits& limits = Limits::defaults()) {
  RunReport r;
  r.command = "count";
  r.input = in;
  r.part = indifference_partition(in.standings);
  r.omega = orbit_partition(in, limits);
  r.rule_count = count_consistent_rules(*r.omega, in.standings);
  return r;
}

inline RunReport report_tiebreak(const Input& in, const std::optional<Completion>& completion,
                                 const Limits& limits = Limits::defaults()) {
  RunReport r;
  r.command = "tiebreak";
  r.input = in;
  r.part = indifference_partition(in.standings);
  r.omega = orbit_partition(in, limits);
  Completion c;
  if (completion) {
    c = *completion;
    r.completion_source = "file";
    auto bad = validate_completion(c, *r.omega, in.standings, &in.labels);
    if (!bad.empty()) throw ValidationError(std::move(bad));
  } else {
    c = default_completion(*r.omega, in.standings, in.labels);
    r.completion_source = "default";
  }
  r.ranking = lift(c, *r.omega, in.standings);
  r.completion = std::move(c);
  detail::fill_provenance(r);
  return r;
}

inline RunReport report_extract(const Input& in, const LinearOrder& ranking,
                                const Limits& limits = Limits::defaults()) {
  RunReport r;
  r.command = "extract";
  r.input = in;
  r.part = indifference_partition(in.standings);
  r.omega = orbit_partition(in, limits);
  r.completion = extract_completion(ranking, *r.omega, in.standings, &in.labels);
  r.ranking = ranking;
  detail::fill_provenance(r);
  return r;
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

inline Json report_to_json(const RunReport& r) {
  const auto& labels = r.input.labels;
  Json out = Json::object();
  out["schema"] = "orbit-tiebreak/1";
  out["command"] = r.command;
  out["input"] = input_to_json(r.input);
  out["part"] = to_json(r.part, labels);
  if (r.omega) out["omega"] = to_json(*r.omega, labels);
  if (r.stabilizer) {
    Json gens = Json::array();
    for (const auto& g : r.stabilizer->generators()) gens.push_back(to_json(g, labels));
    out["stabilizer"] = Json{{"generators", std::move(gens)}};
    if (r.stabilizer_order) out["stabilizer"]["order"] = *r.stabilizer_order;
  }
  if (r.witness_requested) {
    if (r.witness) {
      out["witness"] = Json{{"x", labels[static_cast<std::size_t>(r.witness->x)]},
                            {"y", labels[static_cast<std::size_t>(r.witness->y)]},
                            {"sigma", to_json(r.witness->sigma, labels)}};
    } else {
      out["witness"] = nullptr;
    }
  }
  if (r.rule_count) out["counts"] = Json{{"consistent_rules", r.rule_count->str()}};
  if (r.ranking) {
    out["ranking"] = to_json(*r.ranking, labels);
    auto pairs = [&](const std::vector<std::pair<int, int>>& ps) {
      Json arr = Json::array();
      for (const auto& [x, y] : ps) {
        arr.push_back(Json::array(
            {labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]}));
      }
      return arr;
    };
    out["provenance"] = Json{{"standings", pairs(r.standings_pairs)},
                             {"gamma", pairs(r.gamma_pairs)},
                             {"beta", pairs(r.beta_pairs)}};
    if (!r.completion_source.empty()) out["completion_source"] = r.completion_source;
  }
  if (r.completion) out["completion"] = completion_to_json(*r.completion, r.input);
  return out;
}

inline std::string render_text(const RunReport& r) {
  const auto& labels = r.input.labels;
  std::ostringstream os;
  auto group_str = [&](const std::vector<std::vector<int>>& groups) {
    std::string s;
    for (std::size_t k = 0; k < groups.size(); ++k) {
      if (k) s += " ";
      s += "{";
      for (std::size_t i = 0; i < groups[k].size(); ++i) {
        if (i) s += ",";
        s += labels[static_cast<std::size_t>(groups[k][i])];
      }
      s += "}";
    }
    return s;
  };
  auto perm_str = [&](const Permutation& sigma) {
    std::string s;
    std::vector<bool> seen(static_cast<std::size_t>(sigma.n()), false);
    for (int i = 0; i < sigma.n(); ++i) {
      if (seen[static_cast<std::size_t>(i)] || sigma(i) == i) continue;
      s += "(";
      int j = i;
      bool first = true;
      while (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        if (!first) s += " ";
        s += labels[static_cast<std::size_t>(j)];
        first = false;
        j = sigma(j);
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  };

  os << "players: ";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
  os << "\nstandings classes: " << group_str(r.input.standings.classes()) << "\n";
  if (r.omega) os << "orbit partition: " << group_str(r.omega->blocks()) << "\n";
  if (r.stabilizer) {
    os << "stabilizer generators:";
    if (r.stabilizer->generators().empty()) {
      os << " (trivial group)";
    } else {
      for (const auto& g : r.stabilizer->generators()) os << " " << perm_str(g);
    }
    os << "\n";
    if (r.stabilizer_order) os << "stabilizer order: " << *r.stabilizer_order << "\n";
  }
  if (r.witness_requested) {
    if (r.witness) {
      os << "symmetric witness: " << perm_str(r.witness->sigma) << " exchanges "
         << labels[static_cast<std::size_t>(r.witness->x)] << " with "
         << labels[static_cast<std::size_t>(r.witness->y)] << "\n";
    } else {
      os << "symmetric witness: none (all orbits are singletons)\n";
    }
  }
  if (r.rule_count) {
    os << "partition-consistent strict rules: " << r.rule_count->str() << "\n";
  }
  if (r.ranking) {
    os << "ranking:";
    for (int v : r.ranking->ranking()) os << " " << labels[static_cast<std::size_t>(v)];
    os << "\n";
    if (!r.completion_source.empty()) os << "completion: " << r.completion_source << "\n";
    os << "forced by standings: " << r.standings_pairs.size() << " comparisons\n";
    auto list_pairs = [&](const char* tag, const std::vector<std::pair<int, int>>& ps) {
      os << tag << ": " << ps.size() << " comparisons";
      if (!ps.empty()) {
        os << " (";
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (i) os << ", ";
          os << labels[static_cast<std::size_t>(ps[i].first)] << ">"
             << labels[static_cast<std::size_t>(ps[i].second)];
        }
        os << ")";
      }
      os << "\n";
    };
    list_pairs("arbitrary via gamma", r.gamma_pairs);
    list_pairs("arbitrary via beta", r.beta_pairs);
  }
  if (r.completion && r.command == "extract") {
    os << "completion:\n" << completion_to_json(*r.completion, r.input).dump(2) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// The verify suite: theorem-level properties checked on one input.
// ---------------------------------------------------------------------------

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::vector<VerifyResult> verify_input(const Input& in,
                                              const Limits& limits = Limits::defaults(),
                                              bool with_oracle = false,
                                              std::uint64_t seed = 1) {
  std::vector<VerifyResult> results;
  auto check = [&](const std::string& name, auto&& body) {
    try {
      auto [pass, detail] = body();
      results.push_back({name, pass, detail});
    } catch (const ResourceLimitError&) {
      throw;  // a cap is an environment condition, not a verification verdict
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  using R = std::pair<bool, std::string>;

  PermGroup stab = joint_stabilizer(in, limits);
  Partition omega = stab.orbits();
  Partition part = indifference_partition(in.standings);

  check("generators-fix-input", [&]() -> R {
    for (const auto& g : stab.generators()) {
      if (act(g, in.standings) != in.standings) return {false, "a generator moves the standings"};
      if (!items_equal(act_item(g, in.item), in.item)) {
        return {false, "a generator moves the auxiliary data"};
      }
    }
    return {true, std::to_string(stab.generators().size()) + " generators"};
  });

  check("omega-refines-standings", [&]() -> R {
    return {refines(omega, part), "orbit partition within indifference classes"};
  });

  check("witness-iff-nonsingleton-orbit", [&]() -> R {
    auto w = symmetric_witness(in, limits);
    bool has_big = false;
    for (const auto& b : omega.blocks()) has_big = has_big || b.size() >= 2;
    if (w.has_value() != has_big) return {false, "witness presence disagrees with orbits"};
    if (!w) return {true, "no witness; all orbits singletons"};
    bool valid = w->x != w->y && w->sigma(w->x) == w->y &&
                 act(w->sigma, in.standings) == in.standings &&
                 items_equal(act_item(w->sigma, in.item), in.item);
    return {valid, "witness exchanges " + in.label(w->x) + " and " + in.label(w->y)};
  });

  check("no-fixed-linear-order", [&]() -> R {
    auto w = symmetric_witness(in, limits);
    if (!w) return {true, "vacuous; no symmetric witness"};
    auto cert = verify_no_fixed_linear_order(w->sigma, in.standings);
    bool moved = act(cert.sigma, cert.probe) != cert.probe;
    std::string detail = "certificate chain " + cert.chain_string(in.labels);
    if (cert.orders_checked > 0) {
      detail += "; all " + std::to_string(cert.orders_checked) + " linear orders moved";
    }
    return {moved, detail};
  });

  check("default-lift-legal", [&]() -> R {
    LinearOrder l = lift(default_completion(omega, in.standings, in.labels), omega, in.standings);
    return {strict_refines(l, in.standings) && is_consistent(l, omega),
            "lift refines standings and keeps orbit blocks contiguous"};
  });

  check("lift-extract-roundtrip", [&]() -> R {
    Completion c = default_completion(omega, in.standings, in.labels);
    LinearOrder l = lift(c, omega, in.standings);
    return {extract_completion(l, omega, in.standings) == c, "extract(lift(C)) == C"};
  });

  check("axioms-characterize-omega", [&]() -> R {
    auto at_omega = check_axioms(omega, omega, in.standings);
    if (!at_omega.saturated || !at_omega.maximally_fine) {
      return {false, "omega itself fails an axiom"};
    }
    if (in.n <= 6) {
      for (const auto& p : refining_partitions(part)) {
        auto ax = check_axioms(p, omega, in.standings);
        if ((ax.saturated && ax.maximally_fine) != (p == omega)) {
          return {false, "axiom conjunction does not single out omega"};
        }
      }
      return {true, "exhaustive over partitions refining the standings classes"};
    }
    return {true, "checked at omega only (n > 6)"};
  });

  check("equivariance-spotcheck", [&]() -> R {
    DetRng rng(seed);
    for (int t = 0; t < 5; ++t) {
      Permutation sigma = random_permutation(rng, in.n);
      if (orbit_partition(act_input(sigma, in), limits) != act(sigma, omega)) {
        return {false, "omega(sigma.input) != sigma.omega(input)"};
      }
    }
    return {true, "5 random relabelings"};
  });

  if (with_oracle) {
    check("oracle-stabilizer", [&]() -> R {
      return {brute_stabilizer(in, limits).same_group(stab, limits.closure_size),
              "search equals the n!-sweep stabilizer"};
    });
    check("oracle-orbit-partition", [&]() -> R {
      return {brute_orbit_partition(in, limits) == omega, "orbit partitions agree"};
    });
    check("oracle-rule-count", [&]() -> R {
      return {brute_consistent_rule_count(in, limits) ==
                  count_consistent_rules(omega, in.standings),
              "counts agree"};
    });
    check("oracle-no-fixed-linear-order", [&]() -> R {
      auto w = symmetric_witness(in, limits);
      if (!w) return {true, "vacuous; no symmetric witness"};
      return {brute_fixed_linear_orders(w->sigma, limits).empty(),
              "witness fixes no linear order"};
    });
  }

  return results;
}

}  // namespace orbittie
