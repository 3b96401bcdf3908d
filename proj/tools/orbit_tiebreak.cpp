#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orbittie/corpus.hpp"
#include "orbittie/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitUsage = 64;

std::string slurp(std::istream& is) {
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Inputs are file paths, "-" for stdin, or "example:<name>" for the
// built-in corpus.
orbittie::Input load_input(const std::string& spec) {
  if (spec.rfind("example:", 0) == 0) {
    return orbittie::builtin_example(spec.substr(8));
  }
  if (spec == "-") {
    return orbittie::parse_input(slurp(std::cin));
  }
  std::ifstream file(spec);
  if (!file) throw orbittie::ParseError("cannot open input file: " + spec);
  return orbittie::parse_input(slurp(file));
}

orbittie::Json load_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw orbittie::ParseError("cannot open file: " + path);
  try {
    return orbittie::Json::parse(slurp(file));
  } catch (const orbittie::Json::parse_error& e) {
    throw orbittie::ParseError(path + ": malformed JSON: " + e.what());
  }
}

void emit(const orbittie::RunReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << orbittie::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << orbittie::render_text(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit-tiebreak: the forced part of tie-breaking (orbit partitions of the "
               "joint stabilizer) and the arbitrary part (completions)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  orbittie::Limits limits;
  app.add_option("--max-search-nodes", limits.search_nodes,
                 "cap on stabilizer search nodes")
      ->envname("ORBIT_TIEBREAK_MAX_SEARCH_NODES")
      ->capture_default_str();
  app.add_option("--max-closure", limits.closure_size,
                 "cap on enumerated group elements")
      ->envname("ORBIT_TIEBREAK_MAX_CLOSURE")
      ->capture_default_str();
  app.add_option("--max-oracle-n", limits.oracle_n,
                 "cap on n for brute-force oracles")
      ->envname("ORBIT_TIEBREAK_MAX_ORACLE_N")
      ->capture_default_str();

  std::string input_spec;
  std::string completion_file;
  bool default_completion_flag = false;
  std::string ranking_file;
  bool with_oracle = false;
  std::uint64_t seed = 1;
  std::string example_name;

  auto* orbits = app.add_subcommand("orbits", "orbit partition and a symmetric witness");
  orbits->add_option("input", input_spec, "input file, '-', or example:<name>")->required();

  auto* stab = app.add_subcommand("stabilizer", "joint stabilizer generators and order");
  stab->add_option("input", input_spec)->required();

  auto* tiebreak = app.add_subcommand(
      "tiebreak", "lift a completion to a strict ranking, tagging arbitrary comparisons");
  tiebreak->add_option("input", input_spec)->required();
  auto* copt = tiebreak->add_option("--completion", completion_file, "completion JSON file");
  tiebreak->add_flag("--default-completion", default_completion_flag,
                     "use the label-order completion (also the no-flag default)")
      ->excludes(copt);

  auto* count = app.add_subcommand("count", "number of partition-consistent strict rankings");
  count->add_option("input", input_spec)->required();

  auto* extract = app.add_subcommand(
      "extract", "read the completion off a partition-consistent refining ranking");
  extract->add_option("input", input_spec)->required();
  extract->add_option("--ranking", ranking_file, "JSON array of labels, best first")
      ->required();

  auto* verify = app.add_subcommand("verify", "run the property suite on the input");
  verify->add_option("input", input_spec)->required();
  verify->add_flag("--oracle", with_oracle, "cross-check against brute-force oracles");
  verify->add_option("--seed", seed, "seed for randomized spot checks")->capture_default_str();

  auto* example = app.add_subcommand("example", "print a built-in example input document");
  example->add_option("name", example_name, "condorcet | two-pairs | three-way | petersen | "
                                            "path4 | empty:<kind>:<n>")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (example->parsed()) {
      std::cout << orbittie::serialize_input(orbittie::builtin_example(example_name));
      return kExitOk;
    }

    orbittie::Input in = load_input(input_spec);

    if (orbits->parsed()) {
      emit(orbittie::report_orbits(in, limits), format);
    } else if (stab->parsed()) {
      emit(orbittie::report_stabilizer(in, limits), format);
    } else if (tiebreak->parsed()) {
      std::optional<orbittie::Completion> completion;
      if (!completion_file.empty()) {
        completion = orbittie::completion_from_json(load_json(completion_file), in);
      }
      emit(orbittie::report_tiebreak(in, completion, limits), format);
    } else if (count->parsed()) {
      emit(orbittie::report_count(in, limits), format);
    } else if (extract->parsed()) {
      orbittie::LinearOrder ranking =
          orbittie::ranking_from_json(load_json(ranking_file), in);
      emit(orbittie::report_extract(in, ranking, limits), format);
    } else if (verify->parsed()) {
      auto results = orbittie::verify_input(in, limits, with_oracle, seed);
      int failed = 0;
      if (format == "json") {
        orbittie::Json arr = orbittie::Json::array();
        for (const auto& r : results) {
          arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
          failed += r.pass ? 0 : 1;
        }
        std::cout << orbittie::Json{{"schema", "orbit-tiebreak/1"},
                                    {"command", "verify"},
                                    {"results", arr}}
                         .dump(2)
                  << "\n";
      } else {
        for (const auto& r : results) {
          std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
          if (!r.detail.empty()) std::cout << " — " << r.detail;
          std::cout << "\n";
          failed += r.pass ? 0 : 1;
        }
      }
      if (failed > 0) {
        std::cerr << failed << " check(s) failed\n";
        return kExitVerifyFailed;
      }
    }
    return kExitOk;
  } catch (const orbittie::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const orbittie::ValidationError& e) {
    std::cerr << "invalid input:\n";
    for (const auto& v : e.violations()) std::cerr << "  - " << v << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
