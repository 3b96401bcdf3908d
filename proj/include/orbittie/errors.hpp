#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbittie {

/// Objects of different player counts were combined.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input data failed kind-specific validation. Carries the full list of
/// violations so callers can report all of them at once.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

private:
  static std::string join(const std::vector<std::string>& vs) {
    std::string out = "validation failed";
    for (const auto& v : vs) {
      out += "\n  - " + v;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

/// A configured resource cap (search nodes, closure size, oracle n) was
/// exceeded. Never a wrong answer: the operation refuses instead.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, unknown labels, schema violations).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Resource caps for the search and oracle paths. Conservative defaults;
/// every cap is overridable per call (CLI flags and environment mirror these).
struct Limits {
  std::uint64_t search_nodes = 1'000'000;  // backtracking nodes in joint_stabilizer
  std::uint64_t closure_size = 3'628'800;  // 10!; group elements enumerated on demand
  int oracle_n = 8;                        // max n for n!-sweep oracles

  static Limits defaults() { return Limits{}; }
};

}  // namespace orbittie
