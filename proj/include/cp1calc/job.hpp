#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp1calc/io.hpp"

namespace cp1 {

enum class Command { Invariants, Transition, Compare, VerifyPaper };
enum class OutputFormat { Json, Table };

// Stable process exit codes.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kBudget = 3;
inline constexpr int kVerifyFailed = 4;
}  // namespace exit_code

struct SystemInput {
  InvariantSystem system;
  std::string description;
};

struct JobSpec {
  Command command = Command::Invariants;
  std::optional<FourManifold> base;
  std::optional<RankTwoBundle> bundle;
  std::optional<SystemInput> left;
  std::optional<SystemInput> right;

  int bound = 3;
  std::vector<int> primes{2, 3, 5};
  bool check_c1 = false;
  bool swap = false;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t budget = 1'000'000'000ULL;
  int threads = 0;
};

/// Parses a job document:
///   {"schema": "cp1calc/job/v1", "command": "invariants",
///    "base": "CP2 # CP2bar", "bundle": {"c1": [0, -1], "c2": -1},
///    "left": ..., "right": ..., "options": {...}}
/// "command" defaults to "invariants". Throws ParseError or ValidationError.
JobSpec parse_input(std::string_view text);

/// Resolves one side of a comparison: a system document, a report carrying
/// "system", {"mk": k}, or a descriptor {"base", "bundle"} with optional
/// "side": "z1"|"z2" and "blowups": n.
SystemInput system_input_from_json(const Json& j);

struct Report {
  Json document;
  int exit_code = exit_code::kOk;

  std::string render(OutputFormat format) const;
};

Report run(const JobSpec& job);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The fixed reproduction suite behind `verify-paper`.
std::vector<CheckResult> reproduction_checks(int threads = 0);

}  // namespace cp1
