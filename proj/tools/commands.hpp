#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "problem.hpp"

namespace famloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitLowConfidence = 4;

inline constexpr int kMachineSchemaVersion = 1;

const std::vector<std::string>& subcommands();

struct RunOptions {
  std::string order = "grevlex";
  std::uint64_t seed = 1;
  unsigned trials = 3;
  unsigned max_minor_size = 8;
  unsigned max_branch_depth = 64;
  std::string containment = "normal-form";
  std::optional<std::string> witness_point;
  unsigned veronese_degree = 1;
  std::vector<std::string> names;
  std::size_t max_gl_size = 3;
  /// Ideal names; empty picks I / J or the first / second declared ideal.
  std::string ideal;
  std::string other;
  std::string action;
  std::optional<int> dim;
  bool prime = false;
};

struct RunResult {
  std::string text;
  nlohmann::json machine;
  bool low_confidence = false;
};

/// Runs one subcommand. Throws ParseError (bad flag values), PreconditionError
/// and ResourceCapExceeded.
RunResult run_command(const std::string& subcommand, const ProblemFile& problem,
                      const RunOptions& options);

/// Machine-readable envelope around a result.
nlohmann::json machine_document(const std::string& subcommand, const RunResult& r);

nlohmann::json to_json(const ConstructibleSet& A);
nlohmann::json to_json(const Ideal& I);

}  // namespace famloc::cli
