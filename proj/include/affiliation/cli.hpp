#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "affiliation/oracle.hpp"

namespace affiliation::cli {

enum class Subcommand { kEvaluate, kEvaluatePoints, kAdversary, kTheory, kConvert };

struct RunConfig {
  Subcommand subcommand = Subcommand::kEvaluate;
  std::string input;
  std::string output;          // empty: standard output
  std::string format = "auto";  // evaluate input: auto | csv | json
  bool table = false;
  bool directional = false;
  std::optional<double> t_last;
  bool oracle = false;
  oracle::OracleConfig oracle_config;

  // adversary
  std::string labels;  // inline comma-separated trivial labels
  std::string variant = "alternate";
  std::size_t pieces = 10;
  std::optional<double> threshold;
  std::string direction = "below";

  // theory
  std::size_t points = 100;
  std::vector<double> p_values;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitContractViolation = 2;

/// Parses arguments (argv[0] is the program name). Throws CLI::ParseError
/// subclasses on bad usage.
RunConfig parse_args(int argc, const char* const* argv);

/// Executes a parsed configuration. Output goes to config.output or `out`;
/// failures produce a single diagnostic line on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the documented exit codes.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affiliation::cli
