#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "effmodel/model/conductor.hpp"
#include "effmodel/ring/base_element.hpp"
#include "effmodel/witt/witt2.hpp"

namespace effmodel::cli {

enum class Format { Text, Json };

struct WittCommand {
  std::string op;  // add, neg, sub, frobenius, phi
  std::uint32_t p = 0;
  ring::BaseElement lambda, nu;
  std::vector<witt::WittPair> operands;
  Format format = Format::Text;
};

struct HopfCheckCommand {
  std::uint32_t p = 0;
  ring::BaseElement lambda, nu;
  Format format = Format::Text;
};

struct DegenerateCommand {
  model::ConductorSpec spec;
  Format format = Format::Text;
};

struct SweepCommand {
  std::vector<model::ConductorSpec> specs;
  std::filesystem::path out;
};

struct VerifyCommand {
  std::vector<std::uint32_t> primes;
};

using Command = std::variant<WittCommand, HopfCheckCommand, DegenerateCommand, SweepCommand, VerifyCommand>;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUnsupported = 2;
inline constexpr int kVerificationFailed = 3;
inline constexpr int kUsage = 64;

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Arguments without the program name. Every parameter is validated here:
/// UsageError for bad flags, non-prime p or malformed expressions,
/// UnsupportedRegime for conductors outside the two regimes.
Command parse_args(const std::vector<std::string>& args);

/// Execute a parsed command; results go to `out`, progress to `log`.
/// Returns kOk or kVerificationFailed; library errors propagate.
int run(const Command& cmd, std::ostream& out, std::ostream& log);

/// parse_args + run with errors mapped to exit codes and reported on `log`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

}  // namespace effmodel::cli
