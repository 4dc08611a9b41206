#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "negabase/error.hpp"
#include "negabase/integers.hpp"

namespace negabase::cli {

enum class Command { analyze, orbit, morphism, integers, distances, expand, render };
enum class Format { json, text, svg };

struct RunConfig {
  Command command = Command::analyze;
  std::string polynomial;
  std::optional<std::pair<std::string, std::string>> interval;
  std::pair<std::string, std::string> window{"-b^3", "b^4"};
  std::optional<std::string> point;
  std::size_t digits = 10;
  std::size_t count = 20;
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t word_cap = kDefaultWordCap;
  int precision = 6;
  Format format = Format::json;
  Side side = Side::minus_beta;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

/// args excludes the program name. Throws Error(invalid_input) on bad input;
/// returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_spec(const std::vector<std::string>& args, std::ostream& out);

/// Runs a validated config; reports errors on `out` (JSON) or `err` (text).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point used by the executable.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text number line: ticks '|' with gap labels between them.
std::string render_text(const IntegerEnumeration& e, int precision);
/// SVG 1.1 number line.
std::string render_svg(const IntegerEnumeration& e, int precision);

int exit_code(ErrorCode code);

}  // namespace negabase::cli
