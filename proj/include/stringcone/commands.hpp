#pragma once

#include <optional>
#include <string>

#include "stringcone/io.hpp"

namespace stringcone {

/// Command-line overrides; they win over the corresponding document fields.
struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<long long> degreeCap;
  std::optional<Rational> qMode;
};

struct CommandResult {
  int exitCode;  // 0 ok, 1 invariant/certification failure, 2 malformed input
  Json output;
};

/// Runs one command against a parsed input document. Never throws: parse
/// problems come back as exit 2, pipeline failures as exit 1, both with a
/// structured error object in the output.
CommandResult runCommand(const std::string& command, const Json& input,
                         const CliOverrides& overrides);

/// Flat human-readable rendering of a command output.
std::string renderText(const Json& output);

}  // namespace stringcone
