// Command-line front end: reads a cone or strata description as JSON from a
// file or stdin, runs one pipeline command, and writes a JSON or text report.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stringcone/commands.hpp"
#include "stringcone/errors.hpp"

namespace {

std::string readInput(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw stringcone::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pipeline for graded cones: triangulations, box decompositions, "
               "degree polynomials, quotients, pairings, and stringy E-polynomials"};
  app.require_subcommand(1);

  std::string inputPath;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seedSet = false;
  long long degreeCap = -1;
  std::string qMode;

  const std::vector<std::string> names = {"validate", "triangulate", "decompose",
                                          "series",   "quotient",    "pairing",
                                          "stringy",  "certify"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", inputPath, "input JSON file ('-' or omitted: stdin)");
    sub->add_option("--seed", seed, "seed for all randomized stages")
        ->each([&](const std::string&) { seedSet = true; });
    sub->add_option("--degree-cap", degreeCap, "truncation degree (default 2*rank+2)");
    sub->add_option("--q-mode", qMode,
                    "coefficient specialization q^height for rational q (\"p/q\")");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();

  stringcone::CliOverrides overrides;
  if (seedSet) overrides.seed = seed;
  if (degreeCap >= 0) overrides.degreeCap = degreeCap;

  stringcone::CommandResult result;
  try {
    if (!qMode.empty()) overrides.qMode = stringcone::Rational::fromString(qMode);
    stringcone::Json input = stringcone::Json::parse(readInput(inputPath));
    result = stringcone::runCommand(command, input, overrides);
  } catch (const nlohmann::json::parse_error& e) {
    stringcone::Json out;
    out["command"] = command;
    out["ok"] = false;
    out["error"] = {{"type", "parse"}, {"message", e.what()}};
    result = {2, std::move(out)};
  } catch (const std::exception& e) {
    stringcone::Json out;
    out["command"] = command;
    out["ok"] = false;
    out["error"] = {{"type", "parse"}, {"message", e.what()}};
    result = {2, std::move(out)};
  }

  if (format == "text")
    std::cout << stringcone::renderText(result.output);
  else
    std::cout << result.output.dump(2) << "\n";
  return result.exitCode;
}
