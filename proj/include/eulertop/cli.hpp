#ifndef EULERTOP_CLI_HPP
#define EULERTOP_CLI_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulertop/rational.hpp"

namespace eulertop::cli {

enum class Format { json, csv };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitUnknownCommand = 64;

struct CommandConfig {
  std::string command;
  // Exact kappa ("p/q" or a finite decimal), or the inertia triple with ell.
  std::optional<Rational> kappa;
  std::optional<std::array<double, 3>> theta;
  double ell = 1.0;
  // Defaults per command when absent (7 for bnf/invariant, 40 for tables, 30 for verify).
  std::optional<int> order;
  double tolerance = 1e-15;
  Format format = Format::json;
  // Significant digits for high-precision values in the output.
  int precision = 20;
  // radius
  int n_max = 120;
  std::vector<std::string> targets;
  // verify
  std::vector<std::string> h_samples;
  std::string scheme = "gauss_legendre";
  // pendulum
  std::vector<double> kappa_grid;
};

const std::vector<std::string>& command_names();

// Validates the config and runs one command. The document goes to out,
// diagnostics to err. Returns one of the exit codes above.
int execute(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (command first) and calls execute.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulertop::cli

#endif  // EULERTOP_CLI_HPP
