#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracjet/fracops.hpp"
#include "fracjet/lagrangians.hpp"
#include "fracjet/varcalc.hpp"

namespace fracjet::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Invalid command line or configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version; what() holds the text to print. Exit status 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { deriv, mlf, lift, action, el_check, solve, models };
enum class Format { csv, json };

struct Grid {
  double t0 = 0.0;
  double T = 1.0;
  std::size_t n_pts = 1025;
};

struct RunConfig {
  Command command = Command::models;
  std::optional<double> alpha;
  int k = 1;
  Grid grid;

  // Built-in test functions: pow, const, sin, exp, bump.
  std::string fn = "pow";
  double gamma = 2.0;
  double c = 1.0;
  double center = 0.5;
  double width = 0.25;
  Side side = Side::left;

  double z = 0.0;
  double tol = 1e-14;

  std::string model;
  std::string lagrangian;
  std::map<std::string, double> params;
  CoefficientSet coeffs = CoefficientSet::normalized;
  Variant variant = Variant::classical;
  std::string forcing;    // zero | const:v | pow:g | sin | exp | manufactured:p
  std::string potential;  // quadratic:b
  std::string from_file;

  std::string output;  // empty = standard output
  Format format = Format::csv;

  /// Throws UsageError when the grid or alpha is out of range.
  void validate() const;
};

/// Parses arguments (program name excluded). A `--config file.json` object
/// supplies any flag by name; flags given on the command line win.
/// Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a validated configuration. Module errors propagate as exceptions.
void execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with exit-status mapping: 0 success, 2 invalid
/// arguments, 3 numerical failure (one-line diagnostic on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.17g") with a '.' decimal separator regardless of locale.
std::string format_number(double v);

}  // namespace fracjet::cli
