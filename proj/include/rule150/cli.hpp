#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "rule150/bigint.hpp"
#include "rule150/checks.hpp"
#include "rule150/quadratic.hpp"

namespace rule150::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Thrown for malformed flag values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxSimulateSteps = 16384;
constexpr std::size_t kMaxDirectCount = 16384;
constexpr std::size_t kMaxCountRows = 1u << 20;
constexpr unsigned kMaxPlotDepth = 20;

/// A point argument: an exact rational in [0, 1] or a bit stream.
using Point = std::variant<Rational, BitStream>;

/// Parses `m/2^i`, `p/q`, an integer, `bits=<word>[(<period>)]` or
/// `random:<seed>`. Throws UsageError.
Point parse_point(const std::string& text);

/// Parses a positive tolerance such as `1e-6`, `0.001` or `1/1000`.
Rational parse_tolerance(const std::string& text);

struct SimulateOptions {
  int rule = 150;
  std::size_t steps = 31;
  std::string format = "pbm";  // pbm | pbm4 | csv
};
int cmd_simulate(const SimulateOptions& opt, std::ostream& out);

struct CountsOptions {
  std::string mode = "cum";       // num | cum
  std::size_t upto = 255;
  std::string method = "matrix";  // direct | matrix | closed
};
int cmd_counts(const CountsOptions& opt, std::ostream& out);

struct EvalOptions {
  std::string x;
  unsigned digits = 12;
  std::optional<std::string> eps;
  std::string method = "auto";  // auto | series | recursive | periodic | enclosure | fk
  unsigned long k = 64;          // for fk
  bool json = false;
};
int cmd_eval(const EvalOptions& opt, std::ostream& out);

struct PlotOptions {
  unsigned depth = 8;
  std::string format = "csv";  // csv | svg
};
int cmd_plot_f(const PlotOptions& opt, std::ostream& out);

struct LimitsetOptions {
  unsigned k = 8;
  std::string format = "pbm";  // pbm | pbm4
};
int cmd_limitset(const LimitsetOptions& opt, std::ostream& out);

int cmd_dimension(int jmin, int jmax, std::ostream& out);

struct QuotientsOptions {
  std::string x = "1/2";
  unsigned long mmax = 40;
  std::string side = "both";  // left | right | both
  unsigned digits = 12;
};
int cmd_quotients(const QuotientsOptions& opt, std::ostream& out);

int cmd_check(const std::string& suite, std::ostream& out);

/// JSON rendering of a check report with stable key order.
std::string report_json(const CheckReport& report);

}  // namespace rule150::cli

namespace rule150::cli {

/// Runs a command, mapping usage and domain errors to exit code 2 with a
/// message on `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace rule150::cli
