#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rule150/cli.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Writes `text` to `path`, or to stdout when the path is empty.
int emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write " << path << '\n';
    return rule150::cli::kUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rule150::cli;

  CLI::App app{"Rule 150 cellular automaton, its counting formulas and singular function"};
  app.require_subcommand(0, 1);
  bool meta = false;
  app.add_flag("--meta", meta, "Print version information and exit");

  std::string out_path;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Output file (default stdout)"); };

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Space-time diagram from the single-site seed");
  simulate->add_option("--rule", sim.rule, "Even Wolfram code")->capture_default_str();
  simulate->add_option("--steps", sim.steps, "Number of steps")->capture_default_str();
  simulate->add_option("--format", sim.format, "pbm | pbm4 | csv")->capture_default_str();
  add_out(simulate);

  CountsOptions cnt;
  auto* counts = app.add_subcommand("counts", "Tables of num(n) or cum(n)");
  counts->add_option("--mode", cnt.mode, "num | cum")->capture_default_str();
  counts->add_option("--upto", cnt.upto, "Largest n")->capture_default_str();
  counts->add_option("--method", cnt.method, "direct | matrix | closed")->capture_default_str();
  add_out(counts);

  EvalOptions ev;
  std::string eps;
  auto* eval = app.add_subcommand("eval", "Evaluate F at a point");
  eval->add_option("--x", ev.x, "m/2^i, p/q, bits=<word>[(<period>)] or random:<seed>")->required();
  eval->add_option("--digits", ev.digits, "Decimal digits")->capture_default_str();
  eval->add_option("--eps", eps, "Enclosure width, e.g. 1e-6 or 1/1000");
  eval->add_option("--method", ev.method, "auto | series | recursive | periodic | enclosure | fk")
      ->capture_default_str();
  eval->add_option("--k", ev.k, "Depth for --method fk")->capture_default_str();
  eval->add_flag("--json", ev.json, "JSON output");
  add_out(eval);

  PlotOptions plot;
  auto* plot_f = app.add_subcommand("plot-f", "Sample F on all dyadics of a given depth");
  plot_f->add_option("--depth", plot.depth, "Dyadic depth (<= 20)")->capture_default_str();
  plot_f->add_option("--format", plot.format, "csv | svg")->capture_default_str();
  add_out(plot_f);

  LimitsetOptions lim;
  auto* limitset = app.add_subcommand("limitset", "Prefractal S(2^k - 1) as a bitmap");
  limitset->add_option("--k", lim.k, "Order (<= 14)")->capture_default_str();
  limitset->add_option("--format", lim.format, "pbm | pbm4")->capture_default_str();
  add_out(limitset);

  int jmin = 8, jmax = 24;
  auto* dimension = app.add_subcommand("dimension", "Box-counting slope from exact counts");
  dimension->add_option("--jmin", jmin)->capture_default_str();
  dimension->add_option("--jmax", jmax)->capture_default_str();
  add_out(dimension);

  QuotientsOptions quo;
  auto* quotients = app.add_subcommand("quotients", "Difference quotients at a dyadic point");
  quotients->add_option("--x", quo.x, "Dyadic point in (0, 1)")->capture_default_str();
  quotients->add_option("--mmax", quo.mmax, "Largest m")->capture_default_str();
  quotients->add_option("--side", quo.side, "left | right | both")->capture_default_str();
  quotients->add_option("--digits", quo.digits)->capture_default_str();
  add_out(quotients);

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("--suite", suite, "eca | counting | singular | analysis | fractal | all")
      ->capture_default_str();
  add_out(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (meta) {
    std::cout << "{\"name\": \"rule150\", \"version\": \"" << kVersion << "\"}\n";
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return kUsage;
  }
  if (eval->parsed() && !eps.empty()) ev.eps = eps;

  std::ostringstream buffer;
  const int code = run_guarded(
      [&]() -> int {
        if (simulate->parsed()) return cmd_simulate(sim, buffer);
        if (counts->parsed()) return cmd_counts(cnt, buffer);
        if (eval->parsed()) return cmd_eval(ev, buffer);
        if (plot_f->parsed()) return cmd_plot_f(plot, buffer);
        if (limitset->parsed()) return cmd_limitset(lim, buffer);
        if (dimension->parsed()) return cmd_dimension(jmin, jmax, buffer);
        if (quotients->parsed()) return cmd_quotients(quo, buffer);
        return cmd_check(suite, buffer);
      },
      std::cerr);
  if (code == kUsage) return code;
  const int io = emit(out_path, buffer.str());
  return io != 0 ? io : code;
}
