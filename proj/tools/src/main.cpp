// vofl: variable-order fractional Laguerre spectral calculator.
//
// Exit codes: 0 success, 1 invalid input or config, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vofl/cli/commands.hpp"
#include "vofl/errors.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vofl::cli::ConfigError("cannot open output file '" + path + "'");
  out << text;
}

struct TableFlags {
  std::string theta;
  std::string beta;
  std::string N;
  std::vector<std::string> orders;
  int grid = vofl::cli::kDefaultGrid;
  std::string out;
};

void add_table_flags(CLI::App& cmd, TableFlags& f) {
  cmd.add_option("--theta", f.theta, "Comma list of theta values (paired with --beta)")->capture_default_str();
  cmd.add_option("--beta", f.beta, "Comma list of beta values")->capture_default_str();
  cmd.add_option("--N", f.N, "Comma list of truncation degrees")->capture_default_str();
  cmd.add_option("--order", f.orders, "Order expression in x; repeat for several")->capture_default_str();
  cmd.add_option("--grid", f.grid, "Points in the uniform error grid")->capture_default_str();
  cmd.add_option("--out", f.out, "Output CSV path (default: stdout)");
}

std::vector<vofl::LaguerreParams> params_of(const TableFlags& f) {
  return vofl::cli::pair_params(vofl::cli::parse_real_list(f.theta, "--theta"),
                                vofl::cli::parse_real_list(f.beta, "--beta"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Variable-order fractional derivatives, integrals and IVP solutions by generalized "
      "Laguerre spectral collocation.\nExpressions use x, pi, + - * / ^ (right-associative, "
      "binds tighter than unary minus) and sin cos tan tanh exp log sqrt abs gamma."};
  app.require_subcommand(1);

  TableFlags ex1{"1,2", "3,6", "10,20,40,80", {"0.2", "0.5", "0.8", "1.2", "1.5", "1.8"}};
  auto* cmd1 = app.add_subcommand("example1", "Max error of D^order e^x on [0, 1]");
  add_table_flags(*cmd1, ex1);

  TableFlags ex2{"0,2,3", "1,4,6", "5,10,15,20", {"3/2", "(9 + sin(x - 10))/5"}};
  double length = 1.0;
  std::string pointwise;
  auto* cmd2 = app.add_subcommand("example2", "Bagley-Torvik IVP with exact solution sin x");
  add_table_flags(*cmd2, ex2);
  cmd2->add_option("--length", length, "Error domain [0, L]")->capture_default_str();
  cmd2->add_option("--pointwise", pointwise, "Also write per-point errors to this CSV path");

  TableFlags ex3{"10", "10", "3,4,5", {"1.5", "1 + 0.5*abs(sin(x))"}};
  auto* cmd3 = app.add_subcommand("example3", "Bagley-Torvik IVP with exact solution x^3 + x + 1");
  add_table_flags(*cmd3, ex3);

  std::string config_path;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Run a JSON config (derivative, integral or solve mode)");
  solve->add_option("--config", config_path, "JSON run configuration")->required();
  solve->add_option("--out", solve_out, "Samples CSV path (overrides the config's 'out')");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*cmd1) {
      vofl::cli::Example1Args args{params_of(ex1), vofl::cli::parse_int_list(ex1.N, "--N"),
                                   ex1.orders, ex1.grid};
      emit(vofl::cli::format_table(vofl::cli::cmd_example1(args)), ex1.out);
    } else if (*cmd2) {
      vofl::cli::Example2Args args{params_of(ex2), vofl::cli::parse_int_list(ex2.N, "--N"),
                                   ex2.orders, length, ex2.grid};
      const auto result = vofl::cli::cmd_example2(args);
      emit(vofl::cli::format_table(result.rows), ex2.out);
      if (!pointwise.empty()) emit(result.pointwise_csv, pointwise);
    } else if (*cmd3) {
      vofl::cli::Example3Args args{params_of(ex3), vofl::cli::parse_int_list(ex3.N, "--N"),
                                   ex3.orders, ex3.grid};
      emit(vofl::cli::format_table(vofl::cli::cmd_example3(args)), ex3.out);
    } else if (*solve) {
      auto cfg = vofl::cli::load_run_config(config_path);
      if (!solve_out.empty()) cfg.out = solve_out;
      const auto result = vofl::cli::cmd_solve(cfg);
      const std::string samples_path = cfg.out.value_or("");
      emit(result.samples_csv, samples_path);
      if (!result.report.empty()) {
        const std::string report = vofl::cli::format_table(result.report);
        if (cfg.report) {
          emit(report, *cfg.report);
        } else {
          emit(samples_path.empty() ? "\n" + report : report, "");
        }
      }
    }
  } catch (const vofl::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vofl::UsageError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vofl::DomainError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const vofl::SolverError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
