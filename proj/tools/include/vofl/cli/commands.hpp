#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vofl/laguerre.hpp"

namespace vofl::cli {

/// Invalid or inconsistent user input (maps to exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGrid = 1001;

/// One table row; every table shares the column layout of kTableHeader.
struct TableRow {
  LaguerreParams params;
  int N;
  std::string order;
  double length;
  int grid;
  double max_abs_error;
};

inline constexpr const char* kTableHeader = "theta,beta,N,order,length,grid,max_abs_error";

/// %.17g: round-trips every double.
std::string format_real(double v);
std::string format_table(const std::vector<TableRow>& rows);

struct Example1Args {
  std::vector<LaguerreParams> params;
  std::vector<int> Ns;
  std::vector<std::string> orders;
  int grid = kDefaultGrid;
};

struct Example2Args {
  std::vector<LaguerreParams> params;
  std::vector<int> Ns;
  std::vector<std::string> orders;
  double length = 1.0;
  int grid = kDefaultGrid;
};

struct Example3Args {
  std::vector<LaguerreParams> params;
  std::vector<int> Ns;
  std::vector<std::string> orders;
  int grid = kDefaultGrid;
};

/// Rows in the order params × N × order, all loops nested in that order.
std::vector<TableRow> cmd_example1(const Example1Args& args);

struct Example2Output {
  std::vector<TableRow> rows;
  std::string pointwise_csv;  // theta,beta,N,order,x,abs_error,log10_abs_error
};
Example2Output cmd_example2(const Example2Args& args);

std::vector<TableRow> cmd_example3(const Example3Args& args);

enum class Mode { Derivative, Integral, Solve };

/// A user computation loaded from a JSON config. Expressions are strings in
/// the vofl expression language. `problem` selects a built-in preset
/// ("example1" for derivative mode, "example2"/"example3" for solve mode)
/// that supplies u / a, b, c, f, m, u0, v0 and the exact solution.
struct RunConfig {
  Mode mode = Mode::Solve;
  std::optional<std::string> problem;
  double theta = 0.0;
  double beta = 1.0;
  std::vector<int> Ns;
  std::string order;
  std::optional<std::string> u;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::optional<std::string> f;
  std::optional<std::string> exact;
  int m = 1;
  double u0 = 0.0;
  std::optional<double> v0;
  std::optional<double> length;  // default 1, or π/2 for example3
  int grid = kDefaultGrid;
  std::optional<std::string> out;
  std::optional<std::string> report;
};

/// Throws ConfigError naming the offending field.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

struct SolveOutput {
  std::string samples_csv;  // N,x,value[,exact,abs_error]
  std::vector<TableRow> report;  // empty unless an exact solution is known
};

/// Runs a config in any mode. Numerical failures propagate as vofl errors.
SolveOutput cmd_solve(const RunConfig& config);

/// Parses "1,2,3" style lists.
std::vector<int> parse_int_list(const std::string& text, const char* field);
std::vector<double> parse_real_list(const std::string& text, const char* field);

/// Pairs θ and β lists (equal length, or one side of length 1 broadcast).
std::vector<LaguerreParams> pair_params(const std::vector<double>& thetas,
                                        const std::vector<double>& betas);

}  // namespace vofl::cli
