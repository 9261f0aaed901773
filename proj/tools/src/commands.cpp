#include "vofl/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vofl/cli/problems.hpp"
#include "vofl/collocation.hpp"
#include "vofl/errors.hpp"
#include "vofl/expr.hpp"
#include "vofl/vof_operators.hpp"

namespace vofl::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ScalarFn compile(const std::string& text, const char* field) {
  try {
    Expr e = parse(text);
    return [e](double x) { return e(x); };
  } catch (const ParseError& err) {
    throw ConfigError(std::string(field) + ": " + err.what() + " in \"" + text + "\"");
  }
}

void require_nonempty(const std::vector<LaguerreParams>& params, const std::vector<int>& Ns,
                      const std::vector<std::string>& orders) {
  if (params.empty()) throw ConfigError("at least one (theta, beta) pair is required");
  if (Ns.empty()) throw ConfigError("N list must be nonempty");
  if (orders.empty()) throw ConfigError("at least one order expression is required");
}

void require_N(int N, int min_N) {
  if (N < min_N) throw ConfigError("N must be >= " + std::to_string(min_N) + ", got " + std::to_string(N));
}

// Certifies the order on `points` and checks its integer ceiling.
OrderFunction certified_order(const ScalarFn& fn, std::span<const double> points,
                              const std::string& text, std::optional<int> want_n) {
  OrderFunction order = OrderFunction::sampled(fn, points);
  if (!order.has_integer_ceiling()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "order \"" << text << "\" ranges over [" << order.rho_min() << ", " << order.rho_max()
        << "], which is not strictly inside (0, 1) or (1, 2)";
    throw ConfigError(msg.str());
  }
  if (want_n && order.n() != *want_n) {
    throw ConfigError("order \"" + text + "\" must lie in (" + std::to_string(*want_n - 1) + ", " +
                      std::to_string(*want_n) + ")");
  }
  return order;
}

template <class BuildSpec>
SolveResult solve_checked(const LaguerreParams& params, int N, const ScalarFn& order,
                          const std::string& text, int want_n, BuildSpec&& build) {
  // Validate on the nodes before assembling so bad orders are config errors.
  certified_order(order, collocation_nodes(params, N, N), text, want_n);
  return solve_detailed(build());
}

std::string log10_field(double err) {
  if (err == 0.0) return "-inf";
  return format_real(std::log10(err));
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::string out = std::string(kTableHeader) + "\n";
  for (const auto& r : rows) {
    out += format_real(r.params.theta()) + "," + format_real(r.params.beta()) + "," +
           std::to_string(r.N) + "," + csv_field(r.order) + "," + format_real(r.length) + "," +
           std::to_string(r.grid) + "," + format_real(r.max_abs_error) + "\n";
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ConfigError(std::string(field) + ": not an integer: \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ConfigError(std::string(field) + ": not an integer: \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string(field) + ": empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text, const char* field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError(std::string(field) + ": not a number: \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ConfigError(std::string(field) + ": not a number: \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string(field) + ": empty list");
  return out;
}

std::vector<LaguerreParams> pair_params(const std::vector<double>& thetas,
                                        const std::vector<double>& betas) {
  if (thetas.empty() || betas.empty()) throw ConfigError("theta and beta lists must be nonempty");
  if (thetas.size() != betas.size() && thetas.size() != 1 && betas.size() != 1) {
    throw ConfigError("theta and beta lists must have equal length (or one of them length 1)");
  }
  const std::size_t n = std::max(thetas.size(), betas.size());
  std::vector<LaguerreParams> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = thetas.size() == 1 ? thetas[0] : thetas[k];
    const double b = betas.size() == 1 ? betas[0] : betas[k];
    try {
      out.emplace_back(t, b);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::vector<TableRow> cmd_example1(const Example1Args& args) {
  require_nonempty(args.params, args.Ns, args.orders);
  const auto grid = uniform_grid(1.0, args.grid);
  std::vector<TableRow> rows;
  for (const auto& params : args.params) {
    for (int N : args.Ns) {
      require_N(N, 0);
      for (const auto& text : args.orders) {
        const auto fn = compile(text, "order");
        certified_order(fn, grid, text, std::nullopt);
        rows.push_back({params, N, text, 1.0, args.grid, example1_max_error(params, N, fn, args.grid)});
      }
    }
  }
  return rows;
}

Example2Output cmd_example2(const Example2Args& args) {
  require_nonempty(args.params, args.Ns, args.orders);
  if (!(args.length > 0.0)) throw ConfigError("length must be > 0");
  const auto grid = uniform_grid(args.length, args.grid);
  Example2Output out;
  out.pointwise_csv = "theta,beta,N,order,x,abs_error,log10_abs_error\n";
  for (const auto& params : args.params) {
    for (int N : args.Ns) {
      require_N(N, 2);
      for (const auto& text : args.orders) {
        const auto fn = compile(text, "order");
        const auto result = solve_checked(params, N, fn, text, 2, [&] {
          return example2_spec(params, N, fn, args.length);
        });
        const auto report = max_abs_error(result.coeffs, example2_exact, args.length, args.grid);
        out.rows.push_back({params, N, text, args.length, args.grid, report.max_abs_error});
        const std::string prefix = format_real(params.theta()) + "," + format_real(params.beta()) +
                                   "," + std::to_string(N) + "," + csv_field(text) + ",";
        for (double x : grid) {
          const double err = std::fabs(eval_interpolant(result.coeffs, x) - example2_exact(x));
          out.pointwise_csv += prefix + format_real(x) + "," + format_real(err) + "," +
                               log10_field(err) + "\n";
        }
      }
    }
  }
  return out;
}

std::vector<TableRow> cmd_example3(const Example3Args& args) {
  require_nonempty(args.params, args.Ns, args.orders);
  std::vector<TableRow> rows;
  for (const auto& params : args.params) {
    for (int N : args.Ns) {
      require_N(N, 2);
      for (const auto& text : args.orders) {
        const auto fn = compile(text, "order");
        const auto result =
            solve_checked(params, N, fn, text, 2, [&] { return example3_spec(params, N, fn); });
        const auto report = max_abs_error(result.coeffs, example3_exact, kExample3Length, args.grid);
        rows.push_back({params, N, text, kExample3Length, args.grid, report.max_abs_error});
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Config files

namespace {

const std::set<std::string> kConfigKeys = {
    "mode", "problem", "theta", "beta", "N",     "order", "u",      "a",   "b",    "c",
    "f",    "exact",   "m",     "u0",   "v0",    "length", "grid",  "out", "report"};

template <class T>
T get_field(const nlohmann::json& j, const char* key, const char* type_name) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' must be " + type_name);
  }
}

template <class T>
std::optional<T> opt_field(const nlohmann::json& j, const char* key, const char* type_name) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_field<T>(j, key, type_name);
}

double real_field(const nlohmann::json& j, const char* key) {
  if (!j.at(key).is_number()) throw ConfigError(std::string("config field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

RunConfig parse_run_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.contains(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  RunConfig cfg;
  const std::string mode = opt_field<std::string>(j, "mode", "a string").value_or("solve");
  if (mode == "solve") {
    cfg.mode = Mode::Solve;
  } else if (mode == "derivative") {
    cfg.mode = Mode::Derivative;
  } else if (mode == "integral") {
    cfg.mode = Mode::Integral;
  } else {
    throw ConfigError("config field 'mode' must be one of derivative, integral, solve");
  }
  cfg.problem = opt_field<std::string>(j, "problem", "a string");
  if (j.contains("theta")) cfg.theta = real_field(j, "theta");
  if (j.contains("beta")) cfg.beta = real_field(j, "beta");
  if (!j.contains("N")) throw ConfigError("config field 'N' is required");
  if (j.at("N").is_array()) {
    cfg.Ns = get_field<std::vector<int>>(j, "N", "an integer or a list of integers");
  } else {
    cfg.Ns = {get_field<int>(j, "N", "an integer or a list of integers")};
  }
  if (cfg.Ns.empty()) throw ConfigError("config field 'N' must be nonempty");
  if (!j.contains("order")) throw ConfigError("config field 'order' is required");
  if (j.at("order").is_number()) {
    cfg.order = format_real(j.at("order").get<double>());
  } else {
    cfg.order = get_field<std::string>(j, "order", "an expression string");
  }
  cfg.u = opt_field<std::string>(j, "u", "an expression string");
  cfg.a = opt_field<std::string>(j, "a", "an expression string");
  cfg.b = opt_field<std::string>(j, "b", "an expression string");
  cfg.c = opt_field<std::string>(j, "c", "an expression string");
  cfg.f = opt_field<std::string>(j, "f", "an expression string");
  cfg.exact = opt_field<std::string>(j, "exact", "an expression string");
  cfg.m = opt_field<int>(j, "m", "an integer").value_or(1);
  if (j.contains("u0")) cfg.u0 = real_field(j, "u0");
  if (j.contains("v0") && !j.at("v0").is_null()) cfg.v0 = real_field(j, "v0");
  if (j.contains("length")) cfg.length = real_field(j, "length");
  cfg.grid = opt_field<int>(j, "grid", "an integer").value_or(kDefaultGrid);
  cfg.out = opt_field<std::string>(j, "out", "a path string");
  cfg.report = opt_field<std::string>(j, "report", "a path string");

  if (cfg.grid < 2) throw ConfigError("config field 'grid' must be >= 2");
  if (cfg.length && !(*cfg.length > 0.0)) throw ConfigError("config field 'length' must be > 0");
  if (cfg.problem) {
    const std::string& p = *cfg.problem;
    const bool ok = (p == "example1" && cfg.mode == Mode::Derivative) ||
                    ((p == "example2" || p == "example3") && cfg.mode == Mode::Solve);
    if (!ok) throw ConfigError("config field 'problem': \"" + p + "\" is not valid in this mode");
    const bool overridden = cfg.u || cfg.a || cfg.b || cfg.c || cfg.f || cfg.exact ||
                            j.contains("m") || j.contains("u0") || j.contains("v0");
    if (overridden) {
      throw ConfigError("config fields u, a, b, c, f, exact, m, u0, v0 cannot be combined with 'problem'");
    }
    if (p == "example3" && cfg.length) {
      throw ConfigError("config field 'length' is fixed to pi/2 for problem example3");
    }
  } else if (cfg.mode == Mode::Solve) {
    for (const auto& [name, field] : {std::pair{"a", &cfg.a}, {"b", &cfg.b}, {"c", &cfg.c}, {"f", &cfg.f}}) {
      if (!*field) throw ConfigError(std::string("config field '") + name + "' is required in solve mode");
    }
  } else if (!cfg.u) {
    throw ConfigError("config field 'u' is required in derivative and integral modes");
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_run_config(j);
}

namespace {

struct Problem {
  IvpSpec spec;
  ScalarFn exact;  // may be empty
};

void append_samples(std::string& csv, int N, const std::vector<double>& grid,
                    const std::vector<double>& values, const ScalarFn& exact) {
  for (std::size_t k = 0; k < grid.size(); ++k) {
    csv += std::to_string(N) + "," + format_real(grid[k]) + "," + format_real(values[k]);
    if (exact) {
      const double e = exact(grid[k]);
      csv += "," + format_real(e) + "," + format_real(std::fabs(values[k] - e));
    }
    csv += "\n";
  }
}

double max_error(const std::vector<double>& grid, const std::vector<double>& values,
                 const ScalarFn& exact) {
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max(worst, std::fabs(values[k] - exact(grid[k])));
  }
  return worst;
}

}  // namespace

SolveOutput cmd_solve(const RunConfig& cfg) {
  LaguerreParams params = [&] {
    try {
      return LaguerreParams(cfg.theta, cfg.beta);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }();
  const auto order_fn = compile(cfg.order, "order");
  const bool is_ex3 = cfg.problem == "example3";
  const double length = is_ex3 ? kExample3Length : cfg.length.value_or(1.0);
  const auto grid = uniform_grid(length, cfg.grid);

  ScalarFn exact;
  if (cfg.exact) exact = compile(*cfg.exact, "exact");

  if (cfg.problem == "example2") exact = example2_exact;
  if (is_ex3) exact = example3_exact;
  const bool has_exact = exact || cfg.problem == "example1";

  SolveOutput out;
  out.samples_csv = has_exact ? "N,x,value,exact,abs_error\n" : "N,x,value\n";

  for (int N : cfg.Ns) {
    std::vector<double> values;
    values.reserve(grid.size());

    if (cfg.mode == Mode::Solve) {
      require_N(N, 2);
      SolveResult result = [&] {
        if (cfg.problem == "example2") {
          return solve_checked(params, N, order_fn, cfg.order, 2,
                               [&] { return example2_spec(params, N, order_fn, length); });
        }
        if (is_ex3) {
          return solve_checked(params, N, order_fn, cfg.order, 2,
                               [&] { return example3_spec(params, N, order_fn); });
        }
        const auto nodes = collocation_nodes(params, N, N);
        const OrderFunction order = certified_order(order_fn, nodes, cfg.order, std::nullopt);
        const int n = order.n();
        if (n == 2 && !cfg.v0) {
          throw ConfigError("config field 'v0' is required when the order lies in (1, 2)");
        }
        if (n == 1 && cfg.v0) throw ConfigError("config field 'v0' must be absent when the order lies in (0, 1)");
        if (n == 1 && cfg.m != 1) throw ConfigError("config field 'm' must be 1 when the order lies in (0, 1)");
        if (cfg.m != 1 && cfg.m != 2) throw ConfigError("config field 'm' must be 1 or 2");
        IvpSpec spec{params, N, order, cfg.m, compile(*cfg.a, "a"), compile(*cfg.b, "b"),
                     compile(*cfg.c, "c"), compile(*cfg.f, "f"), cfg.u0, cfg.v0, length};
        return solve_detailed(spec);
      }();
      if (exact) {
        const auto report = max_abs_error(result.coeffs, exact, length, cfg.grid);
        out.report.push_back({params, N, cfg.order, length, cfg.grid, report.max_abs_error});
      }
      for (double x : grid) values.push_back(eval_interpolant(result.coeffs, x));
    } else {
      require_N(N, 0);
      const auto rule = gauss_rule(params, N);
      const bool ex1 = cfg.problem == "example1";
      const ScalarFn u = ex1 ? ScalarFn([](double x) { return std::exp(x); }) : compile(*cfg.u, "u");
      const auto coeffs = interpolate(rule, u);
      if (cfg.mode == Mode::Derivative) {
        const OrderFunction order = certified_order(order_fn, grid, cfg.order, std::nullopt);
        if (ex1) exact = [order](double x) { return caputo_exp_exact(order, x); };
        for (double x : grid) values.push_back(vo_derivative(coeffs, order, x));
      } else {
        const OrderFunction order = [&] {
          try {
            return OrderFunction::sampled(order_fn, grid);
          } catch (const DomainError& e) {
            throw ConfigError("order \"" + cfg.order + "\": " + e.what());
          }
        }();
        for (double x : grid) values.push_back(vo_integral(coeffs, order, x));
      }
      if (exact) {
        out.report.push_back({params, N, cfg.order, length, cfg.grid, max_error(grid, values, exact)});
      }
    }
    append_samples(out.samples_csv, N, grid, values, exact);
  }
  return out;
}

}  // namespace vofl::cli
