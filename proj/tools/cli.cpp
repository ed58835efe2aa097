#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>
#include <type_traits>
#include <variant>

#include "fracjet/error.hpp"
#include "fracjet/fodesolve.hpp"
#include "fracjet/jet.hpp"
#include "fracjet/models.hpp"
#include "fracjet/specfun.hpp"

namespace fracjet::cli {
namespace {

using nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  ordered_json meta = ordered_json::object();
};

const std::map<std::string, Command> kCommands = {
    {"deriv", Command::deriv},   {"mlf", Command::mlf},           {"lift", Command::lift},
    {"action", Command::action}, {"el-check", Command::el_check}, {"solve", Command::solve},
    {"models", Command::models},
};

std::string command_name(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::string trim(std::string s) {
  const auto issp = [](unsigned char ch) { return std::isspace(ch) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
  return s;
}

double parse_double(const std::string& text, const std::string& what) {
  std::istringstream is(trim(text));
  is.imbue(std::locale::classic());
  double v = 0.0;
  if (!(is >> v) || !is.eof()) throw UsageError("invalid number for " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid expects t0:T:n_pts, got '" + text + "'");
  Grid g;
  g.t0 = parse_double(parts[0], "--grid t0");
  g.T = parse_double(parts[1], "--grid T");
  const double n = parse_double(parts[2], "--grid n_pts");
  if (n < 0 || n != std::floor(n)) throw UsageError("--grid n_pts must be a non-negative integer");
  g.n_pts = static_cast<std::size_t>(n);
  return g;
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--params expects name=value pairs, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (key.empty()) throw UsageError("--params has an empty name");
    out[key] = parse_double(item.substr(eq + 1), "--params " + key);
  }
  return out;
}

// --- --config merging -------------------------------------------------------

std::string json_to_arg(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_object() && key == "params") {
    std::string s;
    for (const auto& [k, x] : v.items()) {
      if (!x.is_number()) throw UsageError("config: params." + k + " must be a number");
      if (!s.empty()) s += ",";
      s += k + "=" + format_number(x.get<double>());
    }
    return s;
  }
  if (v.is_object() && key == "grid") {
    if (!v.contains("t0") || !v.contains("T") || !v.contains("n_pts")) {
      throw UsageError("config: grid object needs t0, T and n_pts");
    }
    return json_to_arg(v["t0"], "t0") + ":" + json_to_arg(v["T"], "T") + ":" + json_to_arg(v["n_pts"], "n_pts");
  }
  throw UsageError("config: unsupported value for '" + key + "'");
}

bool flag_present(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

  const bool has_command = !args.empty() && kCommands.count(args.front()) > 0;
  if (!has_command) {
    if (!cfg.contains("command") || !cfg["command"].is_string()) {
      throw UsageError("no subcommand given on the command line or in the config file");
    }
    args.insert(args.begin(), cfg["command"].get<std::string>());
    if (args.front() == "models" && (args.size() == 1 || args[1].rfind("--", 0) == 0)) {
      args.insert(args.begin() + 1, "list");
    }
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "command") continue;
    const std::string flag = "--" + key;
    if (flag_present(args, flag)) continue;
    if (value.is_boolean()) {
      // no boolean flags at present; accept explicit true/false strings
      args.push_back(flag);
      args.push_back(value.get<bool>() ? "true" : "false");
      continue;
    }
    args.push_back(flag);
    args.push_back(json_to_arg(value, key));
  }
  return args;
}

// --- test functions and forcings --------------------------------------------

std::function<double(double)> test_function(const RunConfig& c) {
  if (c.fn == "pow") {
    const double g = c.gamma;
    return [g](double t) { return g == 0.0 ? 1.0 : std::pow(t, g); };
  }
  if (c.fn == "const") {
    const double v = c.c;
    return [v](double) { return v; };
  }
  if (c.fn == "sin") return [](double t) { return std::sin(t); };
  if (c.fn == "exp") return [](double t) { return std::exp(t); };
  if (c.fn == "bump") {
    const double m = c.center, w = c.width;
    return [m, w](double t) {
      const double r = (t - m) / w;
      return std::abs(r) < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0;
    };
  }
  throw UsageError("unknown --fn '" + c.fn + "' (pow, const, sin, exp, bump)");
}

// D^mu t^p = Gamma(1+p)/Gamma(1+p-mu) t^(p-mu); zero when 1+p-mu is a pole.
double power_rule(double p, double mu, double t) {
  const double arg = 1.0 + p - mu;
  if (arg <= 0.0 && arg == std::floor(arg)) return 0.0;
  if (t == 0.0) return p - mu > 0.0 ? 0.0 : (p - mu == 0.0 ? gamma(1.0 + p) : HUGE_VAL);
  return gamma(1.0 + p) / gamma(arg) * std::pow(t, p - mu);
}

std::function<double(double)> manufactured_forcing(const MultiTermFDE& fde, double p) {
  const auto terms = fde.terms;
  const double c0 = fde.zero_order_coeff;
  return [terms, c0, p](double t) {
    double s = c0 * std::pow(t, p);
    for (const auto& term : terms) s += term.coefficient * power_rule(p, term.order.mu(), t);
    return s;
  };
}

struct ForcingSpec {
  std::string kind;  // zero, const, pow, sin, exp, manufactured
  double value = 0.0;
};

ForcingSpec parse_forcing(const std::string& text) {
  const auto colon = text.find(':');
  ForcingSpec f;
  f.kind = text.substr(0, colon);
  const bool has_value = colon != std::string::npos;
  if (f.kind == "zero" || f.kind == "sin" || f.kind == "exp") {
    if (has_value) throw UsageError("--forcing " + f.kind + " takes no value");
    return f;
  }
  if (f.kind == "const" || f.kind == "pow" || f.kind == "manufactured") {
    if (!has_value) throw UsageError("--forcing " + f.kind + " needs a value, e.g. " + f.kind + ":2");
    f.value = parse_double(text.substr(colon + 1), "--forcing");
    return f;
  }
  throw UsageError("unknown --forcing '" + text + "' (zero, const:c, pow:g, sin, exp, manufactured:p)");
}

std::function<double(double)> simple_forcing(const ForcingSpec& f) {
  const double v = f.value;
  if (f.kind == "zero") return [](double) { return 0.0; };
  if (f.kind == "const") return [v](double) { return v; };
  if (f.kind == "pow") return [v](double t) { return v == 0.0 ? 1.0 : std::pow(t, v); };
  if (f.kind == "sin") return [](double t) { return std::sin(t); };
  if (f.kind == "exp") return [](double t) { return std::exp(t); };
  return {};
}

std::optional<Potential> parse_potential(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (text.substr(0, colon) != "quadratic" || colon == std::string::npos) {
    throw UsageError("unknown --potential '" + text + "' (quadratic:b)");
  }
  return quadratic_potential(parse_double(text.substr(colon + 1), "--potential"));
}

// --- input -----------------------------------------------------------------

SampledPath read_path_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw UsageError("'" + path + "' is empty");
  const auto header = split(trim(line), ',');
  if (header.size() < 2) throw UsageError("'" + path + "' needs at least two columns (t and a value)");
  std::size_t col = 1;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const std::string h = trim(header[i]);
    if (h == "x" || h == "value") {
      col = i;
      break;
    }
  }
  std::vector<double> ts, xs;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw UsageError("'" + path + "': ragged row '" + line + "'");
    ts.push_back(parse_double(cells[0], "t"));
    xs.push_back(parse_double(cells[col], header[col]));
  }
  if (ts.size() < 2) throw UsageError("'" + path + "' has fewer than two rows");
  const double h = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  if (!(h > 0.0)) throw UsageError("'" + path + "': t must be increasing");
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const double expect = ts.front() + static_cast<double>(j) * h;
    if (std::abs(ts[j] - expect) > 1e-9 * std::max(1.0, std::abs(expect))) {
      throw UsageError("'" + path + "': t is not uniformly spaced");
    }
  }
  return SampledPath(ts.front(), h, std::move(xs));
}

SampledPath input_path(const RunConfig& c) {
  if (!c.from_file.empty()) return read_path_csv(c.from_file);
  return SampledPath::sample(c.grid.t0, c.grid.T, c.grid.n_pts, test_function(c));
}

// --- output ----------------------------------------------------------------

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

void write_json(const Table& t, const std::string& command, std::ostream& os) {
  ordered_json doc;
  doc["command"] = command;
  ordered_json meta = t.meta;
  meta["version"] = kVersion;
  doc["metadata"] = meta;
  doc["columns"] = t.columns;
  ordered_json data = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::array();
    for (double v : row) r.push_back(number_or_null(v));
    data.push_back(std::move(r));
  }
  doc["data"] = std::move(data);
  os << doc.dump(2) << '\n';
}

void emit(const RunConfig& c, const Table& t, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (c.format == Format::csv) {
      write_csv(t, os);
    } else {
      write_json(t, command_name(c.command), os);
    }
  };
  if (c.output.empty() || c.output == "-") {
    write(out);
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  write(f);
}

double grid_h(const Grid& g) { return (g.T - g.t0) / static_cast<double>(g.n_pts - 1); }

// --- commands ----------------------------------------------------------------

Table run_deriv(const RunConfig& c) {
  const SampledPath x = input_path(c);
  const FracOrder order(*c.alpha);
  const SampledPath d = frac_deriv(x, order, c.side);
  Table t;
  t.columns = {"t", "value"};
  for (std::size_t j = 0; j < d.size(); ++j) t.rows.push_back({d.t(j), d[j]});
  t.meta["alpha"] = order.mu();
  t.meta["h"] = x.h();
  t.meta["scheme"] = "grunwald-letnikov";
  t.meta["side"] = c.side == Side::left ? "left" : "right";
  return t;
}

Table run_mlf(const RunConfig& c) {
  MLParams p;
  p.alpha = *c.alpha;
  p.tol = c.tol;
  const double v = mittag_leffler(p, c.z);
  Table t;
  t.columns = {"z", "value"};
  t.rows.push_back({c.z, v});
  t.meta["alpha"] = p.alpha;
  t.meta["h"] = nullptr;
  t.meta["scheme"] = "power-series";
  t.meta["tol"] = p.tol;
  return t;
}

Table run_lift(const RunConfig& c) {
  const SampledPath x = input_path(c);
  const JetTrajectory traj = lift(x, *c.alpha, c.k);
  Table t;
  t.columns = {"t", "x"};
  for (int a = 1; a <= c.k; ++a) t.columns.push_back("y" + std::to_string(a));
  for (std::size_t j = 0; j < traj.size(); ++j) {
    std::vector<double> row = {traj.t(j), x[j]};
    for (int a = 1; a <= c.k; ++a) row.push_back(traj.jet(a, 0)[j]);
    t.rows.push_back(std::move(row));
  }
  t.meta["alpha"] = *c.alpha;
  t.meta["h"] = x.h();
  t.meta["scheme"] = "grunwald-letnikov";
  t.meta["k"] = c.k;
  return t;
}

Lagrangian build_lagrangian(const RunConfig& c) {
  if (c.lagrangian.empty()) throw UsageError("--lagrangian is required");
  const auto names = lagrangian_names();
  if (std::find(names.begin(), names.end(), c.lagrangian) == names.end()) {
    throw UsageError("unknown --lagrangian '" + c.lagrangian + "'");
  }
  LagrangianSpec spec;
  spec.coeffs = c.params;
  spec.alpha = c.alpha;
  spec.set = c.coeffs;
  spec.potential = parse_potential(c.potential);
  if (!c.forcing.empty()) {
    const ForcingSpec f = parse_forcing(c.forcing);
    if (f.kind == "manufactured") {
      if (c.lagrangian != "bagley-torvik") {
        throw UsageError("--forcing manufactured:p is available for bagley-torvik only");
      }
      ModelParams mp;
      mp.values = c.params;
      const auto inst = instantiate_model("bagley-torvik", mp, c.alpha);
      spec.forcing = manufactured_forcing(std::get<MultiTermFDE>(inst), f.value);
    } else {
      spec.forcing = simple_forcing(f);
    }
  }
  return make_lagrangian(c.lagrangian, spec);
}

Table run_action(const RunConfig& c) {
  const Lagrangian L = build_lagrangian(c);
  const SampledPath x = input_path(c);
  const JetTrajectory traj = lift(x, L.alpha(), L.order());
  Table t;
  t.columns = {"action"};
  t.rows.push_back({action(L, traj)});
  t.meta["alpha"] = L.alpha();
  t.meta["h"] = x.h();
  t.meta["scheme"] = "trapezoid";
  t.meta["lagrangian"] = c.lagrangian;
  return t;
}

Table run_el_check(const RunConfig& c, std::ostream& err) {
  const Lagrangian L = build_lagrangian(c);
  const SampledPath x = input_path(c);
  const JetTrajectory traj = lift(x, L.alpha(), L.order());
  const ELResidualReport rep = el_residual(L, traj, c.variant);
  Table t;
  t.columns = {"t", "value", "residual"};
  for (std::size_t j = rep.first_interior; j <= rep.last_interior && j < x.size(); ++j) {
    t.rows.push_back({x.t(j), x[j], rep.residual.front()[j]});
  }
  t.meta["alpha"] = L.alpha();
  t.meta["h"] = x.h();
  t.meta["scheme"] = "grunwald-letnikov";
  t.meta["lagrangian"] = c.lagrangian;
  t.meta["variant"] = c.variant == Variant::classical ? "classical" : "fractional";
  t.meta["norm_inf"] = number_or_null(rep.norm_inf);
  err << "norm_inf=" << format_number(rep.norm_inf) << '\n';
  return t;
}

Table run_solve(const RunConfig& c) {
  if (c.model.empty()) throw UsageError("--model is required");
  try {
    (void)find_model(c.model);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (c.grid.t0 != 0.0) throw UsageError("solve needs a grid starting at t0 = 0");
  ModelParams mp;
  mp.values = c.params;
  mp.T = c.grid.T;
  std::optional<ForcingSpec> manufactured;
  if (!c.forcing.empty()) {
    const ForcingSpec f = parse_forcing(c.forcing);
    if (f.kind == "manufactured") {
      manufactured = f;
    } else {
      mp.forcing = simple_forcing(f);
    }
  }
  if (auto U = parse_potential(c.potential)) mp.potential_dx = U->dx;
  ModelInstance inst = instantiate_model(c.model, mp, c.alpha);
  const double x0 = c.params.count("x0") ? c.params.at("x0") : 0.0;
  const double v0 = c.params.count("v0") ? c.params.at("v0") : 0.0;
  if (auto* fde = std::get_if<MultiTermFDE>(&inst); fde && (x0 != 0.0 || v0 != 0.0)) {
    if (manufactured) throw UsageError("--forcing manufactured:p needs zero initial data");
    auto pair = as_fode2(*fde, x0, v0);
    if (!pair) throw UsageError("non-zero initial data needs a model with orders {2b, b}");
    inst = *pair;
  }
  const double h = grid_h(c.grid);

  Table t;
  t.columns = {"t", "x"};
  t.meta["alpha"] = c.alpha ? ordered_json(*c.alpha) : ordered_json(find_model(c.model).classical_alpha);
  t.meta["h"] = h;
  t.meta["model"] = c.model;

  SolveReport rep = std::visit(
      [&](auto& m) -> SolveReport {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, MultiTermFDE>) {
          if (manufactured) m.forcing = manufactured_forcing(m, manufactured->value);
          t.meta["scheme"] = "implicit-grunwald-letnikov";
          return solve_multiterm(m, h);
        } else {
          if (manufactured) throw UsageError("--forcing manufactured:p needs a linear model");
          t.meta["scheme"] = "explicit-grunwald-letnikov";
          return solve_fode2(m, h);
        }
      },
      inst);
  if (rep.velocity) t.columns.push_back("v");
  for (std::size_t j = 0; j < rep.solution.size(); ++j) {
    std::vector<double> row = {rep.solution.t(j), rep.solution[j]};
    if (rep.velocity) row.push_back((*rep.velocity)[j]);
    t.rows.push_back(std::move(row));
  }
  t.meta["max_defect"] = number_or_null(rep.max_defect);
  t.meta["steps"] = rep.steps;
  return t;
}

void run_models(const RunConfig& c, std::ostream& out) {
  const auto& cat = model_catalog();
  if (c.format == Format::json) {
    ordered_json doc;
    doc["command"] = "models";
    ordered_json list = ordered_json::array();
    for (const auto& m : cat) {
      list.push_back({{"name", m.name},
                      {"classical_form", m.classical_form},
                      {"fractional_form", m.fractional_form},
                      {"parameters", m.parameters},
                      {"classical_alpha", m.classical_alpha},
                      {"note", m.note}});
    }
    doc["models"] = std::move(list);
    doc["lagrangians"] = lagrangian_names();
    doc["metadata"] = {{"version", kVersion}};
    std::ostringstream os;
    os << doc.dump(2) << '\n';
    if (c.output.empty() || c.output == "-") {
      out << os.str();
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + c.output + "'");
      f << os.str();
    }
    return;
  }
  std::ostringstream os;
  for (const auto& m : cat) {
    os << m.name << '\n';
    os << "  classical:  " << m.classical_form << '\n';
    os << "  fractional: " << m.fractional_form << '\n';
    os << "  parameters:";
    for (const auto& p : m.parameters) os << ' ' << p;
    os << '\n';
    os << "  classical alpha: " << format_number(m.classical_alpha) << '\n';
    if (!m.note.empty()) os << "  note: " << m.note << '\n';
  }
  os << "lagrangians:";
  for (const auto& n : lagrangian_names()) os << ' ' << n;
  os << '\n';
  if (c.output.empty() || c.output == "-") {
    out << os.str();
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.output + "'");
    f << os.str();
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // guard against a non-C numeric locale
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

void RunConfig::validate() const {
  const bool uses_grid = command == Command::deriv || command == Command::lift || command == Command::solve ||
                         ((command == Command::action || command == Command::el_check) && from_file.empty());
  if (uses_grid && from_file.empty()) {
    if (!(grid.T > grid.t0)) throw UsageError("grid needs T > t0");
    if (grid.n_pts < 9) throw UsageError("grid needs at least 9 points");
    if (!std::isfinite(grid.t0) || !std::isfinite(grid.T)) throw UsageError("grid bounds must be finite");
  }
  if (command == Command::deriv || command == Command::lift) {
    if (!alpha) throw UsageError("--alpha is required");
  }
  if (command == Command::mlf && !alpha) throw UsageError("--alpha is required");
  if (alpha && !std::isfinite(*alpha)) throw UsageError("--alpha must be finite");
  switch (command) {
    case Command::deriv:
      if (!(*alpha > 0.0)) throw UsageError("--alpha must be positive");
      break;
    case Command::mlf:
      if (!(*alpha > 0.0)) throw UsageError("--alpha must be positive");
      if (!(tol > 0.0)) throw UsageError("--tol must be positive");
      break;
    case Command::lift:
      if (!(*alpha > 0.0 && *alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1) for lift");
      if (k < 1) throw UsageError("--k must be at least 1");
      break;
    case Command::action:
    case Command::el_check:
    case Command::solve:
      if (alpha && !(*alpha > 0.0 && *alpha <= 1.0)) throw UsageError("--alpha must lie in (0, 1]");
      break;
    case Command::models:
      break;
  }
  if (fn == "bump" && !(width > 0.0)) throw UsageError("--width must be positive");
}

RunConfig parse_args(const std::vector<std::string>& raw) {
  std::vector<std::string> args = merge_config(raw);

  CLI::App app{"Fractional jet calculus toolkit", "fracjet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig c;
  std::string grid_text, params_text, side = "left", coeffs = "normalized", variant = "classical",
                                      format = "csv";
  double alpha = 0.0;

  auto* deriv = app.add_subcommand("deriv", "fractional derivative of a sampled function");
  auto* mlf = app.add_subcommand("mlf", "Mittag-Leffler function E_alpha(z)");
  auto* liftc = app.add_subcommand("lift", "fractional jet lift of a sampled path");
  auto* act = app.add_subcommand("action", "discrete action of a catalog Lagrangian");
  auto* elc = app.add_subcommand("el-check", "Euler-Lagrange residual along a path");
  auto* solve = app.add_subcommand("solve", "solve a catalog model");
  auto* models = app.add_subcommand("models", "model catalog");
  models->add_subcommand("list", "print the catalog")->fallthrough();
  models->require_subcommand(1);

  const auto add_common = [&](CLI::App* s) {
    s->add_option("--alpha", alpha, "fractional order");
    s->add_option("--output,-o", c.output, "output file (default: standard output)");
    s->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_grid = [&](CLI::App* s) {
    s->add_option("--grid", grid_text, "t0:T:n_pts");
  };
  const auto add_fn = [&](CLI::App* s) {
    s->add_option("--fn", c.fn, "pow, const, sin, exp or bump");
    s->add_option("--gamma", c.gamma, "exponent for pow");
    s->add_option("--c", c.c, "value for const");
    s->add_option("--center", c.center, "bump centre");
    s->add_option("--width", c.width, "bump half-width");
    s->add_option("--from-file", c.from_file, "CSV with columns t and x (or value)");
  };
  const auto add_lagrangian = [&](CLI::App* s) {
    s->add_option("--lagrangian", c.lagrangian, "catalog Lagrangian");
    s->add_option("--params", params_text, "coefficients, e.g. a=1,b=1");
    s->add_option("--coeffs", coeffs, "paper or normalized")->check(CLI::IsMember({"paper", "normalized"}));
    s->add_option("--forcing", c.forcing, "zero, const:c, pow:g, sin, exp or manufactured:p");
    s->add_option("--potential", c.potential, "quadratic:b");
  };

  for (auto* s : {deriv, mlf, liftc, act, elc, solve, models}) add_common(s);
  for (auto* s : {deriv, liftc, act, elc, solve}) add_grid(s);
  for (auto* s : {deriv, liftc, act, elc}) add_fn(s);
  add_lagrangian(act);
  add_lagrangian(elc);
  deriv->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  mlf->add_option("--z", c.z, "argument");
  mlf->add_option("--tol", c.tol, "relative truncation tolerance");
  liftc->add_option("--k", c.k, "jet order");
  elc->add_option("--variant", variant, "classical or fractional")
      ->check(CLI::IsMember({"classical", "fractional"}));
  solve->add_option("--model", c.model, "catalog model");
  solve->add_option("--params", params_text, "coefficients, e.g. a1=0.5,b1=4,x0=1");
  solve->add_option("--forcing", c.forcing, "zero, const:c, pow:g, sin, exp or manufactured:p");
  solve->add_option("--potential", c.potential, "quadratic:b (friction)");
  solve->add_option("--x0", c.params["x0"], "initial position (friction)");
  solve->add_option("--v0", c.params["v0"], "initial fractional velocity (friction)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested(std::string(kVersion) + "\n");
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* s : app.get_subcommands()) c.command = kCommands.at(s->get_name());
  const CLI::App* sub = app.get_subcommands().front();
  const auto given = [sub](const std::string& name) {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--alpha")) c.alpha = alpha;
  if (given("--grid")) c.grid = parse_grid(grid_text);
  c.params.erase("x0");
  c.params.erase("v0");
  if (given("--x0")) c.params["x0"] = sub->get_option("--x0")->as<double>();
  if (given("--v0")) c.params["v0"] = sub->get_option("--v0")->as<double>();
  for (const auto& [k, v] : parse_params(params_text)) {
    if (!c.params.count(k)) c.params[k] = v;
  }
  c.side = side == "right" ? Side::right : Side::left;
  c.coeffs = coeffs == "paper" ? CoefficientSet::paper : CoefficientSet::normalized;
  c.variant = variant == "fractional" ? Variant::fractional : Variant::classical;
  c.format = format == "json" ? Format::json : Format::csv;
  c.validate();
  return c;
}

void execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  c.validate();
  switch (c.command) {
    case Command::deriv:
      return emit(c, run_deriv(c), out);
    case Command::mlf:
      return emit(c, run_mlf(c), out);
    case Command::lift:
      return emit(c, run_lift(c), out);
    case Command::action:
      return emit(c, run_action(c), out);
    case Command::el_check:
      return emit(c, run_el_check(c, err), out);
    case Command::solve:
      return emit(c, run_solve(c), out);
    case Command::models:
      return run_models(c, out);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "fracjet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fracjet: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    execute(config, out, err);
  } catch (const UsageError& e) {
    err << "fracjet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "fracjet: error: " << msg << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace fracjet::cli
