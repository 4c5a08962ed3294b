#include "cfopt/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cfopt/apd.hpp"
#include "cfopt/pgd.hpp"

namespace cfopt {

double RhoRule::resolve(const CompositeProblem& problem, const Point& z0) const {
  if (kind == Kind::Absolute) return value;
  return value * (1.0 + problem.f.grad(z0).norm());
}

void BenchConfig::validate() const {
  if (family != "qsdp" && family != "quadratic") {
    throw std::runtime_error("bench config: unknown family '" + family + "'");
  }
  if (curvature_pairs.empty()) throw std::runtime_error("bench config: no curvature pairs");
  if (seeds.empty()) throw std::runtime_error("bench config: no seeds");
  if (solvers.empty()) throw std::runtime_error("bench config: no solvers");
  for (const auto& s : solvers) {
    if (s != "apd" && s != "apd_rho2" && s != "pgd") {
      throw std::runtime_error("bench config: unknown solver '" + s + "'");
    }
  }
  if (!(rho_rule.value > 0)) throw std::runtime_error("bench config: rho must be positive");
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("bench config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) fail(line, "trailing characters in number '" + v + "'");
    return d;
  } catch (const std::invalid_argument&) {
    fail(line, "expected a number, got '" + v + "'");
  } catch (const std::out_of_range&) {
    fail(line, "number out of range: '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  fail(line, "expected a boolean, got '" + v + "'");
}

}  // namespace

BenchConfig parse_bench_config(std::istream& is) {
  BenchConfig cfg;
  cfg.curvature_pairs.clear();
  cfg.seeds.clear();
  cfg.solvers.clear();

  std::string section;
  std::string raw;
  int line = 0;
  bool saw_format = false;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "problem" && section != "solvers" && section != "run" &&
          section != "limits" && section != "output") {
        fail(line, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for '" + key + "'");

    if (section.empty() && key == "format") {
      if (value != "bench-v1") fail(line, "unsupported format tag '" + value + "'");
      saw_format = true;
    } else if (section == "problem" && key == "family") {
      cfg.family = value;
    } else if (section == "problem" && key == "n") {
      cfg.n = static_cast<Index>(parse_double(value, line));
    } else if (section == "problem" && key == "l") {
      cfg.l = static_cast<Index>(parse_double(value, line));
    } else if (section == "problem" && key == "h") {
      if (value != "zero" && value != "box") fail(line, "h must be 'zero' or 'box'");
      cfg.h_kind = value == "box" ? HKind::Box : HKind::Zero;
    } else if (section == "problem" && key == "pairs") {
      for (const std::string& tok : split_ws(value)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) fail(line, "pair '" + tok + "' is not m:M");
        cfg.curvature_pairs.emplace_back(parse_double(tok.substr(0, colon), line),
                                         parse_double(tok.substr(colon + 1), line));
      }
    } else if (section == "problem" && key == "seeds") {
      for (const std::string& tok : split_ws(value)) {
        cfg.seeds.push_back(static_cast<std::uint64_t>(parse_double(tok, line)));
      }
    } else if (section == "solvers" && key == "list") {
      cfg.solvers = split_ws(value);
    } else if (section == "run" && key == "rho_rule") {
      if (value == "absolute") {
        cfg.rho_rule.kind = RhoRule::Kind::Absolute;
      } else if (value == "relative_grad") {
        cfg.rho_rule.kind = RhoRule::Kind::RelativeGrad;
      } else {
        fail(line, "rho_rule must be 'absolute' or 'relative_grad'");
      }
    } else if (section == "run" && key == "rho_value") {
      cfg.rho_rule.value = parse_double(value, line);
    } else if (section == "run" && key == "M0") {
      cfg.M0 = parse_double(value, line);
    } else if (section == "run" && key == "theta") {
      cfg.theta = parse_double(value, line);
    } else if (section == "run" && key == "alpha") {
      cfg.alpha = parse_double(value, line);
    } else if (section == "run" && key == "beta") {
      cfg.beta = parse_double(value, line);
    } else if (section == "run" && key == "decay") {
      cfg.decay = parse_bool(value, line);
    } else if (section == "run" && key == "pgd_L0") {
      cfg.pgd_L0 = parse_double(value, line);
    } else if (section == "limits" && key == "time_limit_s") {
      cfg.time_limit_s = parse_double(value, line);
    } else if (section == "limits" && key == "max_total_inner") {
      cfg.max_total_inner = static_cast<long long>(parse_double(value, line));
    } else if (section == "output" && key == "csv") {
      cfg.out_csv = value;
    } else {
      fail(line, "unknown key '" + key + "' in section [" + section + "]");
    }
  }
  if (!saw_format) throw std::runtime_error("bench config: missing 'format = bench-v1' line");
  cfg.validate();
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("bench config: cannot open '" + path + "'");
  return parse_bench_config(is);
}

BenchRow run_cell(const BenchConfig& config, const ProblemSpec& spec,
                  const std::string& solver) {
  BenchRow row;
  row.family = spec.family;
  row.n = spec.n;
  row.l = spec.family == "qsdp" ? spec.l : 0;
  row.m = spec.m;
  row.M = spec.M;
  row.seed = spec.seed;
  row.solver = solver;

  const CompositeProblem problem = make_problem(spec);
  const Point z0 = default_initial_point(spec);
  const double rho = config.rho_rule.resolve(problem, z0);

  RunRecord rec;
  if (solver == "pgd") {
    PgdParams params;
    params.L_init = config.pgd_L0;
    params.rho = rho;
    params.max_iters = config.max_total_inner;
    params.time_limit_s = config.time_limit_s;
    rec = pgd_run(problem, z0, params).record;
  } else {
    ApdParams params;
    params.m0 = solver == "apd_rho2" ? rho * rho : rho;
    params.M0 = std::max(config.M0, params.m0);
    params.rho = rho;
    params.theta = config.theta;
    params.alpha = config.alpha;
    params.beta = config.beta;
    params.decay_mode = config.decay;
    params.max_total_inner = config.max_total_inner;
    params.time_limit_s = config.time_limit_s;
    rec = apd_run(problem, z0, params).record;
  }

  row.status = rec.status;
  row.prox_evals = rec.prox_evals;
  row.grad_evals = rec.grad_evals;
  row.outer_iters = rec.outer_iters;
  row.inner_iters = rec.inner_iters;
  row.wall_time_s = rec.wall_time_s;
  row.final_residual = rec.final_residual;
  return row;
}

std::vector<BenchRow> run_experiment(const BenchConfig& config) {
  config.validate();
  std::vector<BenchRow> rows;
  for (const auto& [m, M] : config.curvature_pairs) {
    for (const std::uint64_t seed : config.seeds) {
      for (const std::string& solver : config.solvers) {
        ProblemSpec spec;
        spec.family = config.family;
        spec.n = config.n;
        spec.l = config.l;
        spec.m = m;
        spec.M = M;
        spec.convex = config.family == "quadratic" && m == 0.0;
        spec.h_kind = config.h_kind;
        spec.seed = seed;
        try {
          rows.push_back(run_cell(config, spec, solver));
        } catch (const std::exception&) {
          BenchRow row;
          row.family = spec.family;
          row.n = spec.n;
          row.l = spec.family == "qsdp" ? spec.l : 0;
          row.m = m;
          row.M = M;
          row.seed = seed;
          row.solver = solver;
          row.status = RunStatus::Failed;
          row.final_residual = std::numeric_limits<double>::infinity();
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::string csv_header() {
  return "family,n,l,m,M,seed,solver,status,prox_evals,grad_evals,outer_iters,"
         "inner_iters,wall_time_s,final_residual";
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << csv_header() << '\n';
  for (const BenchRow& r : rows) {
    os << r.family << ',' << r.n << ',' << r.l << ',' << fmt_double(r.m) << ','
       << fmt_double(r.M) << ',' << r.seed << ',' << r.solver << ',' << to_string(r.status)
       << ',' << r.prox_evals << ',' << r.grad_evals << ',' << r.outer_iters << ','
       << r.inner_iters << ',' << fmt_double(r.wall_time_s) << ','
       << fmt_double(r.final_residual) << '\n';
  }
}

}  // namespace cfopt
