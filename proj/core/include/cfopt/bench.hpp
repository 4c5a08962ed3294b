#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cfopt/problems.hpp"
#include "cfopt/run_record.hpp"

namespace cfopt {

struct RhoRule {
  enum class Kind { Absolute, RelativeGrad };
  Kind kind = Kind::RelativeGrad;
  double value = 1e-5;

  /// Absolute: value. RelativeGrad: value * (1 + ||grad f(z0)||).
  double resolve(const CompositeProblem& problem, const Point& z0) const;
};

/// Grid description for one experiment: a problem family crossed with
/// curvature pairs, seeds and solvers, run under shared limits.
struct BenchConfig {
  std::string family = "qsdp";
  Index n = 35;
  Index l = 10;
  HKind h_kind = HKind::Zero;
  std::vector<std::pair<double, double>> curvature_pairs;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> solvers;  // subset of {"apd", "apd_rho2", "pgd"}
  RhoRule rho_rule;
  double M0 = 1.0;
  double theta = 4.0;
  double alpha = 2.0;
  double beta = 2.0;
  bool decay = false;
  double pgd_L0 = 1.0;
  double time_limit_s = 2000.0;
  long long max_total_inner = 1'000'000'000;
  std::string out_csv;

  void validate() const;
};

/// Parses the key = value config format (sections [problem], [solvers],
/// [run], [limits], [output]); throws std::runtime_error with a line number
/// on malformed input.
BenchConfig parse_bench_config(std::istream& is);
BenchConfig load_bench_config(const std::string& path);

struct BenchRow {
  std::string family;
  Index n = 0;
  Index l = 0;
  double m = 0.0;
  double M = 0.0;
  std::uint64_t seed = 0;
  std::string solver;
  RunStatus status = RunStatus::Failed;
  long long prox_evals = 0;
  long long grad_evals = 0;
  long long outer_iters = 0;
  long long inner_iters = 0;
  double wall_time_s = 0.0;
  double final_residual = 0.0;
};

/// Runs every (pair, seed, solver) cell in config order. Per-cell failures
/// become rows with status Failed; the grid never aborts.
std::vector<BenchRow> run_experiment(const BenchConfig& config);

/// Runs one cell; exposed for the solve subcommand.
BenchRow run_cell(const BenchConfig& config, const ProblemSpec& spec,
                  const std::string& solver);

std::string csv_header();
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace cfopt
