#pragma once

#include <string>

namespace cfopt {

enum class RunStatus { Solved, IterLimit, TimeLimit, Failed };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Solved: return "Solved";
    case RunStatus::IterLimit: return "IterLimit";
    case RunStatus::TimeLimit: return "TimeLimit";
    case RunStatus::Failed: return "Failed";
  }
  return "Unknown";
}

/// Per-solve statistics. func_evals counts f-evaluations, grad_evals counts
/// gradient evaluations of f, prox_evals counts every call to the prox of h
/// made by the solver (line-search trials and failed inner calls included).
struct RunRecord {
  long long prox_evals = 0;
  long long grad_evals = 0;
  long long func_evals = 0;
  long long outer_iters = 0;
  long long inner_iters = 0;
  double wall_time_s = 0.0;
  double final_residual = 0.0;
  RunStatus status = RunStatus::Failed;
};

}  // namespace cfopt
