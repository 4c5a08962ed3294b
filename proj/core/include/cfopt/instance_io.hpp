#pragma once

#include <string>

#include "cfopt/problems.hpp"

namespace cfopt {

/// Instance files carry the dims, seed, scale factors and every sampled
/// array, so a run can be replayed bit-identically without re-sampling.
void save_qsdp_instance(const QsdpInstance& inst, const std::string& path);
QsdpInstance load_qsdp_instance(const std::string& path);

void save_quadratic_instance(const QuadraticInstance& inst, const std::string& path);
QuadraticInstance load_quadratic_instance(const std::string& path);

/// Loads either kind of instance file and builds the problem.
CompositeProblem load_problem(const std::string& path);

}  // namespace cfopt
