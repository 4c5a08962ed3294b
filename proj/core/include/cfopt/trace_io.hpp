#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cfopt/apd.hpp"
#include "cfopt/problems.hpp"

namespace cfopt {

/// Line-delimited trace log: a header object on the first line (format tag,
/// solver, rho, theta, z0, phi0, and the generator spec when known), then one
/// object per outer iteration with k, m, M, inner, vnorm, phi and the z/u/v
/// vectors.
struct TraceFile {
  OuterTrace trace;
  std::optional<ProblemSpec> problem;
};

void write_trace(std::ostream& os, const OuterTrace& trace,
                 const std::optional<ProblemSpec>& problem = std::nullopt);
void save_trace(const std::string& path, const OuterTrace& trace,
                const std::optional<ProblemSpec>& problem = std::nullopt);

TraceFile read_trace(std::istream& is);
TraceFile load_trace(const std::string& path);

}  // namespace cfopt
