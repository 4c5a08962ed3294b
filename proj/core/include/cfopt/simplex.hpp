#pragma once

#include "cfopt/point.hpp"

namespace cfopt {

/// Euclidean projection onto the probability simplex {v >= 0, sum v = 1}
/// computed by the sort-and-threshold method.
Point project_simplex(const Point& w);

}  // namespace cfopt
