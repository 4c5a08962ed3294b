#pragma once

#include "cfopt/oracles.hpp"
#include "cfopt/point.hpp"

namespace cfopt {

/// Euclidean projection onto the spectraplex {Z PSD, tr(Z) = 1}. The input is
/// the row-major vectorization of an n x n matrix; it is symmetrized before
/// the eigendecomposition. Projects the spectrum onto the probability simplex
/// and reassembles.
Point project_spectraplex(const Point& z, Index n);

/// Indicator of the spectraplex with the projection as its (lambda-free)
/// prox. Membership is tested to a fixed relative tolerance.
ProxOracle make_spectraplex_indicator(Index n);

}  // namespace cfopt
