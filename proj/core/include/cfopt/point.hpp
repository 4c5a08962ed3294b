#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace cfopt {

/// Element of the ambient Euclidean space. For matrix-valued problems this is
/// the row-major vectorization of the matrix.
using Point = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool is_finite(const Point& x) { return x.allFinite(); }

inline void require_finite(const Point& x, const char* what) {
  if (!x.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

inline void require_dim(const Point& x, Index n, const char* what) {
  if (x.size() != n) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (got " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(n) + ")");
  }
}

}  // namespace cfopt
