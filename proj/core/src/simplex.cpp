#include "cfopt/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cfopt {

Point project_simplex(const Point& w) {
  if (w.size() == 0) throw std::invalid_argument("project_simplex: empty vector");
  require_finite(w, "project_simplex");

  std::vector<double> u(w.data(), w.data() + w.size());
  std::sort(u.begin(), u.end(), std::greater<double>());

  double running = 0.0;
  double tau = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    running += u[j];
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0) {
      tau = candidate;
    } else {
      break;
    }
  }
  return w.unaryExpr([tau](double wi) { return std::max(wi - tau, 0.0); });
}

}  // namespace cfopt
