#include "pitc/lagrange.hpp"

#include <cmath>
#include <stdexcept>

namespace pitc {

std::vector<double> barycentric_weights(const std::vector<double>& points) {
  const auto n = points.size();
  std::vector<double> w(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double d = points[j] - points[i];
      if (d == 0.0) throw std::invalid_argument("barycentric_weights: duplicate points");
      w[j] /= d;
    }
  }
  return w;
}

Eigen::MatrixXd lagrange_eval_matrix(const std::vector<double>& sources,
                                     const std::vector<double>& targets) {
  const auto w = barycentric_weights(sources);
  const auto ns = static_cast<Eigen::Index>(sources.size());
  const auto nt = static_cast<Eigen::Index>(targets.size());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(nt, ns);
  for (Eigen::Index i = 0; i < nt; ++i) {
    const double x = targets[static_cast<std::size_t>(i)];
    // exact hit: unit row
    Eigen::Index hit = -1;
    for (Eigen::Index j = 0; j < ns; ++j) {
      if (x == sources[static_cast<std::size_t>(j)]) {
        hit = j;
        break;
      }
    }
    if (hit >= 0) {
      mat(i, hit) = 1.0;
      continue;
    }
    double denom = 0.0;
    for (Eigen::Index j = 0; j < ns; ++j) {
      const double c = w[static_cast<std::size_t>(j)] / (x - sources[static_cast<std::size_t>(j)]);
      mat(i, j) = c;
      denom += c;
    }
    mat.row(i) /= denom;
  }
  return mat;
}

}  // namespace pitc
