#pragma once

#include <Eigen/Dense>

#include <vector>

namespace pitc {

/// Barycentric weights w_j = 1 / prod_{i != j} (x_j - x_i).
/// Throws std::invalid_argument on duplicate points.
std::vector<double> barycentric_weights(const std::vector<double>& points);

/// Matrix E with E(i,j) = l_j(targets[i]) for the Lagrange basis over
/// `sources`; applying E to values at the sources evaluates the interpolating
/// polynomial at the targets. Target points that coincide with a source give
/// exact unit rows.
Eigen::MatrixXd lagrange_eval_matrix(const std::vector<double>& sources,
                                     const std::vector<double>& targets);

}  // namespace pitc
