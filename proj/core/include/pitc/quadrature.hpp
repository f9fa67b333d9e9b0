#pragma once

#include <Eigen/Dense>

#include <vector>

namespace pitc {

/// Collocation node families on the unit interval. Both contain the right
/// endpoint, which keeps the step-coupling matrix trivial (see compute_h).
enum class NodeFamilyKind {
  GaussRadauRight,
  GaussLobatto,
};

struct NodeFamily {
  NodeFamilyKind kind = NodeFamilyKind::GaussRadauRight;
  int count = 3;  ///< number of collocation nodes M
};

/// Triangular approximations of Q used as sweep preconditioners.
enum class QDeltaKind {
  ImplicitEuler,  ///< right-rectangle rule, lower triangular
  ExplicitEuler,  ///< left-rectangle rule without the left endpoint, strictly lower triangular
  LU,             ///< U^T from the pivot-free Doolittle factorization Q^T = LU
};

/// Nodes tau_1..tau_M on (0,1], the node-to-node quadrature weights
/// q(m,j) = int_0^{tau_m} l_j(s) ds, and the step-coupling matrix h that maps
/// the node values of one step to the initial value of the next.
struct CollocationRule {
  NodeFamily family;
  std::vector<double> nodes;
  Eigen::MatrixXd q;
  Eigen::MatrixXd h;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
};

/// Collocation nodes for the family, strictly increasing with tau_M = 1.
/// Interior nodes solve the associated Jacobi-polynomial root conditions to
/// better than 1e-13. Throws std::invalid_argument for unsupported counts
/// (M < 1, or Lobatto with M < 2).
std::vector<double> compute_nodes(const NodeFamily& family);

/// Quadrature matrix with rows integrating the Lagrange basis from 0 to each
/// node. Uses exact polynomial integration of the expanded basis; fine for
/// the small M used here. Throws on duplicate nodes.
Eigen::MatrixXd compute_q(const std::vector<double>& nodes);

/// Triangular preconditioning matrix for the given rule. LU requires q and
/// throws std::runtime_error when a leading minor of q^T vanishes (no
/// pivoting by design; Gauss-Lobatto rules hit this since their first row of
/// q is zero).
Eigen::MatrixXd compute_qdelta(QDeltaKind kind, const std::vector<double>& nodes,
                               const Eigen::MatrixXd& q = Eigen::MatrixXd());

/// Step-coupling matrix: ones in the last column, zeros elsewhere. Requires
/// tau_M = 1; other node sets would need extrapolation weights and are
/// rejected.
Eigen::MatrixXd compute_h(const std::vector<double>& nodes);

/// Convenience: nodes + q + h for the family.
CollocationRule make_collocation(const NodeFamily& family);

}  // namespace pitc
