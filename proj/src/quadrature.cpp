#include "phasediff/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phasediff::quad {

namespace {

// Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix of the
// orthogonal-polynomial recurrence; weights are mu0 * (first eigenvector row)^2.
Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag,
                  double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("golub_welsch: tridiagonal eigendecomposition failed");
  Rule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = mu0 * solver.eigenvectors().row(0).transpose().array().square();
  return rule;
}

}  // namespace

Rule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  return golub_welsch(diag, sub, std::sqrt(std::numbers::pi));
}

Rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  Rule rule = golub_welsch(diag, sub, 2.0);
  // affine map [-1,1] -> [a,b]
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  rule.nodes = (half * rule.nodes.array() + mid).matrix();
  rule.weights *= half;
  return rule;
}

}  // namespace phasediff::quad
