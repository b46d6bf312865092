#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "vacfluct/errors.hpp"
#include "vacfluct/quadrature.hpp"

namespace vacfluct::numeric {

namespace {

// Golub-Welsch for the probabilists' Hermite polynomials He_n: the Jacobi
// matrix has zero diagonal and off-diagonal sqrt(k).  The weight of node i
// is the squared first component of its normalised eigenvector (the total
// mass of N(0,1) is one).
GaussHermiteRule build_rule(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k)
    sub(k - 1) = std::sqrt(static_cast<double>(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw QuadratureError(0.0, 0.0, "Gauss-Hermite eigen decomposition failed");

  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
  }
  // Symmetrise: the exact rule is even, round-off in the solver is not.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1)
    rule.nodes[n / 2] = 0.0;
  return rule;
}

} // namespace

const GaussHermiteRule &gauss_hermite(int n) {
  if (n < 1)
    throw DomainError("hermite_nodes", "must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[n];
  if (!slot)
    slot = std::make_unique<GaussHermiteRule>(build_rule(n));
  return *slot;
}

} // namespace vacfluct::numeric
