#include "fermiwedge/measures.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "fermiwedge/fock_ops.hpp"

namespace fermiwedge {

double negativity(const DensityMatrix& rho) {
  const Eigen::MatrixXcd pt = partial_transpose(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < -kNegativityEigenTolerance) total -= lambda;
  }
  return total;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < -kPsdTolerance) {
      throw numerical_validity_error("von_neumann_entropy: eigenvalue below -1e-10");
    }
    if (lambda > kEntropyEigenFloor) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

std::vector<double> default_classification_grid(int points) {
  if (points < 2) throw std::domain_error("default_classification_grid: need at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (std::numbers::pi / 4.0) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = i * step;
  return grid;
}

NegativityCurve negativity_curve(const JointStateSpec& spec, const FieldSpec& field,
                                 const ModeOrdering& ordering,
                                 const std::vector<double>& grid) {
  if (!ordering.mode_at(0).is_alice()) {
    throw std::domain_error("negativity_curve: ordering must fix Alice leftmost");
  }
  NegativityCurve curve;
  curve.grid = grid;
  curve.values.reserve(grid.size());
  const PartitionSpec partition = PartitionSpec::from_ordering(ordering);
  for (double r_value : grid) {
    const SqueezeParameter r(r_value);
    const SparseState canonical = build_joint_state(spec, field, r);
    const SparseState reordered = reorder_basis(canonical, ordering);
    curve.values.push_back(negativity(partial_trace(reordered, partition)));
  }
  return curve;
}

}  // namespace fermiwedge
