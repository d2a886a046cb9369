#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fermiwedge/mode.hpp"
#include "fermiwedge/sparse_state.hpp"

namespace fermiwedge {

// How a state's positions split for reduction: one Alice position is kept,
// the kept positions (region I) index the reduced labels, and the traced
// positions (region II) are summed over. Together they must cover every
// position exactly once.
struct PartitionSpec {
  int kept_alice_position = 0;
  std::vector<int> kept_positions;    // ascending; label bit b = kept_positions[b]
  std::vector<int> traced_positions;  // ascending

  // Alice at her position, wedge-I modes kept, wedge-II modes traced.
  static PartitionSpec from_ordering(const ModeOrdering& ordering);

  void validate(int mode_count) const;  // throws std::domain_error
};

// Hermitian operator on the (Alice qubit) ⊗ (kept modes) subsystem, stored
// on the support of the reduced state: `labels` lists the kept occupation
// patterns that actually occur, and the matrix index layout is
// row = alice_bit * labels.size() + label_index. Conceptually the operator
// lives on the full 2 · 2^{|kept|} space; absent labels are zero blocks.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<OccupationKey> labels, Eigen::MatrixXcd matrix);

  const std::vector<OccupationKey>& labels() const { return labels_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  int dim() const { return 2 * label_count(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  int index_of(OccupationKey label, int alice_bit) const;  // throws if absent

  double trace_real() const;
  // Trace 1 and Hermitian within 1e-12; throws std::domain_error otherwise.
  void validate() const;

 private:
  std::vector<OccupationKey> labels_;  // sorted ascending
  Eigen::MatrixXcd matrix_;
};

// ρ_{(a,i),(b,j)} = Σ_k ψ(a,i,k) ψ*(b,j,k), digits read in psi's own basis;
// the ordering convention of the traced modes therefore matters.
DensityMatrix partial_trace(const SparseState& psi, const PartitionSpec& partition);

// Transpose on the Alice index only: (a,i),(b,j) ↦ (b,i),(a,j).
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho);

}  // namespace fermiwedge
