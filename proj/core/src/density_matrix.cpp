#include "fermiwedge/density_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermiwedge {

PartitionSpec PartitionSpec::from_ordering(const ModeOrdering& ordering) {
  PartitionSpec part;
  part.kept_alice_position = -1;
  for (int pos = 0; pos < ordering.size(); ++pos) {
    switch (ordering.mode_at(pos).region) {
      case Region::alice:
        part.kept_alice_position = pos;
        break;
      case Region::wedge_I:
        part.kept_positions.push_back(pos);
        break;
      case Region::wedge_II:
        part.traced_positions.push_back(pos);
        break;
    }
  }
  if (part.kept_alice_position < 0) {
    throw std::domain_error("PartitionSpec: ordering has no Alice mode");
  }
  return part;
}

void PartitionSpec::validate(int mode_count) const {
  std::vector<int> all;
  all.push_back(kept_alice_position);
  all.insert(all.end(), kept_positions.begin(), kept_positions.end());
  all.insert(all.end(), traced_positions.begin(), traced_positions.end());
  if (static_cast<int>(all.size()) != mode_count) {
    throw std::domain_error("PartitionSpec: positions do not cover the ordering");
  }
  std::sort(all.begin(), all.end());
  for (int i = 0; i < mode_count; ++i) {
    if (all[static_cast<std::size_t>(i)] != i) {
      throw std::domain_error("PartitionSpec: positions must cover every index exactly once");
    }
  }
  if (!std::is_sorted(kept_positions.begin(), kept_positions.end()) ||
      !std::is_sorted(traced_positions.begin(), traced_positions.end())) {
    throw std::domain_error("PartitionSpec: position lists must be ascending");
  }
}

DensityMatrix::DensityMatrix(std::vector<OccupationKey> labels, Eigen::MatrixXcd matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::domain_error("DensityMatrix: labels must be sorted and distinct");
  }
  if (matrix_.rows() != dim() || matrix_.cols() != dim()) {
    throw std::domain_error("DensityMatrix: matrix dimension mismatch");
  }
}

int DensityMatrix::index_of(OccupationKey label, int alice_bit) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw std::domain_error("DensityMatrix: label not in support");
  }
  return alice_bit * label_count() + static_cast<int>(it - labels_.begin());
}

double DensityMatrix::trace_real() const { return matrix_.trace().real(); }

void DensityMatrix::validate() const {
  if (std::abs(matrix_.trace() - std::complex<double>{1.0, 0.0}) > 1e-12) {
    throw std::domain_error("DensityMatrix: trace differs from 1");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("DensityMatrix: not Hermitian");
  }
}

namespace {

struct ReducedEntry {
  int alice_bit;
  OccupationKey kept_label;
  OccupationKey traced_pattern;
  Amplitude amp;
};

OccupationKey extract_bits(OccupationKey key, const std::vector<int>& positions) {
  OccupationKey out = 0;
  for (std::size_t b = 0; b < positions.size(); ++b) {
    if ((key >> positions[b]) & 1u) out |= OccupationKey{1} << b;
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const SparseState& psi, const PartitionSpec& partition) {
  partition.validate(psi.mode_count());

  std::vector<ReducedEntry> entries;
  entries.reserve(psi.terms().size());
  std::vector<OccupationKey> labels;
  for (const Term& t : psi.terms()) {
    ReducedEntry e;
    e.alice_bit = static_cast<int>((t.key >> partition.kept_alice_position) & 1u);
    e.kept_label = extract_bits(t.key, partition.kept_positions);
    e.traced_pattern = extract_bits(t.key, partition.traced_positions);
    e.amp = t.amp;
    entries.push_back(e);
    labels.push_back(e.kept_label);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) labels.push_back(0);  // zero state safety: 2×2 zero block

  const int L = static_cast<int>(labels.size());
  auto label_index = [&labels](OccupationKey label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                            labels.begin());
  };

  // Group by traced pattern, then take the outer product within each group.
  std::sort(entries.begin(), entries.end(), [](const ReducedEntry& a, const ReducedEntry& b) {
    return a.traced_pattern < b.traced_pattern;
  });
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2 * L, 2 * L);
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].traced_pattern == entries[lo].traced_pattern) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      const int row = entries[i].alice_bit * L + label_index(entries[i].kept_label);
      for (std::size_t j = lo; j < hi; ++j) {
        const int col = entries[j].alice_bit * L + label_index(entries[j].kept_label);
        rho(row, col) += entries[i].amp * std::conj(entries[j].amp);
      }
    }
    lo = hi;
  }
  return DensityMatrix(std::move(labels), std::move(rho));
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho) {
  const int L = rho.label_count();
  Eigen::MatrixXcd out = rho.matrix();
  // Swap the two off-diagonal Alice blocks; diagonal blocks are unchanged.
  out.block(0, L, L, L) = rho.matrix().block(L, 0, L, L);
  out.block(L, 0, L, L) = rho.matrix().block(0, L, L, L);
  return out;
}

}  // namespace fermiwedge
