#pragma once

#include <bit>
#include <vector>

#include "fermiwedge/sparse_state.hpp"

namespace fermiwedge {

// Jordan–Wigner parity sign for acting at `position` of `key`: (−1)^(number
// of occupied positions strictly to the left). O(1) via masked popcount.
inline int parity_sign(OccupationKey key, int position) {
  const OccupationKey mask = (OccupationKey{1} << position) - 1;
  return (std::popcount(key & mask) & 1) ? -1 : 1;
}

// Creation/annihilation at a raw ordering position (unnormalized results).
SparseState apply_creation_at(int position, const SparseState& psi);
SparseState apply_annihilation_at(int position, const SparseState& psi);

// Mode-identified variants; throw std::domain_error for unknown modes.
SparseState apply_creation(const ModeId& mode, const SparseState& psi);
SparseState apply_annihilation(const ModeId& mode, const SparseState& psi);

// ⟨phi|psi⟩; requires identical orderings (throws std::domain_error).
Amplitude inner_product(const SparseState& phi, const SparseState& psi);

// Re-expresses `psi` in the basis generated by `target` (a permutation of
// psi's mode set): each occupied subset's amplitude picks up the parity of
// the mode permutation restricted to that subset, and key bits move to the
// modes' new positions. Exact involution with the inverse reordering.
SparseState reorder_basis(const SparseState& psi, const ModeOrdering& target);

// Tensor product over disjoint mode sets; combined ordering is left's modes
// followed by right's, with no interchange signs (right-hand operators
// stand wholly to the right of left-hand ones by construction).
SparseState tensor_product(const SparseState& left, const SparseState& right);

}  // namespace fermiwedge
