#include "fermiwedge/fock_ops.hpp"

#include <stdexcept>

namespace fermiwedge {

SparseState apply_creation_at(int position, const SparseState& psi) {
  if (position < 0 || position >= psi.mode_count()) {
    throw std::domain_error("apply_creation_at: position out of range");
  }
  const OccupationKey bit = OccupationKey{1} << position;
  std::vector<Term> out;
  out.reserve(psi.terms().size());
  for (const Term& t : psi.terms()) {
    if (t.key & bit) continue;  // Pauli exclusion
    const double sign = parity_sign(t.key, position);
    out.push_back(Term{t.key | bit, t.amp * sign});
  }
  return SparseState(psi.ordering(), std::move(out));
}

SparseState apply_annihilation_at(int position, const SparseState& psi) {
  if (position < 0 || position >= psi.mode_count()) {
    throw std::domain_error("apply_annihilation_at: position out of range");
  }
  const OccupationKey bit = OccupationKey{1} << position;
  std::vector<Term> out;
  out.reserve(psi.terms().size());
  for (const Term& t : psi.terms()) {
    if (!(t.key & bit)) continue;
    const double sign = parity_sign(t.key, position);
    out.push_back(Term{t.key & ~bit, t.amp * sign});
  }
  return SparseState(psi.ordering(), std::move(out));
}

SparseState apply_creation(const ModeId& mode, const SparseState& psi) {
  return apply_creation_at(psi.ordering().position_of(mode), psi);
}

SparseState apply_annihilation(const ModeId& mode, const SparseState& psi) {
  return apply_annihilation_at(psi.ordering().position_of(mode), psi);
}

Amplitude inner_product(const SparseState& phi, const SparseState& psi) {
  if (phi.ordering() != psi.ordering()) {
    throw std::domain_error("inner_product: orderings differ (reorder_basis first)");
  }
  // Both term lists are key-sorted: merge walk.
  Amplitude acc{0.0, 0.0};
  auto a = phi.terms().begin();
  auto b = psi.terms().begin();
  while (a != phi.terms().end() && b != psi.terms().end()) {
    if (a->key < b->key) {
      ++a;
    } else if (b->key < a->key) {
      ++b;
    } else {
      acc += std::conj(a->amp) * b->amp;
      ++a;
      ++b;
    }
  }
  return acc;
}

SparseState reorder_basis(const SparseState& psi, const ModeOrdering& target) {
  if (!psi.ordering().same_mode_set(target)) {
    throw std::domain_error("reorder_basis: target is not a permutation of the mode set");
  }
  const int m = psi.mode_count();
  // source_of[i] = position in psi's ordering of the mode at target position i.
  std::vector<int> source_of(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    source_of[static_cast<std::size_t>(i)] = psi.ordering().position_of(target.mode_at(i));
  }

  std::vector<Term> out;
  out.reserve(psi.terms().size());
  std::vector<int> occupied_sources;
  occupied_sources.reserve(static_cast<std::size_t>(m));
  for (const Term& t : psi.terms()) {
    OccupationKey new_key = 0;
    int inversions = 0;
    occupied_sources.clear();
    for (int i = 0; i < m; ++i) {
      const int s = source_of[static_cast<std::size_t>(i)];
      if ((t.key >> s) & 1u) {
        new_key |= OccupationKey{1} << i;
        for (int prev : occupied_sources) {
          if (prev > s) ++inversions;
        }
        occupied_sources.push_back(s);
      }
    }
    const double sign = (inversions & 1) ? -1.0 : 1.0;
    out.push_back(Term{new_key, t.amp * sign});
  }
  return SparseState(target, std::move(out));
}

SparseState tensor_product(const SparseState& left, const SparseState& right) {
  std::vector<ModeId> modes = left.ordering().modes();
  for (const ModeId& m : right.ordering().modes()) {
    if (left.ordering().contains(m)) {
      throw std::domain_error("tensor_product: overlapping mode sets");
    }
    modes.push_back(m);
  }
  ModeOrdering combined(std::move(modes));
  const int shift = left.mode_count();
  std::vector<Term> out;
  out.reserve(left.terms().size() * right.terms().size());
  for (const Term& a : left.terms()) {
    for (const Term& b : right.terms()) {
      out.push_back(Term{a.key | (b.key << shift), a.amp * b.amp});
    }
  }
  return SparseState(std::move(combined), std::move(out));
}

}  // namespace fermiwedge
