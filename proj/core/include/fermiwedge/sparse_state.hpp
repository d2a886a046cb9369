#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fermiwedge/mode.hpp"

namespace fermiwedge {

// Occupation pattern of a ModeOrdering: bit k = occupation of position k.
// 32 bits comfortably cover the largest case in scope (17 modes).
using OccupationKey = std::uint32_t;
using Amplitude = std::complex<double>;

struct Term {
  OccupationKey key = 0;
  Amplitude amp;
};

// Stored amplitudes below this modulus are dropped. All state families in
// scope have coefficients that are products of cos r / sin r on r ∈ [0, π/4],
// so genuine amplitudes never fall anywhere near this threshold.
inline constexpr double kPruneThreshold = 1e-15;

// A superposition of occupation basis states over a fixed ModeOrdering,
// stored sparsely as key-sorted terms. Immutable after construction; all
// operations produce new states. A state with no terms is the legal zero
// state (e.g. the result of annihilating the vacuum).
class SparseState {
 public:
  SparseState() = default;
  explicit SparseState(ModeOrdering ordering) : ordering_(std::move(ordering)) {}
  // Merges duplicate keys, prunes tiny amplitudes, sorts by key.
  SparseState(ModeOrdering ordering, std::vector<Term> terms);

  static SparseState basis_state(ModeOrdering ordering, OccupationKey key,
                                 Amplitude amp = Amplitude{1.0, 0.0});

  const ModeOrdering& ordering() const { return ordering_; }
  int mode_count() const { return ordering_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Amplitude amplitude(OccupationKey key) const;
  double norm() const;
  double norm_squared() const;

  // Throws std::domain_error on the zero state.
  SparseState normalized() const;
  SparseState scaled(Amplitude factor) const;

  // Sum of two states over the same ordering (throws on mismatch).
  friend SparseState operator+(const SparseState& a, const SparseState& b);

 private:
  ModeOrdering ordering_;
  std::vector<Term> terms_;
};

}  // namespace fermiwedge
