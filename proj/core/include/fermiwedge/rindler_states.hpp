#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fermiwedge/field.hpp"
#include "fermiwedge/fock_ops.hpp"
#include "fermiwedge/sparse_state.hpp"

namespace fermiwedge {

// Thrown when a joint-state branch polynomial annihilates the vacuum.
class degenerate_spec_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Squeezed vacuum of one Unruh sector over that sector's 2n modes:
//   right: Σ_α (cos r)^{n−χ(α)} (sin r)^{χ(α)} |α R(α)⟩
//   left:  same with an extra (−1)^{χ(α)}
// where the first n positions carry the chain α (digit p at position p−1)
// and the last n carry its reversal R(α).
SparseState build_sector_vacuum(const FieldSpec& field, const SqueezeParameter& r,
                                UnruhSector sector);

// Full Unruh vacuum: right-sector vacuum ⊗ left-sector vacuum over the
// canonical 4n-mode Rindler ordering.
SparseState build_unruh_vacuum(const FieldSpec& field, const SqueezeParameter& r);

// Sector ladder operators in the Rindler basis (unnormalized results):
//   C†_{σ,R} = cos r c†_{σ,I} − sin r d_{−σ,II}
//   C†_{σ,L} = cos r c†_{σ,II} − sin r d_{−σ,I}
// and their adjoints. `twice_sz` selects σ; psi must be expressed in the
// canonical Rindler ordering (Alice may be present at position 0).
SparseState apply_unruh_sector_creation(const FieldSpec& field, int twice_sz,
                                        UnruhSector sector, const SqueezeParameter& r,
                                        const SparseState& psi);
SparseState apply_unruh_sector_annihilation(const FieldSpec& field, int twice_sz,
                                            UnruhSector sector, const SqueezeParameter& r,
                                            const SparseState& psi);

// Weighted Unruh creator C†_{σ,U} = q_R C†_{σ,R} + q_L C†_{σ,L}.
SparseState apply_unruh_creation(const FieldSpec& field, int twice_sz,
                                 const UnruhWeights& w, const SqueezeParameter& r,
                                 const SparseState& psi);

// One product of Unruh creators times a coefficient. Factors are listed
// leftmost first, i.e. {σ1, σ2} means C†_{σ1,U} C†_{σ2,U} (σ2 acts first).
struct UnruhMonomial {
  std::vector<int> twice_sz_factors;
  Amplitude coefficient{1.0, 0.0};
};

// A polynomial in the Unruh creators: sum of monomials. An empty factor
// list is the identity; an empty monomial list is the zero polynomial.
struct BranchPolynomial {
  std::vector<UnruhMonomial> monomials;

  static BranchPolynomial identity() { return {{UnruhMonomial{{}, {1.0, 0.0}}}}; }
  static BranchPolynomial creator(int twice_sz) {
    return {{UnruhMonomial{{twice_sz}, {1.0, 0.0}}}};
  }
};

// Recipe for the joint Alice–Rob state
//   |Ψ⟩ = P |0⟩_A ⊗ N(A_U |0⟩_U) + Q |1⟩_A ⊗ N(B_U |0⟩_U),
// where N(·) normalizes each branch after application to the vacuum.
struct JointStateSpec {
  Amplitude P;
  Amplitude Q;
  BranchPolynomial branch_A;
  BranchPolynomial branch_B;
  UnruhWeights weights;

  JointStateSpec(Amplitude p, Amplitude q, BranchPolynomial a, BranchPolynomial b,
                 UnruhWeights w);
};

// Applies a branch polynomial to `psi` (no normalization).
SparseState apply_branch(const BranchPolynomial& branch, const FieldSpec& field,
                         const UnruhWeights& w, const SqueezeParameter& r,
                         const SparseState& psi);

// Builds the joint state over the canonical joint ordering (Alice leftmost).
// Throws degenerate_spec_error if a branch annihilates the vacuum.
SparseState build_joint_state(const JointStateSpec& spec, const FieldSpec& field,
                              const SqueezeParameter& r);

// ---- Named state recipes shared by the CLI and the test suites ----

// Grassmann superposition of the vacuum and the one-particle excitation
// with equal weights: P = Q = 1/√2, A = 1, B = C†_U.
JointStateSpec vacuum_excitation_spec(const UnruhWeights& w);

// Spin singlet and its higher-spin analogue: equal-weight superposition with
// A = Σ_{σ>0} C†_{σ,U} and B = Σ_{σ<0} C†_{σ,U} (branches normalize to
// single-creator weights 1/√(n/2) each). For spin 1/2 this is b₁ = c₂ = 1.
JointStateSpec singlet_analogue_spec(const FieldSpec& field, const UnruhWeights& w);

// Generic Dirac states with pseudo-random complex branch coefficients drawn
// from a fixed seed (recorded in survey reports): all eight coefficients for
// the fully generic state, pair coefficients forced to zero for the no-pair
// state. The seed controls only these coefficients, never survey sampling.
inline constexpr std::uint64_t kNoPairStateSeed = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kGenericStateSeed = 0xd1b54a32d192ed03ull;
JointStateSpec no_pair_generic_spec(const UnruhWeights& w,
                                    std::uint64_t seed = kNoPairStateSeed);
JointStateSpec fully_generic_spec(const UnruhWeights& w,
                                  std::uint64_t seed = kGenericStateSeed);

}  // namespace fermiwedge
