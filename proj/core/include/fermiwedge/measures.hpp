#pragma once

#include <stdexcept>
#include <vector>

#include "fermiwedge/density_matrix.hpp"
#include "fermiwedge/rindler_states.hpp"

namespace fermiwedge {

// Partial-transpose eigenvalues within this band of zero count as zero:
// entries are trig polynomials exact to ~1e-15, so the band is generous.
inline constexpr double kNegativityEigenTolerance = 1e-12;
// Entropy contributions from eigenvalues at or below this floor are dropped.
inline constexpr double kEntropyEigenFloor = 1e-14;
// Reduced density matrices may dip this far below positive semidefinite
// before we call the computation numerically invalid.
inline constexpr double kPsdTolerance = 1e-10;

// Thrown when a density matrix fails positive-semidefiniteness beyond
// kPsdTolerance (a numerical-validity failure, not a physics result).
class numerical_validity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sum of |negative eigenvalues| of the partial transpose over Alice,
// equivalently (‖ρ^{T_A}‖₁ − 1)/2. Zero for PPT states.
double negativity(const DensityMatrix& rho);

// −Σ λ log₂ λ over eigenvalues λ > kEntropyEigenFloor. Throws
// numerical_validity_error if any eigenvalue < −kPsdTolerance.
double von_neumann_entropy(const DensityMatrix& rho);

struct NegativityCurve {
  std::vector<double> grid;    // sorted r values in [0, π/4]
  std::vector<double> values;  // negativity at each r, ≥ 0
};

// Uniform classification grid on [0, π/4] (default 33 points).
std::vector<double> default_classification_grid(int points = 33);

// Negativity as a function of r for one operator ordering, computed by the
// definition: build the joint state canonically, re-express it in `ordering`,
// trace the wedge-II positions there, and take the negativity.
NegativityCurve negativity_curve(const JointStateSpec& spec, const FieldSpec& field,
                                 const ModeOrdering& ordering,
                                 const std::vector<double>& grid);

}  // namespace fermiwedge
