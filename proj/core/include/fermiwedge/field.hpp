#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermiwedge/mode.hpp"
#include "fermiwedge/sparse_state.hpp"

namespace fermiwedge {

enum class FieldKind : std::uint8_t { grassmann, spin };

// A fermionic field in scope: either the anticommuting (Grassmann) scalar,
// which carries a single degree of freedom per wedge/species, or a spin-s
// field with n = 2s+1 spin-z projections. The Grassmann case is modelled as
// chain length n = 1 rather than as spin 0, so the same chain combinatorics
// cover both.
class FieldSpec {
 public:
  static FieldSpec grassmann();
  static FieldSpec dirac();          // spin 1/2
  static FieldSpec spin(int twice_s);  // twice_s odd and positive

  FieldKind kind() const { return kind_; }
  int twice_s() const { return twice_s_; }
  int chain_length() const { return chain_length_; }           // n
  int rindler_mode_count() const { return 4 * chain_length_; }  // 4n
  int total_mode_count() const { return 4 * chain_length_ + 1; }  // Alice + 4n

  // Spin-z projections in descending order (doubled): +2s, +2s−2, …, −2s.
  // Grassmann: the single value 0.
  std::vector<int> twice_sz_values() const;
  // Index of a projection in the descending list; throws std::domain_error.
  int spin_index(int twice_sz) const;

  // Canonical mode sequences. Within every species/region group, modes are
  // ordered by descending spin-z (highest leftmost).
  //   right sector: c_I group then d_II group   (2n modes)
  //   left sector:  d_I group then c_II group   (2n modes)
  //   rindler:      right sector then left      (4n modes)
  //   joint:        Alice then rindler          (4n+1 modes)
  ModeOrdering sector_ordering(UnruhSector sector) const;
  ModeOrdering rindler_ordering() const;
  ModeOrdering joint_ordering() const;
  // The i-th mode of rindler_ordering(), i in [0, 4n).
  ModeId rindler_mode(int index) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind kind, int twice_s, int chain_length)
      : kind_(kind), twice_s_(twice_s), chain_length_(chain_length) {}

  FieldKind kind_ = FieldKind::grassmann;
  int twice_s_ = 0;
  int chain_length_ = 1;
};

// Display label of a mode, e.g. "c†↑I", "d†↓II" (Dirac), "c†I" (Grassmann),
// "c†+3/2I" (spin 3/2), "A" (Alice).
std::string mode_label(const ModeId& mode, const FieldSpec& field);

// Inverse of mode_label. Also accepts the dagger-less ASCII forms
// ("cuI", "ddII", "c+3/2I"). Throws std::domain_error on unknown labels.
ModeId parse_mode_label(std::string_view text, const FieldSpec& field);

// Two-mode squeezing angle r ∈ [0, π/4]; π/4 is the infinite-acceleration
// limit. Finite inputs outside the range are clamped to it.
class SqueezeParameter {
 public:
  explicit SqueezeParameter(double r);
  double r() const { return r_; }
  double cos() const;
  double sin() const;
  double tan() const;

 private:
  double r_ = 0.0;
};

// r = arctan(e^{−π ω c / a}) for Rindler frequency ω, proper acceleration a,
// and speed constant c. Throws std::domain_error on nonpositive inputs.
SqueezeParameter acceleration_to_squeeze(double omega, double a, double c);

// Superposition weights of the right/left Unruh ladder operators
// ("single-mode approximation" = pure right, q_R = 1).
struct UnruhWeights {
  Amplitude q_R;
  Amplitude q_L;

  UnruhWeights(Amplitude qr, Amplitude ql);
  static UnruhWeights from_qr(double qr);  // q_L = sqrt(1 − qr²), qr ∈ [−1, 1]
  static UnruhWeights single_mode() { return UnruhWeights{{1.0, 0.0}, {0.0, 0.0}}; }
};

// An n-digit binary chain α, written left to right: digit(1) is the leftmost.
class BinaryChain {
 public:
  BinaryChain(std::uint32_t index, int length);
  static BinaryChain from_string(std::string_view digits);

  int length() const { return length_; }
  // Digit at 1-based position p (left to right).
  int digit(int position) const;
  // Packed form: bit (p−1) = digit(p). Chains enumerate as 0 … 2^n − 1.
  std::uint32_t index() const { return index_; }
  std::string to_string() const;

  bool operator==(const BinaryChain&) const = default;

 private:
  std::uint32_t index_ = 0;
  int length_ = 0;
};

struct ChainStats {
  int chi = 0;                    // number of 1 digits
  std::vector<int> chi_before;    // chi_before[k] = ones strictly before 1-based position k (k in [1, n]; [0] unused)
  BinaryChain reversed;           // digit order reversed
};

ChainStats chain_stats(const BinaryChain& alpha);

// Unnormalized sector-vacuum weights x_α = (tan r)^χ(α), indexed by chain.
// They satisfy the recurrence x_{α + 2^k} = tan r · x_α whenever digit k+1
// of α is 0 (adding 2^k raises that digit).
class VacuumCoefficients {
 public:
  VacuumCoefficients(const FieldSpec& field, const SqueezeParameter& r);
  int chain_length() const { return chain_length_; }
  double x(const BinaryChain& alpha) const;
  double x(std::uint32_t chain_index) const { return weights_.at(chain_index); }

 private:
  int chain_length_ = 1;
  std::vector<double> weights_;
};

}  // namespace fermiwedge
