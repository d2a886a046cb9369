#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fermiwedge/measures.hpp"

namespace fermiwedge {

// Raised when a full enumeration is requested for a mode count whose
// factorial census is out of reach; callers should sample instead.
class enumeration_refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full enumeration is allowed up to 12 permuted modes (12! ≈ 4.8e8 is the
// natural ceiling; every in-scope full survey has at most 8).
inline constexpr int kMaxEnumerableModes = 12;

inline constexpr double kDefaultQuantum = 1e-9;

// A permutation of the 4n Rindler modes. perm[slot] is the canonical index
// (see FieldSpec::rindler_mode) of the mode placed at that slot; Alice stays
// pinned at position 0 and is never part of the permutation.
struct OrderingPermutation {
  std::vector<std::uint8_t> perm;

  static OrderingPermutation identity(const FieldSpec& field);
  ModeOrdering to_mode_ordering(const FieldSpec& field) const;

  bool operator==(const OrderingPermutation&) const = default;
};

// All (4n)! mode orderings in lexicographic order. Throws
// enumeration_refused when 4n > kMaxEnumerableModes.
std::vector<OrderingPermutation> enumerate_orderings(const FieldSpec& field);

// A negativity curve quantized for exact comparison: two orderings belong to
// the same behaviour class iff their quantized curves are identical.
struct CurveFingerprint {
  std::vector<std::int64_t> quantized;

  auto operator<=>(const CurveFingerprint&) const = default;
};

CurveFingerprint fingerprint_curve(const NegativityCurve& curve, double quantum);

struct BehaviorClass {
  CurveFingerprint fingerprint;
  NegativityCurve curve;  // curve of `representative`, pre-quantization
  OrderingPermutation representative;  // first ordering encountered in the class
  std::uint64_t population = 0;  // exact count (full) or sample count (Monte Carlo)
  bool contains_physical = false;
};

enum class SurveyMode { full, monte_carlo };

struct SurveyReport {
  FieldSpec field;
  JointStateSpec spec;
  std::vector<double> grid;
  double quantum = kDefaultQuantum;
  SurveyMode mode = SurveyMode::full;
  // Sorted by population (descending), ties by fingerprint (ascending).
  std::vector<BehaviorClass> classes;
  std::uint64_t sample_size = 0;  // Monte Carlo only
  std::uint64_t rng_seed = 0;     // Monte Carlo only
};

// Evaluates every ordering's negativity curve and groups orderings into
// behaviour classes. Populations are exact and sum to (4n)!.
SurveyReport survey_full(const JointStateSpec& spec, const FieldSpec& field,
                         const std::vector<double>& grid,
                         double quantum = kDefaultQuantum);

// Classifies `samples` orderings drawn uniformly i.i.d. from the seeded
// generator. Populations are sample counts and sum to `samples`. The
// region-separated ordering is additionally probed (without affecting
// populations) so the physical class is flagged whenever any sampled class
// matches it; reports are reproducible given the seed.
SurveyReport survey_monte_carlo(const JointStateSpec& spec, const FieldSpec& field,
                                const std::vector<double>& grid, double quantum,
                                std::uint64_t samples, std::uint64_t seed);

// The canonical ordering with every wedge-I mode before every wedge-II mode
// (the physically selected arrangement), and the membership test for that
// arrangement. All such orderings are equivalent up to within-region
// permutations, which are local unitaries.
OrderingPermutation region_separated_ordering(const FieldSpec& field);
bool is_region_separated(const OrderingPermutation& perm, const FieldSpec& field);

// The class containing the region-separated orderings. Throws
// std::domain_error if the report was built for a different field or if no
// surveyed class matches the region-separated curve (possible only for
// Monte Carlo reports whose samples never hit it).
const BehaviorClass& physical_class(const SurveyReport& report, const FieldSpec& field);

}  // namespace fermiwedge
