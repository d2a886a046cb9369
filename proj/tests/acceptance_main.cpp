// Acceptance gate: ten numbered checks covering the worked warm-up examples,
// the golden state tables, the vacuum-annihilation identities, the survey
// censuses, the Monte Carlo histogram structure, the property suites, and
// CLI determinism. Prints exactly one PASS/FAIL line per criterion and
// returns the number of failed criteria. Optional arguments select a subset
// of criteria by number.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fermiwedge/fock_ops.hpp"
#include "fermiwedge/survey.hpp"
#include "support/golden_tables.hpp"

namespace fw = fermiwedge;
namespace fs = std::filesystem;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;
constexpr std::uint64_t kHistSamples = 200000;
constexpr std::uint64_t kHistSeed = 271828;

using Problems = std::vector<std::string>;

void expect(Problems& problems, bool ok, const std::string& what) {
  if (!ok) problems.push_back(what);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> seeded_r_values(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> values;
  for (int i = 0; i < count; ++i) {
    values.push_back((static_cast<double>(rng() >> 11) * 0x1.0p-53) * (M_PI / 4.0));
  }
  return values;
}

// ---- shared heavy results (computed once, on first use) --------------------

const fw::SurveyReport& scalar_survey_half() {
  static const fw::SurveyReport report =
      fw::survey_full(fw::vacuum_excitation_spec(fw::UnruhWeights::from_qr(kInvSqrt2)),
                      fw::FieldSpec::grassmann(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& scalar_survey_single_mode() {
  static const fw::SurveyReport report =
      fw::survey_full(fw::vacuum_excitation_spec(fw::UnruhWeights::single_mode()),
                      fw::FieldSpec::grassmann(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& singlet_survey() {
  static const fw::SurveyReport report = fw::survey_full(
      fw::singlet_analogue_spec(fw::FieldSpec::dirac(), fw::UnruhWeights::from_qr(kInvSqrt2)),
      fw::FieldSpec::dirac(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& no_pair_survey() {
  static const fw::SurveyReport report =
      fw::survey_full(fw::no_pair_generic_spec(fw::UnruhWeights::from_qr(kInvSqrt2)),
                      fw::FieldSpec::dirac(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& no_pair_survey_single_mode() {
  static const fw::SurveyReport report =
      fw::survey_full(fw::no_pair_generic_spec(fw::UnruhWeights::single_mode()),
                      fw::FieldSpec::dirac(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& generic_survey() {
  static const fw::SurveyReport report =
      fw::survey_full(fw::fully_generic_spec(fw::UnruhWeights::from_qr(kInvSqrt2)),
                      fw::FieldSpec::dirac(), fw::default_classification_grid());
  return report;
}

const fw::SurveyReport& spin32_survey() {
  static const fw::SurveyReport report = [] {
    std::fprintf(stderr,
                 "[acceptance] sampling %llu spin-3/2 orderings (single-threaded this "
                 "takes on the order of an hour)...\n",
                 static_cast<unsigned long long>(kHistSamples));
    const fw::FieldSpec field = fw::FieldSpec::spin(3);
    return fw::survey_monte_carlo(
        fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kInvSqrt2)), field,
        fw::default_classification_grid(), fw::kDefaultQuantum, kHistSamples, kHistSeed);
  }();
  return report;
}

// ---- criterion 1: separability flip of the two-mode warm-up ---------------

Problems criterion1() {
  Problems problems;
  const auto start = std::chrono::steady_clock::now();

  const fw::ModeId a{fw::Species::particle, fw::Region::wedge_I, 1};
  const fw::ModeId b{fw::Species::particle, fw::Region::wedge_I, -1};
  const fw::Amplitude h{0.5, 0.0};
  const fw::SparseState psi(fw::ModeOrdering({a, b}), {{0u, h}, {1u, h}, {2u, h}, {3u, h}});

  const double s_ab =
      fw::von_neumann_entropy(fw::partial_trace(psi, fw::PartitionSpec{0, {}, {1}}));
  const fw::SparseState psi_ba = fw::reorder_basis(psi, fw::ModeOrdering({b, a}));
  const double s_ba =
      fw::von_neumann_entropy(fw::partial_trace(psi_ba, fw::PartitionSpec{1, {}, {0}}));

  expect(problems, std::abs(s_ab) <= 1e-10, "product-layout entropy " + fmt(s_ab) + " != 0");
  expect(problems, std::abs(s_ba - 1.0) <= 1e-10,
         "swapped-layout entropy " + fmt(s_ba) + " != 1");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(problems, seconds < 1.0, "runtime " + fmt(seconds) + " s exceeds 1 s");
  return problems;
}

// ---- criterion 2: tripartite trace ambiguity -------------------------------

Problems criterion2() {
  Problems problems;
  const fw::ModeId a{fw::Species::particle, fw::Region::wedge_I, 1};
  const fw::ModeId b{fw::Species::particle, fw::Region::wedge_I, -1};
  const fw::ModeId c{fw::Species::antiparticle, fw::Region::wedge_I, 1};
  const fw::Amplitude h{0.5, 0.0};
  const fw::SparseState phi(fw::ModeOrdering({a, b, c}), {{1u, h}, {2u, h}, {5u, h}, {6u, h}});

  const double n_abc = fw::negativity(fw::partial_trace(phi, fw::PartitionSpec{0, {1}, {2}}));
  const fw::SparseState phi_acb = fw::reorder_basis(phi, fw::ModeOrdering({a, c, b}));
  const double n_acb =
      fw::negativity(fw::partial_trace(phi_acb, fw::PartitionSpec{0, {2}, {1}}));

  expect(problems, std::abs(n_abc - 0.5) <= 1e-10,
         "negativity under (a,b,c) " + fmt(n_abc) + " != 0.5");
  expect(problems, std::abs(n_acb) <= 1e-10,
         "negativity under (a,c,b) " + fmt(n_acb) + " != 0");
  return problems;
}

// ---- criterion 3: golden state tables --------------------------------------

Problems criterion3() {
  Problems problems;
  const std::vector<double> r_values = seeded_r_values(5, 0xacce9703);
  const std::vector<fw::UnruhWeights> weights = {
      fw::UnruhWeights::single_mode(),
      fw::UnruhWeights::from_qr(kInvSqrt2),
      fw::UnruhWeights::from_qr(0.6),
  };
  const fw::FieldSpec scalar = fw::FieldSpec::grassmann();
  const fw::FieldSpec two_level = fw::FieldSpec::dirac();

  double worst = 0.0;
  for (double r : r_values) {
    const fw::SqueezeParameter rho(r);
    const fw::SparseState svac = fw::build_unruh_vacuum(scalar, rho);
    const fw::SparseState dvac = fw::build_unruh_vacuum(two_level, rho);
    worst = std::max(worst, golden::max_error(svac, golden::scalar_vacuum(),
                                              fw::UnruhWeights::single_mode(), r,
                                              golden::scalar_key));
    worst = std::max(worst, golden::max_error(dvac, golden::two_level_vacuum(),
                                              fw::UnruhWeights::single_mode(), r,
                                              golden::pair_key));
    for (const fw::UnruhWeights& w : weights) {
      worst = std::max(worst,
                       golden::max_error(fw::apply_unruh_creation(scalar, 0, w, rho, svac),
                                         golden::scalar_excitation(), w, r,
                                         golden::scalar_key));
      for (int sigma : {+1, -1}) {
        worst = std::max(
            worst, golden::max_error(fw::apply_unruh_creation(two_level, sigma, w, rho, dvac),
                                     golden::two_level_excitation(sigma), w, r,
                                     golden::pair_key));
      }
      const fw::SparseState pair = fw::apply_unruh_creation(
          two_level, +1, w, rho, fw::apply_unruh_creation(two_level, -1, w, rho, dvac));
      worst = std::max(
          worst, golden::max_error(pair, golden::two_level_pair(), w, r, golden::pair_key));
    }
  }
  expect(problems, worst < 1e-12, "worst golden-table deviation " + fmt(worst));
  return problems;
}

// ---- criterion 4: sector annihilators kill their vacua ---------------------

Problems criterion4() {
  Problems problems;
  std::vector<double> r_values = seeded_r_values(7, 0xacce9704);
  r_values.push_back(0.0);
  r_values.push_back(M_PI / 4.0);

  double worst = 0.0;
  for (const fw::FieldSpec& field :
       {fw::FieldSpec::grassmann(), fw::FieldSpec::dirac(), fw::FieldSpec::spin(3)}) {
    for (double r : r_values) {
      const fw::SqueezeParameter rho(r);
      for (fw::UnruhSector sector : {fw::UnruhSector::right, fw::UnruhSector::left}) {
        const fw::SparseState vacuum = fw::build_sector_vacuum(field, rho, sector);
        for (int twice_sz : field.twice_sz_values()) {
          worst = std::max(
              worst,
              fw::apply_unruh_sector_annihilation(field, twice_sz, sector, rho, vacuum)
                  .norm());
        }
      }
    }
  }
  expect(problems, worst < 1e-12, "worst annihilated-vacuum norm " + fmt(worst));
  return problems;
}

// ---- criterion 5: scalar-field curve shapes and census ---------------------

Problems criterion5() {
  Problems problems;
  const auto start = std::chrono::steady_clock::now();

  const fw::FieldSpec field = fw::FieldSpec::grassmann();
  const fw::JointStateSpec spec = fw::vacuum_excitation_spec(fw::UnruhWeights::from_qr(kInvSqrt2));
  const std::vector<double> grid = fw::default_classification_grid();

  const fw::OrderingPermutation interleaved{{0, 1, 2, 3}};
  const fw::OrderingPermutation separated{{0, 2, 1, 3}};

  const fw::NegativityCurve mono =
      fw::negativity_curve(spec, field, interleaved.to_mode_ordering(field), grid);
  for (std::size_t i = 0; i + 1 < mono.values.size(); ++i) {
    if (!(mono.values[i + 1] <= mono.values[i] + 1e-12)) {
      problems.push_back("interleaved curve rises at grid index " + std::to_string(i + 1));
      break;
    }
  }

  // The separated curve forms a very shallow basin: the exact minimum sits at
  // r ~= 0.4108 with value 0.2368034, while the value at pi/8 is 0.2368783 —
  // a 7.5e-5 difference, far below figure resolution. The minimum's location
  // is therefore checked at grid resolution (one step of the 33-point grid)
  // and its value against the value at pi/8; the regeneration claim itself
  // (dip, then a rise back to the inertial 0.25) is checked exactly.
  const fw::NegativityCurve dip =
      fw::negativity_curve(spec, field, separated.to_mode_ordering(field), grid);
  const std::size_t min_idx = static_cast<std::size_t>(
      std::min_element(dip.values.begin(), dip.values.end()) - dip.values.begin());
  const double grid_step = dip.grid[1] - dip.grid[0];
  expect(problems, std::abs(dip.grid[min_idx] - M_PI / 8.0) <= grid_step + 1e-12,
         "separated-curve minimum sits at r = " + fmt(dip.grid[min_idx]) +
             ", more than one grid step from pi/8");
  const double at_pi8 = dip.values[(dip.values.size() - 1) / 2];
  expect(problems, std::abs(at_pi8 - dip.values[min_idx]) <= 1e-3,
         "value at pi/8 (" + fmt(at_pi8) + ") is not within 1e-3 of the minimum (" +
             fmt(dip.values[min_idx]) + ")");
  expect(problems, dip.values[min_idx] < 0.25 - 1e-2,
         "separated curve lacks a genuine dip (min " + fmt(dip.values[min_idx]) + ")");
  expect(problems, std::abs(dip.values.back() - 0.25) <= 1e-10,
         "separated curve does not return to 0.25 (got " + fmt(dip.values.back()) + ")");
  for (std::size_t i = 0; i + 1 < dip.values.size(); ++i) {
    const bool ok = (i < min_idx) ? dip.values[i + 1] <= dip.values[i] + 1e-12
                                  : dip.values[i + 1] >= dip.values[i] - 1e-12;
    if (!ok) {
      problems.push_back("separated curve is not unimodal around index " +
                         std::to_string(i + 1));
      break;
    }
  }

  expect(problems, scalar_survey_half().classes.size() == 2,
         "balanced-weight census " + std::to_string(scalar_survey_half().classes.size()) +
             " != 2 classes");
  expect(problems, scalar_survey_single_mode().classes.size() == 1,
         "single-mode census " +
             std::to_string(scalar_survey_single_mode().classes.size()) + " != 1 class");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(problems, seconds < 10.0, "runtime " + fmt(seconds) + " s exceeds 10 s");
  return problems;
}

// ---- criterion 6: two-level singlet survey census ---------------------------

Problems criterion6() {
  Problems problems;
  const auto start = std::chrono::steady_clock::now();
  const fw::SurveyReport& report = singlet_survey();

  expect(problems, report.classes.size() == 6,
         "census " + std::to_string(report.classes.size()) + " != 6 classes");
  if (!report.classes.empty()) {
    std::uint64_t min_pop = UINT64_MAX, max_pop = 0;
    for (const fw::BehaviorClass& c : report.classes) {
      min_pop = std::min(min_pop, c.population);
      max_pop = std::max(max_pop, c.population);
    }
    expect(problems, min_pop == 4032,
           "minimum population " + std::to_string(min_pop) + " != 4032");
    expect(problems, max_pop == 9408,
           "maximum population " + std::to_string(max_pop) + " != 9408");
  }

  try {
    const fw::BehaviorClass& phys = fw::physical_class(report, fw::FieldSpec::dirac());
    const std::vector<double>& v = phys.curve.values;
    const double endpoint = v.back();
    expect(problems, endpoint > 0.25 - 1e-10 && endpoint < 0.27,
           "physical endpoint " + fmt(endpoint) + " outside (0.25, 0.27)");
    bool all_above = true, interior_strict = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0.25 - 1e-10) all_above = false;
      if (i > 0 && i + 1 < v.size() && !(v[i] > 0.25 + 1e-12)) interior_strict = false;
    }
    expect(problems, all_above, "physical curve dips below 0.25 on the grid");
    expect(problems, interior_strict,
           "physical curve does not approach its endpoint from above");
  } catch (const std::exception& e) {
    problems.push_back(std::string("physical class missing: ") + e.what());
  }

  double extremal = 1.0;
  for (const fw::BehaviorClass& c : report.classes) {
    extremal = std::min(extremal, c.curve.values.back());
  }
  expect(problems, std::abs(extremal - 0.1398) <= 5e-4,
         "extremal endpoint " + fmt(extremal) + " != 0.1398 +- 5e-4");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(problems, seconds < 300.0, "runtime " + fmt(seconds) + " s exceeds 5 min");
  return problems;
}

// ---- criterion 7: seeded generic-state censuses -----------------------------

Problems criterion7() {
  Problems problems;
  const auto start = std::chrono::steady_clock::now();

  const std::size_t no_pair = no_pair_survey().classes.size();
  const std::size_t no_pair_sm = no_pair_survey_single_mode().classes.size();
  const std::size_t generic = generic_survey().classes.size();

  expect(problems, no_pair == 64,
         "seeded-state census deviates: no-pair state gave " + std::to_string(no_pair) +
             " classes, expected 64");
  expect(problems, no_pair_sm == 2,
         "seeded-state census deviates: single-mode no-pair state gave " +
             std::to_string(no_pair_sm) + " classes, expected 2");
  expect(problems, generic == 778,
         "seeded-state census deviates: fully generic state gave " +
             std::to_string(generic) + " classes, expected 778");

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(problems, seconds < 900.0, "runtime " + fmt(seconds) + " s exceeds 15 min");
  return problems;
}

// ---- criterion 8: spin-3/2 Monte Carlo histogram structure ------------------

Problems criterion8() {
  Problems problems;
  const fw::SurveyReport& report = spin32_survey();

  std::uint64_t total = 0;
  for (const fw::BehaviorClass& c : report.classes) total += c.population;
  expect(problems, total == kHistSamples,
         "sampled populations sum to " + std::to_string(total));

  if (report.classes.size() < 3) {
    problems.push_back("only " + std::to_string(report.classes.size()) +
                       " classes sampled; histogram structure unavailable");
    return problems;
  }

  // A plethora of infrequent behaviours: the sampled census finds tens of
  // thousands of distinct curves.
  expect(problems, report.classes.size() >= 1000,
         "only " + std::to_string(report.classes.size()) + " classes sampled");

  // Classes arrive sorted by population, so it suffices to compare the
  // second-ranked class against the third. Note: at this sample count the
  // measured top populations are statistically tied (e.g. 364/358/357 with
  // multinomial sigma ~19), and the classes stay distinct under any curve
  // merge tolerance up to plot scale, so this dominance clause is expected
  // to fail; it is asserted literally rather than weakened.
  const std::uint64_t p0 = report.classes[0].population;
  const std::uint64_t p1 = report.classes[1].population;
  const std::uint64_t p2 = report.classes[2].population;
  expect(problems, p0 >= 2 * p2 && p1 >= 2 * p2,
         "top-two dominance missing: populations " + std::to_string(p0) + ", " +
             std::to_string(p1) + " vs third " + std::to_string(p2));

  // Plateaus: several population levels shared by whole families of classes.
  std::map<std::uint64_t, std::size_t> level_sizes;
  for (const fw::BehaviorClass& c : report.classes) ++level_sizes[c.population];
  std::size_t plateau_levels = 0;
  for (const auto& [pop, count] : level_sizes) {
    if (count >= 10) ++plateau_levels;
  }
  expect(problems, plateau_levels >= 3,
         "only " + std::to_string(plateau_levels) +
             " population levels shared by >= 10 classes");
  return problems;
}

// ---- criterion 9: property suites -------------------------------------------

// {c_i, c†_j} = δ_ij, {c_i, c_j} = 0, {c†_i, c†_j} = 0 on every basis state.
void check_anticommutators(Problems& problems) {
  double worst = 0.0;
  for (int m = 2; m <= 6; ++m) {
    std::vector<fw::ModeId> modes;
    for (int i = 0; i < m; ++i) {
      modes.push_back(fw::ModeId{i % 2 == 0 ? fw::Species::particle : fw::Species::antiparticle,
                                 i % 3 == 0 ? fw::Region::wedge_I : fw::Region::wedge_II,
                                 2 * (i / 2) + 1});
    }
    const fw::ModeOrdering ordering(modes);
    for (fw::OccupationKey key = 0; key < (fw::OccupationKey{1} << m); ++key) {
      const fw::SparseState basis = fw::SparseState::basis_state(ordering, key);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const fw::SparseState mixed =
              fw::apply_annihilation_at(i, fw::apply_creation_at(j, basis)) +
              fw::apply_creation_at(j, fw::apply_annihilation_at(i, basis));
          const fw::SparseState expected =
              (i == j) ? basis : fw::SparseState(ordering);
          worst = std::max(worst, (mixed + expected.scaled(-1.0)).norm());
          const fw::SparseState double_ann =
              fw::apply_annihilation_at(i, fw::apply_annihilation_at(j, basis)) +
              fw::apply_annihilation_at(j, fw::apply_annihilation_at(i, basis));
          worst = std::max(worst, double_ann.norm());
          const fw::SparseState double_cre =
              fw::apply_creation_at(i, fw::apply_creation_at(j, basis)) +
              fw::apply_creation_at(j, fw::apply_creation_at(i, basis));
          worst = std::max(worst, double_cre.norm());
        }
      }
    }
  }
  if (!(worst < 1e-12)) {
    problems.push_back("anticommutator deviation " + fmt(worst));
  }
}

void check_reorder_roundtrip(Problems& problems) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::SparseState psi = fw::build_joint_state(
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kInvSqrt2)), field,
      fw::SqueezeParameter(0.5));
  std::mt19937_64 rng(0xacce9709);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    fw::OrderingPermutation p = fw::OrderingPermutation::identity(field);
    for (std::size_t i = p.perm.size() - 1; i > 0; --i) {
      std::swap(p.perm[i], p.perm[static_cast<std::size_t>(rng() % (i + 1))]);
    }
    const fw::SparseState there = fw::reorder_basis(psi, p.to_mode_ordering(field));
    const fw::SparseState back = fw::reorder_basis(there, psi.ordering());
    worst = std::max(worst, (back + psi.scaled(-1.0)).norm());
  }
  if (!(worst < 1e-12)) {
    problems.push_back("reorder round-trip deviation " + fmt(worst));
  }
}

void check_expectation_invariance(Problems& problems) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::SparseState psi = fw::build_joint_state(
      fw::fully_generic_spec(fw::UnruhWeights::from_qr(0.6)), field,
      fw::SqueezeParameter(0.4));

  std::mt19937_64 rng(0xacce990a);
  fw::OrderingPermutation p = fw::OrderingPermutation::identity(field);
  for (std::size_t i = p.perm.size() - 1; i > 0; --i) {
    std::swap(p.perm[i], p.perm[static_cast<std::size_t>(rng() % (i + 1))]);
  }
  const fw::SparseState phi = fw::reorder_basis(psi, p.to_mode_ordering(field));

  // Observable: every occupation number plus one hopping pair per species.
  auto expectation = [&](const fw::SparseState& state) {
    fw::Amplitude total = 0.0;
    for (int i = 0; i < field.rindler_mode_count(); ++i) {
      const fw::ModeId mode = field.rindler_mode(i);
      const fw::SparseState lowered = fw::apply_annihilation(mode, state);
      total += fw::inner_product(lowered, lowered);
    }
    const fw::ModeId m1 = field.rindler_mode(0);
    const fw::ModeId m2 = field.rindler_mode(5);
    const fw::SparseState hop =
        fw::apply_creation(m1, fw::apply_annihilation(m2, state)) +
        fw::apply_creation(m2, fw::apply_annihilation(m1, state));
    total += fw::inner_product(state, hop);
    return total;
  };

  const double deviation = std::abs(expectation(psi) - expectation(phi));
  if (!(deviation < 1e-12)) {
    problems.push_back("expectation value moved " + fmt(deviation) + " under reordering");
  }
}

void check_local_unitary_invariance(Problems& problems) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::JointStateSpec spec =
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kInvSqrt2));
  const std::vector<double> grid = {0.0, 0.4, M_PI / 4.0};
  const fw::ModeOrdering canonical = field.joint_ordering();

  const auto permuted = [](const fw::ModeOrdering& base, const std::vector<int>& positions) {
    std::vector<fw::ModeId> modes;
    for (int pos : positions) modes.push_back(base.mode_at(pos));
    return fw::ModeOrdering(modes);
  };

  // A permutation is a local unitary only while every reordered pair stays on
  // the same side of the kept/traced split. The canonical layout alternates
  // wedges in blocks of two, so only within-block swaps qualify there; the
  // wedge-separated layout admits arbitrary within-wedge permutations.
  double worst = 0.0;
  const auto compare = [&](const fw::ModeOrdering& reference,
                           const std::vector<std::vector<int>>& shuffles) {
    const fw::NegativityCurve base = fw::negativity_curve(spec, field, reference, grid);
    for (const auto& positions : shuffles) {
      const fw::NegativityCurve curve =
          fw::negativity_curve(spec, field, permuted(reference, positions), grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(curve.values[i] - base.values[i]));
      }
    }
  };
  compare(canonical, {
                         {0, 2, 1, 3, 4, 5, 6, 7, 8},
                         {0, 1, 2, 4, 3, 5, 6, 7, 8},
                         {0, 2, 1, 4, 3, 6, 5, 8, 7},
                     });
  const fw::ModeOrdering separated =
      fw::region_separated_ordering(field).to_mode_ordering(field);
  compare(separated, {
                         {0, 4, 3, 2, 1, 8, 7, 6, 5},
                         {0, 2, 3, 4, 1, 6, 7, 8, 5},
                         {0, 3, 1, 4, 2, 5, 6, 7, 8},
                     });
  if (!(worst < 1e-12)) {
    problems.push_back("within-wedge reordering moved a curve by " + fmt(worst));
  }
}

void check_survival(Problems& problems) {
  const struct {
    const char* name;
    const fw::SurveyReport& report;
  } reports[] = {
      {"scalar balanced", scalar_survey_half()},
      {"scalar single-mode", scalar_survey_single_mode()},
      {"singlet", singlet_survey()},
      {"no-pair", no_pair_survey()},
      {"no-pair single-mode", no_pair_survey_single_mode()},
      {"fully generic", generic_survey()},
      {"spin-3/2 sampled", spin32_survey()},
  };
  for (const auto& entry : reports) {
    double min_end = 1.0;
    for (const fw::BehaviorClass& c : entry.report.classes) {
      min_end = std::min(min_end, c.curve.values.back());
    }
    if (!(min_end > 0.0)) {
      problems.push_back(std::string(entry.name) +
                         " survey has a class with endpoint " + fmt(min_end));
    }
  }
}

Problems criterion9() {
  Problems problems;
  check_anticommutators(problems);
  check_reorder_roundtrip(problems);
  check_expectation_invariance(problems);
  check_local_unitary_invariance(problems);
  check_survival(problems);
  return problems;
}

// ---- criterion 10: CLI byte-identical reruns --------------------------------

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream stream(path, std::ios::binary);
  std::ostringstream out;
  out << stream.rdbuf();
  return out.str();
}

Problems criterion10() {
  Problems problems;
  const char* cli = std::getenv("FERMIWEDGE_CLI");
  if (cli == nullptr) {
    problems.push_back("FERMIWEDGE_CLI is not set; cannot drive the binary");
    return problems;
  }
  const fs::path dir =
      fs::temp_directory_path() / ("fermiwedge-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const struct {
    const char* name;
    std::string args;
  } configs[] = {
      {"survey.json", "survey --field dirac --state singlet --grid 9"},
      {"mc.json", "mc-survey --field dirac --state singlet --grid 9 --samples 300 --seed 5"},
      {"curve.csv", "curve --field grassmann --grid 9"},
  };
  for (const auto& config : configs) {
    const fs::path out = dir / config.name;
    const std::string cmd = std::string("\"") + cli + "\" " + config.args + " --out \"" +
                            out.string() + "\" > /dev/null 2>&1";
    if (run_command(cmd) != 0) {
      problems.push_back(std::string(config.name) + ": first run failed");
      continue;
    }
    const std::string first = slurp(out);
    if (first.empty()) {
      problems.push_back(std::string(config.name) + ": first run wrote nothing");
      continue;
    }
    if (run_command(cmd) != 0) {
      problems.push_back(std::string(config.name) + ": second run failed");
      continue;
    }
    if (slurp(out) != first) {
      problems.push_back(std::string(config.name) + ": reruns differ");
    }
  }
  fs::remove_all(dir);
  return problems;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n >= 1 && n <= 10) {
      selected.push_back(n);
    } else {
      std::fprintf(stderr, "usage: %s [criterion numbers 1-10]\n", argv[0]);
      return 64;
    }
  }
  if (selected.empty()) {
    selected = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  }

  Problems (*const criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                                    criterion5, criterion6, criterion7, criterion8,
                                    criterion9, criterion10};
  int failures = 0;
  for (int n : selected) {
    Problems problems;
    const auto start = std::chrono::steady_clock::now();
    try {
      problems = criteria[n - 1]();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problems.empty()) {
      std::printf("criterion %d: PASS (%.2f s)\n", n, seconds);
    } else {
      ++failures;
      std::string joined;
      for (std::size_t i = 0; i < problems.size(); ++i) {
        if (i) joined += "; ";
        joined += problems[i];
      }
      std::printf("criterion %d: FAIL (%s)\n", n, joined.c_str());
    }
    std::fflush(stdout);
  }
  return failures;
}
