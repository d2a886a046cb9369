#include "fermiwedge/survey.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

namespace fermiwedge {

namespace {

// ---------------------------------------------------------------------------
// Bit-vector helpers (sign vectors over the state's support keys).
// ---------------------------------------------------------------------------

using Words = std::vector<std::uint64_t>;

struct WordsHash {
  std::size_t operator()(const Words& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool get_bit(const Words& w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1ull; }
inline void set_bit(Words& w, std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }

inline void xor_into(Words& dst, const Words& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline bool any_bit(const Words& w) {
  for (std::uint64_t x : w)
    if (x) return true;
  return false;
}

inline int lowest_bit(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
  }
  return -1;
}

// Runs fn(0..count) across hardware threads; fn(i) must write only slot i of
// any shared output, which keeps results independent of the schedule.
template <class F>
void parallel_for(std::size_t count, F&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || count < 32) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(hw, (count + 31) / 32));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t begin = next.fetch_add(32);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + 32);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Index of the unordered pair (m1, m2), m1 < m2, among M modes.
inline int pair_index(int m1, int m2, int M) {
  return m1 * M - m1 * (m1 + 1) / 2 + (m2 - m1 - 1);
}

// ---------------------------------------------------------------------------
// Survey engine.
//
// For a fixed joint state, the reduced matrix under ordering π differs from
// the canonical one only by per-amplitude signs (the parity of π restricted
// to each key's occupied modes) and by relabelings of the kept and traced
// patterns, which are local unitaries. So the engine assembles the partial
// transpose once per grid point from the canonical state, records which pair
// of support keys feeds each matrix entry, and re-evaluates any ordering by
// flipping entry signs — no state is ever physically reordered.
//
// Orderings whose sign vectors differ by an occupancy flip (−1)^{n̂_m} of any
// single mode, by the Alice flip, or by a global phase also produce the same
// curve (each is a local unitary or a phase), so sign vectors are reduced
// modulo the XOR span of those generators and each coset is evaluated once.
// ---------------------------------------------------------------------------

struct LocalEntry {
  std::uint16_t row;
  std::uint16_t col;
  std::uint32_t k1;
  std::uint32_t k2;
  Amplitude val;
};

struct Component {
  int dim = 0;
  std::vector<LocalEntry> entries;
};

struct GridPointData {
  std::vector<Component> components;  // dims >= 2; singleton diagonals can't go negative
};

class SurveyEngine {
 public:
  SurveyEngine(const JointStateSpec& spec, const FieldSpec& field,
               const std::vector<double>& grid)
      : modes_(field.rindler_mode_count()), grid_size_(grid.size()) {
    std::vector<SparseState> states;
    states.reserve(grid.size());
    for (double rv : grid) {
      states.push_back(build_joint_state(spec, field, SqueezeParameter(rv)));
    }

    for (const SparseState& st : states) {
      for (const Term& t : st.terms()) keys_.push_back(t.key);
    }
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    key_words_ = (keys_.size() + 63) / 64;

    build_pair_masks();
    build_gauge_basis();

    all_real_ = true;
    for (const SparseState& st : states) {
      for (const Term& t : st.terms()) {
        if (std::abs(t.amp.imag()) > 0.0) all_real_ = false;
      }
    }

    const int n = field.chain_length();
    std::vector<int> kept, traced;
    for (int i = 0; i < 4 * n; ++i) {
      const bool wedge_I = (i / n == 0) || (i / n == 2);
      (wedge_I ? kept : traced).push_back(1 + i);  // +1: Alice occupies position 0
    }
    per_r_.reserve(states.size());
    for (const SparseState& st : states) per_r_.push_back(assemble(st, kept, traced));
  }

  std::size_t key_count() const { return keys_.size(); }
  std::size_t grid_size() const { return grid_size_; }

  Words canonical_sign_vector(const OrderingPermutation& ordering) const {
    std::array<int, 16> slot_of{};
    for (std::size_t slot = 0; slot < ordering.perm.size(); ++slot) {
      slot_of[ordering.perm[slot]] = static_cast<int>(slot);
    }
    std::array<std::uint64_t, 2> inversions{0, 0};
    for (int m1 = 0; m1 < modes_; ++m1) {
      for (int m2 = m1 + 1; m2 < modes_; ++m2) {
        if (slot_of[m1] > slot_of[m2]) {
          const int p = pair_index(m1, m2, modes_);
          inversions[static_cast<std::size_t>(p >> 6)] |= 1ull << (p & 63);
        }
      }
    }
    Words sv(key_words_, 0);
    for (std::size_t x = 0; x < keys_.size(); ++x) {
      const int parity =
          std::popcount(inversions[0] & pair_masks_[x][0]) +
          std::popcount(inversions[1] & pair_masks_[x][1]);
      if (parity & 1) set_bit(sv, x);
    }
    reduce(sv);
    return sv;
  }

  NegativityCurve evaluate(const Words& sv, const std::vector<double>& grid) const {
    NegativityCurve curve;
    curve.grid = grid;
    curve.values.resize(grid_size_);
    Eigen::MatrixXd real_mat;
    Eigen::MatrixXcd cplx_mat;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> real_solver;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> cplx_solver;
    for (std::size_t j = 0; j < grid_size_; ++j) {
      double total = 0.0;
      for (const Component& comp : per_r_[j].components) {
        if (comp.dim == 2) {
          total += negative_part_dim2(comp, sv);
          continue;
        }
        if (all_real_) {
          real_mat.setZero(comp.dim, comp.dim);
          for (const LocalEntry& e : comp.entries) {
            const bool flip = get_bit(sv, e.k1) != get_bit(sv, e.k2);
            real_mat(e.row, e.col) += flip ? -e.val.real() : e.val.real();
          }
          real_solver.compute(real_mat, Eigen::EigenvaluesOnly);
          for (Eigen::Index i = 0; i < comp.dim; ++i) {
            const double lambda = real_solver.eigenvalues()(i);
            if (lambda < -kNegativityEigenTolerance) total -= lambda;
          }
        } else {
          cplx_mat.setZero(comp.dim, comp.dim);
          for (const LocalEntry& e : comp.entries) {
            const bool flip = get_bit(sv, e.k1) != get_bit(sv, e.k2);
            cplx_mat(e.row, e.col) += flip ? -e.val : e.val;
          }
          cplx_solver.compute(cplx_mat, Eigen::EigenvaluesOnly);
          for (Eigen::Index i = 0; i < comp.dim; ++i) {
            const double lambda = cplx_solver.eigenvalues()(i);
            if (lambda < -kNegativityEigenTolerance) total -= lambda;
          }
        }
      }
      curve.values[j] = total;
    }
    return curve;
  }

 private:
  void build_pair_masks() {
    pair_masks_.assign(keys_.size(), {0, 0});
    std::vector<int> occupied;
    for (std::size_t x = 0; x < keys_.size(); ++x) {
      occupied.clear();
      for (int m = 0; m < modes_; ++m) {
        if ((keys_[x] >> (1 + m)) & 1u) occupied.push_back(m);
      }
      for (std::size_t a = 0; a < occupied.size(); ++a) {
        for (std::size_t b = a + 1; b < occupied.size(); ++b) {
          const int p = pair_index(occupied[a], occupied[b], modes_);
          pair_masks_[x][static_cast<std::size_t>(p >> 6)] |= 1ull << (p & 63);
        }
      }
    }
  }

  // Gauge generators: per-mode occupancy flips, the Alice flip, and the
  // global flip. Reduced to RREF so coset representatives are unique.
  void build_gauge_basis() {
    auto insert_row = [this](Words v) {
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (get_bit(v, static_cast<std::size_t>(pivots_[i]))) xor_into(v, basis_[i]);
      }
      if (!any_bit(v)) return;
      pivots_.push_back(lowest_bit(v));
      basis_.push_back(std::move(v));
    };

    for (int m = -1; m < modes_; ++m) {  // m = -1 is the Alice flip
      Words v(key_words_, 0);
      const int bit_pos = 1 + m;  // Alice bit is key bit 0
      for (std::size_t x = 0; x < keys_.size(); ++x) {
        if ((keys_[x] >> bit_pos) & 1u) set_bit(v, x);
      }
      insert_row(std::move(v));
    }
    Words ones(key_words_, 0);
    for (std::size_t x = 0; x < keys_.size(); ++x) set_bit(ones, x);
    insert_row(std::move(ones));

    for (bool changed = true; changed;) {  // full reduction
      changed = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < basis_.size(); ++j) {
          if (i == j) continue;
          if (get_bit(basis_[j], static_cast<std::size_t>(pivots_[i]))) {
            xor_into(basis_[j], basis_[i]);
            changed = true;
          }
        }
      }
    }
  }

  void reduce(Words& sv) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (get_bit(sv, static_cast<std::size_t>(pivots_[i]))) xor_into(sv, basis_[i]);
    }
  }

  GridPointData assemble(const SparseState& state, const std::vector<int>& kept,
                         const std::vector<int>& traced) const {
    struct RawEntry {
      int alice;
      int label_idx;
      std::uint32_t key_idx;
      OccupationKey traced_pattern;
      Amplitude amp;
    };

    auto extract = [](OccupationKey key, const std::vector<int>& positions) {
      OccupationKey out = 0;
      for (std::size_t b = 0; b < positions.size(); ++b) {
        if ((key >> positions[b]) & 1u) out |= OccupationKey{1} << b;
      }
      return out;
    };

    std::vector<OccupationKey> labels;
    labels.reserve(state.terms().size());
    for (const Term& t : state.terms()) labels.push_back(extract(t.key, kept));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<RawEntry> raw;
    raw.reserve(state.terms().size());
    for (const Term& t : state.terms()) {
      RawEntry e;
      e.alice = static_cast<int>(t.key & 1u);
      e.label_idx = static_cast<int>(
          std::lower_bound(labels.begin(), labels.end(), extract(t.key, kept)) - labels.begin());
      e.key_idx = static_cast<std::uint32_t>(
          std::lower_bound(keys_.begin(), keys_.end(), t.key) - keys_.begin());
      e.traced_pattern = extract(t.key, traced);
      e.amp = t.amp;
      raw.push_back(e);
    }
    std::sort(raw.begin(), raw.end(), [](const RawEntry& a, const RawEntry& b) {
      return a.traced_pattern < b.traced_pattern;
    });

    const int L = static_cast<int>(labels.size());
    const int dim = 2 * L;

    // Entry (e1, e2) of a traced group feeds the partial transpose at
    // row (a2, i1), col (a1, i2) with value v1 · conj(v2).
    struct GlobalEntry {
      int row;
      int col;
      std::uint32_t k1;
      std::uint32_t k2;
      Amplitude val;
    };
    std::vector<GlobalEntry> entries;
    std::vector<int> parent(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&parent](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    for (std::size_t lo = 0; lo < raw.size();) {
      std::size_t hi = lo;
      while (hi < raw.size() && raw[hi].traced_pattern == raw[lo].traced_pattern) ++hi;
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = lo; j < hi; ++j) {
          GlobalEntry e;
          e.row = raw[j].alice * L + raw[i].label_idx;
          e.col = raw[i].alice * L + raw[j].label_idx;
          e.k1 = raw[i].key_idx;
          e.k2 = raw[j].key_idx;
          e.val = raw[i].amp * std::conj(raw[j].amp);
          unite(e.row, e.col);
          entries.push_back(e);
        }
      }
      lo = hi;
    }

    // Split into connected components; drop singletons (diagonal ≥ 0).
    std::vector<int> comp_size(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) ++comp_size[static_cast<std::size_t>(find(i))];
    std::vector<int> comp_id(static_cast<std::size_t>(dim), -1);
    GridPointData data;
    std::vector<int> local(static_cast<std::size_t>(dim), -1);
    for (int i = 0; i < dim; ++i) {
      const int root = find(i);
      if (comp_size[static_cast<std::size_t>(root)] < 2) continue;
      if (comp_id[static_cast<std::size_t>(root)] < 0) {
        comp_id[static_cast<std::size_t>(root)] = static_cast<int>(data.components.size());
        data.components.push_back(Component{});
      }
      Component& comp = data.components[static_cast<std::size_t>(comp_id[static_cast<std::size_t>(root)])];
      local[static_cast<std::size_t>(i)] = comp.dim++;
    }
    for (const GlobalEntry& e : entries) {
      const int root = find(e.row);
      if (comp_size[static_cast<std::size_t>(root)] < 2) continue;
      Component& comp = data.components[static_cast<std::size_t>(comp_id[static_cast<std::size_t>(root)])];
      comp.entries.push_back(LocalEntry{
          static_cast<std::uint16_t>(local[static_cast<std::size_t>(e.row)]),
          static_cast<std::uint16_t>(local[static_cast<std::size_t>(e.col)]),
          e.k1, e.k2, e.val});
    }
    return data;
  }

  double negative_part_dim2(const Component& comp, const Words& sv) const {
    double a = 0.0, b = 0.0;
    Amplitude c{0.0, 0.0};
    for (const LocalEntry& e : comp.entries) {
      const bool flip = get_bit(sv, e.k1) != get_bit(sv, e.k2);
      const Amplitude v = flip ? -e.val : e.val;
      if (e.row == 0 && e.col == 0) {
        a += v.real();
      } else if (e.row == 1 && e.col == 1) {
        b += v.real();
      } else if (e.row == 0 && e.col == 1) {
        c += v;
      }
    }
    const double mean = 0.5 * (a + b);
    const double radius = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(c));
    const double lambda_min = mean - radius;
    return (lambda_min < -kNegativityEigenTolerance) ? -lambda_min : 0.0;
  }

  int modes_;
  std::size_t grid_size_;
  std::vector<OccupationKey> keys_;  // union support over the grid, sorted
  std::size_t key_words_ = 0;
  std::vector<std::array<std::uint64_t, 2>> pair_masks_;
  std::vector<Words> basis_;  // gauge span, RREF
  std::vector<int> pivots_;
  std::vector<GridPointData> per_r_;
  bool all_real_ = true;
};

// ---------------------------------------------------------------------------
// Classification shared by the full and Monte Carlo surveys.
// ---------------------------------------------------------------------------

SurveyReport classify(const SurveyEngine& engine, const JointStateSpec& spec,
                      const FieldSpec& field, const std::vector<double>& grid,
                      double quantum, const std::vector<OrderingPermutation>& orderings,
                      SurveyMode mode, std::uint64_t sample_size, std::uint64_t rng_seed) {
  struct CosetInfo {
    std::uint64_t count = 0;
    std::size_t first_ordering = 0;
  };
  std::unordered_map<Words, std::size_t, WordsHash> coset_ids;
  std::vector<Words> coset_svs;
  std::vector<CosetInfo> cosets;
  for (std::size_t idx = 0; idx < orderings.size(); ++idx) {
    Words sv = engine.canonical_sign_vector(orderings[idx]);
    auto [it, inserted] = coset_ids.try_emplace(sv, coset_svs.size());
    if (inserted) {
      coset_svs.push_back(std::move(sv));
      cosets.push_back(CosetInfo{1, idx});
    } else {
      ++cosets[it->second].count;
    }
  }

  std::vector<NegativityCurve> curves(cosets.size());
  parallel_for(cosets.size(),
               [&](std::size_t i) { curves[i] = engine.evaluate(coset_svs[i], grid); });

  struct ClassAccum {
    std::uint64_t population = 0;
    std::size_t first_coset = 0;
  };
  std::map<CurveFingerprint, ClassAccum> by_fingerprint;
  std::vector<CurveFingerprint> coset_fingerprint(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    coset_fingerprint[i] = fingerprint_curve(curves[i], quantum);
    auto [it, inserted] = by_fingerprint.try_emplace(coset_fingerprint[i], ClassAccum{0, i});
    it->second.population += cosets[i].count;
  }

  // Physical flag: locate the region-separated ordering's fingerprint. For
  // full surveys it was enumerated; Monte Carlo probes it separately.
  const OrderingPermutation probe = region_separated_ordering(field);
  Words probe_sv = engine.canonical_sign_vector(probe);
  CurveFingerprint probe_fp;
  if (auto it = coset_ids.find(probe_sv); it != coset_ids.end()) {
    probe_fp = coset_fingerprint[it->second];
  } else {
    probe_fp = fingerprint_curve(engine.evaluate(probe_sv, grid), quantum);
  }

  SurveyReport report{field, spec, grid, quantum, mode, {}, sample_size, rng_seed};
  report.classes.reserve(by_fingerprint.size());
  for (const auto& [fp, accum] : by_fingerprint) {
    BehaviorClass cls;
    cls.fingerprint = fp;
    cls.curve = curves[accum.first_coset];
    cls.representative = orderings[cosets[accum.first_coset].first_ordering];
    cls.population = accum.population;
    cls.contains_physical = (fp == probe_fp);
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const BehaviorClass& a, const BehaviorClass& b) {
              if (a.population != b.population) return a.population > b.population;
              return a.fingerprint < b.fingerprint;
            });
  return report;
}

std::vector<OrderingPermutation> sample_orderings(const FieldSpec& field,
                                                  std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Bounded draw by masked rejection: portable and unbiased, unlike
  // std::uniform_int_distribution whose mapping is implementation-defined.
  auto bounded = [&rng](std::uint64_t k) {
    std::uint64_t mask = k - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      const std::uint64_t v = rng() & mask;
      if (v < k) return v;
    }
  };

  const int m = field.rindler_mode_count();
  std::vector<OrderingPermutation> orderings(samples, OrderingPermutation::identity(field));
  for (auto& ordering : orderings) {
    for (int i = m - 1; i >= 1; --i) {  // Fisher–Yates
      const auto j = static_cast<std::size_t>(bounded(static_cast<std::uint64_t>(i) + 1));
      std::swap(ordering.perm[static_cast<std::size_t>(i)], ordering.perm[j]);
    }
  }
  return orderings;
}

}  // namespace

OrderingPermutation OrderingPermutation::identity(const FieldSpec& field) {
  OrderingPermutation p;
  p.perm.resize(static_cast<std::size_t>(field.rindler_mode_count()));
  for (std::size_t i = 0; i < p.perm.size(); ++i) p.perm[i] = static_cast<std::uint8_t>(i);
  return p;
}

ModeOrdering OrderingPermutation::to_mode_ordering(const FieldSpec& field) const {
  std::vector<ModeId> modes;
  modes.reserve(perm.size() + 1);
  modes.push_back(ModeId::alice());
  for (std::uint8_t idx : perm) modes.push_back(field.rindler_mode(idx));
  return ModeOrdering(std::move(modes));
}

std::vector<OrderingPermutation> enumerate_orderings(const FieldSpec& field) {
  const int m = field.rindler_mode_count();
  if (m > kMaxEnumerableModes) {
    throw enumeration_refused(
        "enumerate_orderings: " + std::to_string(m) +
        " modes have too many orderings to enumerate; use survey_monte_carlo");
  }
  std::uint64_t count = 1;
  for (int i = 2; i <= m; ++i) count *= static_cast<std::uint64_t>(i);

  std::vector<OrderingPermutation> all;
  all.reserve(count);
  OrderingPermutation p = OrderingPermutation::identity(field);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.perm.begin(), p.perm.end()));
  return all;
}

CurveFingerprint fingerprint_curve(const NegativityCurve& curve, double quantum) {
  if (!(quantum > 0.0)) throw std::domain_error("fingerprint_curve: quantum must be positive");
  CurveFingerprint fp;
  fp.quantized.reserve(curve.values.size());
  for (double v : curve.values) fp.quantized.push_back(std::llround(v / quantum));
  return fp;
}

SurveyReport survey_full(const JointStateSpec& spec, const FieldSpec& field,
                         const std::vector<double>& grid, double quantum) {
  const std::vector<OrderingPermutation> orderings = enumerate_orderings(field);
  const SurveyEngine engine(spec, field, grid);
  return classify(engine, spec, field, grid, quantum, orderings, SurveyMode::full, 0, 0);
}

SurveyReport survey_monte_carlo(const JointStateSpec& spec, const FieldSpec& field,
                                const std::vector<double>& grid, double quantum,
                                std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("survey_monte_carlo: need at least one sample");
  const std::vector<OrderingPermutation> orderings = sample_orderings(field, samples, seed);
  const SurveyEngine engine(spec, field, grid);
  return classify(engine, spec, field, grid, quantum, orderings, SurveyMode::monte_carlo,
                  samples, seed);
}

OrderingPermutation region_separated_ordering(const FieldSpec& field) {
  const int n = field.chain_length();
  OrderingPermutation p;
  p.perm.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < n; ++i) p.perm.push_back(static_cast<std::uint8_t>(i));          // c_I
  for (int i = 2 * n; i < 3 * n; ++i) p.perm.push_back(static_cast<std::uint8_t>(i));  // d_I
  for (int i = n; i < 2 * n; ++i) p.perm.push_back(static_cast<std::uint8_t>(i));      // d_II
  for (int i = 3 * n; i < 4 * n; ++i) p.perm.push_back(static_cast<std::uint8_t>(i));  // c_II
  return p;
}

bool is_region_separated(const OrderingPermutation& ordering, const FieldSpec& field) {
  const int n = field.chain_length();
  bool seen_wedge_II = false;
  for (std::uint8_t idx : ordering.perm) {
    const int group = idx / n;
    const bool wedge_I = (group == 0) || (group == 2);
    if (!wedge_I) {
      seen_wedge_II = true;
    } else if (seen_wedge_II) {
      return false;
    }
  }
  return true;
}

const BehaviorClass& physical_class(const SurveyReport& report, const FieldSpec& field) {
  if (report.field != field) {
    throw std::domain_error("physical_class: report was built for a different field");
  }
  for (const BehaviorClass& cls : report.classes) {
    if (cls.contains_physical) return cls;
  }
  throw std::domain_error(
      "physical_class: no surveyed class contains a region-separated ordering");
}

}  // namespace fermiwedge
