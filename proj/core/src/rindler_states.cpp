#include "fermiwedge/rindler_states.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <utility>

namespace fermiwedge {

namespace {

// Uniform double in [-1, 1) from the top 53 bits of a 64-bit draw; avoids
// std::uniform_real_distribution, whose output is implementation-defined.
double signed_unit(std::uint64_t word) {
  return 2.0 * ((word >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

SparseState build_sector_vacuum(const FieldSpec& field, const SqueezeParameter& r,
                                UnruhSector sector) {
  const int n = field.chain_length();
  const double c = r.cos();
  const double s = r.sin();
  const bool left = (sector == UnruhSector::left);
  ModeOrdering ordering = field.sector_ordering(sector);

  std::vector<Term> terms;
  terms.reserve(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
    const int chi = std::popcount(v);
    double amp = std::pow(c, n - chi) * std::pow(s, chi);
    if (left && (chi & 1)) amp = -amp;
    // Key layout |α R(α)⟩: position j carries digit j+1 of α; position n+j
    // carries digit j+1 of the reversal, i.e. digit n−j of α.
    OccupationKey key = 0;
    for (int j = 0; j < n; ++j) {
      if ((v >> j) & 1u) key |= OccupationKey{1} << j;
      if ((v >> (n - 1 - j)) & 1u) key |= OccupationKey{1} << (n + j);
    }
    terms.push_back(Term{key, Amplitude{amp, 0.0}});
  }
  return SparseState(std::move(ordering), std::move(terms));
}

SparseState build_unruh_vacuum(const FieldSpec& field, const SqueezeParameter& r) {
  return tensor_product(build_sector_vacuum(field, r, UnruhSector::right),
                        build_sector_vacuum(field, r, UnruhSector::left));
}

namespace {

struct SectorModes {
  ModeId particle;      // c_{σ, home wedge of the sector}
  ModeId antiparticle;  // d_{−σ, opposite wedge}
};

SectorModes sector_modes(const FieldSpec& field, int twice_sz, UnruhSector sector) {
  field.spin_index(twice_sz);  // validates σ (and −σ by symmetry of the range)
  if (sector == UnruhSector::right) {
    return {ModeId{Species::particle, Region::wedge_I, twice_sz},
            ModeId{Species::antiparticle, Region::wedge_II, -twice_sz}};
  }
  if (sector == UnruhSector::left) {
    return {ModeId{Species::particle, Region::wedge_II, twice_sz},
            ModeId{Species::antiparticle, Region::wedge_I, -twice_sz}};
  }
  throw std::domain_error("Unruh ladder: sector must be right or left");
}

}  // namespace

SparseState apply_unruh_sector_creation(const FieldSpec& field, int twice_sz,
                                        UnruhSector sector, const SqueezeParameter& r,
                                        const SparseState& psi) {
  const SectorModes m = sector_modes(field, twice_sz, sector);
  return apply_creation(m.particle, psi).scaled({r.cos(), 0.0}) +
         apply_annihilation(m.antiparticle, psi).scaled({-r.sin(), 0.0});
}

SparseState apply_unruh_sector_annihilation(const FieldSpec& field, int twice_sz,
                                            UnruhSector sector, const SqueezeParameter& r,
                                            const SparseState& psi) {
  const SectorModes m = sector_modes(field, twice_sz, sector);
  return apply_annihilation(m.particle, psi).scaled({r.cos(), 0.0}) +
         apply_creation(m.antiparticle, psi).scaled({-r.sin(), 0.0});
}

SparseState apply_unruh_creation(const FieldSpec& field, int twice_sz,
                                 const UnruhWeights& w, const SqueezeParameter& r,
                                 const SparseState& psi) {
  return apply_unruh_sector_creation(field, twice_sz, UnruhSector::right, r, psi)
             .scaled(w.q_R) +
         apply_unruh_sector_creation(field, twice_sz, UnruhSector::left, r, psi)
             .scaled(w.q_L);
}

JointStateSpec::JointStateSpec(Amplitude p, Amplitude q, BranchPolynomial a,
                               BranchPolynomial b, UnruhWeights w)
    : P(p), Q(q), branch_A(std::move(a)), branch_B(std::move(b)), weights(w) {
  if (std::abs(std::norm(P) + std::norm(Q) - 1.0) > 1e-12) {
    throw std::domain_error("JointStateSpec: |P|² + |Q|² must equal 1");
  }
}

SparseState apply_branch(const BranchPolynomial& branch, const FieldSpec& field,
                         const UnruhWeights& w, const SqueezeParameter& r,
                         const SparseState& psi) {
  SparseState total(psi.ordering());
  for (const UnruhMonomial& monomial : branch.monomials) {
    SparseState term = psi;
    // Rightmost factor acts first.
    for (auto it = monomial.twice_sz_factors.rbegin(); it != monomial.twice_sz_factors.rend();
         ++it) {
      term = apply_unruh_creation(field, *it, w, r, term);
    }
    total = total + term.scaled(monomial.coefficient);
  }
  return total;
}

SparseState build_joint_state(const JointStateSpec& spec, const FieldSpec& field,
                              const SqueezeParameter& r) {
  const SparseState vacuum = build_unruh_vacuum(field, r);
  SparseState branch_a = apply_branch(spec.branch_A, field, spec.weights, r, vacuum);
  SparseState branch_b = apply_branch(spec.branch_B, field, spec.weights, r, vacuum);
  if (branch_a.is_zero()) throw degenerate_spec_error("build_joint_state: branch A annihilates the vacuum");
  if (branch_b.is_zero()) throw degenerate_spec_error("build_joint_state: branch B annihilates the vacuum");
  branch_a = branch_a.normalized();
  branch_b = branch_b.normalized();

  // Prepend Alice at position 0. |1⟩_A ⊗ ψ = a†_A |0⟩_A ⊗ ψ picks up no sign:
  // Alice's creator stands leftmost with no occupied positions to its left.
  std::vector<Term> terms;
  terms.reserve(branch_a.terms().size() + branch_b.terms().size());
  for (const Term& t : branch_a.terms()) {
    terms.push_back(Term{t.key << 1, spec.P * t.amp});
  }
  for (const Term& t : branch_b.terms()) {
    terms.push_back(Term{(t.key << 1) | 1u, spec.Q * t.amp});
  }
  return SparseState(field.joint_ordering(), std::move(terms));
}

JointStateSpec vacuum_excitation_spec(const UnruhWeights& w) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return JointStateSpec({inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}, BranchPolynomial::identity(),
                        BranchPolynomial::creator(0), w);
}

JointStateSpec singlet_analogue_spec(const FieldSpec& field, const UnruhWeights& w) {
  if (field.kind() != FieldKind::spin) {
    throw std::domain_error("singlet_analogue_spec: requires a spin field");
  }
  BranchPolynomial up, down;
  for (int sz : field.twice_sz_values()) {
    if (sz > 0) up.monomials.push_back(UnruhMonomial{{sz}, {1.0, 0.0}});
    if (sz < 0) down.monomials.push_back(UnruhMonomial{{sz}, {1.0, 0.0}});
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return JointStateSpec({inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}, std::move(up), std::move(down), w);
}

namespace {

JointStateSpec generic_dirac_spec(const UnruhWeights& w, std::uint64_t seed, bool with_pair) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    const double re = signed_unit(rng());
    const double im = signed_unit(rng());
    return Amplitude{re, im};
  };
  // Monomial basis per branch: 1, C†_↑, C†_↓, C†_↑ C†_↓.
  auto draw_branch = [&]() {
    BranchPolynomial branch;
    branch.monomials.push_back(UnruhMonomial{{}, draw()});
    branch.monomials.push_back(UnruhMonomial{{+1}, draw()});
    branch.monomials.push_back(UnruhMonomial{{-1}, draw()});
    if (with_pair) branch.monomials.push_back(UnruhMonomial{{+1, -1}, draw()});
    return branch;
  };
  BranchPolynomial a = draw_branch();
  BranchPolynomial b = draw_branch();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return JointStateSpec({inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}, std::move(a), std::move(b), w);
}

}  // namespace

JointStateSpec no_pair_generic_spec(const UnruhWeights& w, std::uint64_t seed) {
  return generic_dirac_spec(w, seed, /*with_pair=*/false);
}

JointStateSpec fully_generic_spec(const UnruhWeights& w, std::uint64_t seed) {
  return generic_dirac_spec(w, seed, /*with_pair=*/true);
}

}  // namespace fermiwedge
