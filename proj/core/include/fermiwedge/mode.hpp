#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermiwedge {

// Particle (c) vs antiparticle (d) modes.
enum class Species : std::uint8_t { particle, antiparticle };

// Spatial region the mode lives in. Alice's detector mode is its own region.
enum class Region : std::uint8_t { alice, wedge_I, wedge_II };

// Unruh-sector membership used when grouping modes: the right-sector ladder
// mixes (c, wedge I) with (d, wedge II); the left-sector ladder mixes
// (c, wedge II) with (d, wedge I). Alice belongs to neither.
enum class UnruhSector : std::uint8_t { right, left, none };

// Identity of one fermionic mode. `twice_sz` stores twice the spin-z
// projection so half-integer values stay exact (e.g. +1 means sz = +1/2).
// A spinless mode (or Alice) carries twice_sz = 0.
struct ModeId {
  Species species = Species::particle;
  Region region = Region::alice;
  int twice_sz = 0;

  friend auto operator<=>(const ModeId&, const ModeId&) = default;

  static constexpr ModeId alice() {
    return ModeId{Species::particle, Region::alice, 0};
  }

  bool is_alice() const { return region == Region::alice; }

  UnruhSector sector() const {
    if (region == Region::alice) return UnruhSector::none;
    const bool particle_like = (species == Species::particle);
    const bool in_wedge_I = (region == Region::wedge_I);
    return (particle_like == in_wedge_I) ? UnruhSector::right : UnruhSector::left;
  }
};

// An ordered list of distinct modes. The list order defines the Fock basis
// sign convention: occupation key bit k refers to position k, and creation
// operators for a key are applied left to right. If Alice's mode is present
// it must sit at position 0 (it is never permuted).
class ModeOrdering {
 public:
  ModeOrdering() = default;
  explicit ModeOrdering(std::vector<ModeId> modes);

  int size() const { return static_cast<int>(modes_.size()); }
  const std::vector<ModeId>& modes() const { return modes_; }
  const ModeId& mode_at(int position) const { return modes_.at(static_cast<std::size_t>(position)); }

  // Position of `mode`, or throws std::domain_error if absent.
  int position_of(const ModeId& mode) const;
  std::optional<int> find(const ModeId& mode) const;
  bool contains(const ModeId& mode) const { return find(mode).has_value(); }

  // True when `other` lists exactly the same modes (possibly permuted).
  bool same_mode_set(const ModeOrdering& other) const;

  bool operator==(const ModeOrdering&) const = default;

 private:
  std::vector<ModeId> modes_;
};

}  // namespace fermiwedge
