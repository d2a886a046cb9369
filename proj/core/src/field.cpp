#include "fermiwedge/field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fermiwedge {

namespace {
constexpr double kPiOver4 = std::numbers::pi / 4.0;
constexpr std::string_view kDagger = "†";
constexpr std::string_view kUpArrow = "↑";
constexpr std::string_view kDownArrow = "↓";
}  // namespace

FieldSpec FieldSpec::grassmann() { return FieldSpec(FieldKind::grassmann, 0, 1); }

FieldSpec FieldSpec::dirac() { return spin(1); }

FieldSpec FieldSpec::spin(int twice_s) {
  if (twice_s < 1 || twice_s % 2 == 0) {
    throw std::domain_error("FieldSpec::spin: fermionic spin requires positive odd 2s");
  }
  return FieldSpec(FieldKind::spin, twice_s, twice_s + 1);
}

std::vector<int> FieldSpec::twice_sz_values() const {
  if (kind_ == FieldKind::grassmann) return {0};
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(chain_length_));
  for (int v = twice_s_; v >= -twice_s_; v -= 2) values.push_back(v);
  return values;
}

int FieldSpec::spin_index(int twice_sz) const {
  if (kind_ == FieldKind::grassmann) {
    if (twice_sz != 0) throw std::domain_error("FieldSpec: Grassmann field has no spin");
    return 0;
  }
  if (twice_sz > twice_s_ || twice_sz < -twice_s_ || (twice_s_ - twice_sz) % 2 != 0) {
    throw std::domain_error("FieldSpec: spin-z outside the field's range");
  }
  return (twice_s_ - twice_sz) / 2;
}

ModeId FieldSpec::rindler_mode(int index) const {
  const int n = chain_length_;
  if (index < 0 || index >= 4 * n) {
    throw std::domain_error("FieldSpec::rindler_mode: index out of range");
  }
  const int group = index / n;
  const int twice_sz = twice_sz_values()[static_cast<std::size_t>(index % n)];
  switch (group) {
    case 0: return ModeId{Species::particle, Region::wedge_I, twice_sz};
    case 1: return ModeId{Species::antiparticle, Region::wedge_II, twice_sz};
    case 2: return ModeId{Species::antiparticle, Region::wedge_I, twice_sz};
    default: return ModeId{Species::particle, Region::wedge_II, twice_sz};
  }
}

ModeOrdering FieldSpec::sector_ordering(UnruhSector sector) const {
  if (sector == UnruhSector::none) {
    throw std::domain_error("FieldSpec::sector_ordering: sector must be right or left");
  }
  const int n = chain_length_;
  std::vector<ModeId> modes;
  modes.reserve(static_cast<std::size_t>(2 * n));
  const int base = (sector == UnruhSector::right) ? 0 : 2 * n;
  for (int i = 0; i < 2 * n; ++i) modes.push_back(rindler_mode(base + i));
  return ModeOrdering(std::move(modes));
}

ModeOrdering FieldSpec::rindler_ordering() const {
  std::vector<ModeId> modes;
  modes.reserve(static_cast<std::size_t>(4 * chain_length_));
  for (int i = 0; i < 4 * chain_length_; ++i) modes.push_back(rindler_mode(i));
  return ModeOrdering(std::move(modes));
}

ModeOrdering FieldSpec::joint_ordering() const {
  std::vector<ModeId> modes;
  modes.reserve(static_cast<std::size_t>(4 * chain_length_ + 1));
  modes.push_back(ModeId::alice());
  for (int i = 0; i < 4 * chain_length_; ++i) modes.push_back(rindler_mode(i));
  return ModeOrdering(std::move(modes));
}

std::string mode_label(const ModeId& mode, const FieldSpec& field) {
  if (mode.is_alice()) return "A";
  std::string out;
  out += (mode.species == Species::particle) ? 'c' : 'd';
  out += kDagger;
  if (field.kind() == FieldKind::spin) {
    if (field.twice_s() == 1) {
      out += (mode.twice_sz > 0) ? kUpArrow : kDownArrow;
    } else {
      out += (mode.twice_sz >= 0) ? '+' : '-';
      out += std::to_string(std::abs(mode.twice_sz));
      out += "/2";
    }
  }
  out += (mode.region == Region::wedge_I) ? "I" : "II";
  return out;
}

ModeId parse_mode_label(std::string_view text, const FieldSpec& field) {
  if (text == "A" || text == "a") return ModeId::alice();
  if (text.empty()) throw std::domain_error("parse_mode_label: empty label");

  Species species;
  if (text.front() == 'c') {
    species = Species::particle;
  } else if (text.front() == 'd') {
    species = Species::antiparticle;
  } else {
    throw std::domain_error("parse_mode_label: expected species 'c' or 'd'");
  }
  text.remove_prefix(1);
  if (text.starts_with(kDagger)) text.remove_prefix(kDagger.size());

  Region region;
  if (text.ends_with("II")) {
    region = Region::wedge_II;
    text.remove_suffix(2);
  } else if (text.ends_with("I")) {
    region = Region::wedge_I;
    text.remove_suffix(1);
  } else {
    throw std::domain_error("parse_mode_label: expected region suffix I or II");
  }

  int twice_sz = 0;
  if (field.kind() == FieldKind::grassmann) {
    if (!text.empty()) throw std::domain_error("parse_mode_label: Grassmann modes carry no spin");
  } else if (text == kUpArrow || text == "u") {
    twice_sz = 1;
  } else if (text == kDownArrow || text == "d") {
    twice_sz = -1;
  } else {
    bool negative = false;
    if (text.starts_with('+')) {
      text.remove_prefix(1);
    } else if (text.starts_with('-')) {
      negative = true;
      text.remove_prefix(1);
    }
    if (!text.ends_with("/2") || text.size() <= 2) {
      throw std::domain_error("parse_mode_label: expected spin token like ↑, ↓ or +3/2");
    }
    text.remove_suffix(2);
    int numerator = 0;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::domain_error("parse_mode_label: bad spin numerator");
      numerator = numerator * 10 + (ch - '0');
    }
    twice_sz = negative ? -numerator : numerator;
  }
  ModeId mode{species, region, twice_sz};
  field.spin_index(twice_sz);  // validates the projection for this field
  return mode;
}

SqueezeParameter::SqueezeParameter(double r) {
  if (!std::isfinite(r)) throw std::domain_error("SqueezeParameter: r must be finite");
  r_ = std::clamp(r, 0.0, kPiOver4);
}

double SqueezeParameter::cos() const { return std::cos(r_); }
double SqueezeParameter::sin() const { return std::sin(r_); }
double SqueezeParameter::tan() const { return std::tan(r_); }

SqueezeParameter acceleration_to_squeeze(double omega, double a, double c) {
  if (!(omega > 0.0) || !(a > 0.0) || !(c > 0.0)) {
    throw std::domain_error("acceleration_to_squeeze: omega, a, c must be positive");
  }
  return SqueezeParameter(std::atan(std::exp(-std::numbers::pi * omega * c / a)));
}

UnruhWeights::UnruhWeights(Amplitude qr, Amplitude ql) : q_R(qr), q_L(ql) {
  const double total = std::norm(q_R) + std::norm(q_L);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::domain_error("UnruhWeights: |q_R|² + |q_L|² must equal 1");
  }
}

UnruhWeights UnruhWeights::from_qr(double qr) {
  if (std::abs(qr) > 1.0 + 1e-12) {
    throw std::domain_error("UnruhWeights: |q_R| must not exceed 1");
  }
  const double rest = std::max(0.0, 1.0 - qr * qr);
  return UnruhWeights{{qr, 0.0}, {std::sqrt(rest), 0.0}};
}

BinaryChain::BinaryChain(std::uint32_t index, int length) : index_(index), length_(length) {
  if (length < 1 || length > 20) throw std::domain_error("BinaryChain: bad length");
  if (length < 32 && (index >> length) != 0) {
    throw std::domain_error("BinaryChain: index exceeds chain length");
  }
}

BinaryChain BinaryChain::from_string(std::string_view digits) {
  std::uint32_t index = 0;
  int length = 0;
  for (char ch : digits) {
    if (ch != '0' && ch != '1') throw std::domain_error("BinaryChain: digits must be 0/1");
    if (ch == '1') index |= std::uint32_t{1} << length;
    ++length;
  }
  return BinaryChain(index, length);
}

int BinaryChain::digit(int position) const {
  if (position < 1 || position > length_) throw std::domain_error("BinaryChain: bad position");
  return static_cast<int>((index_ >> (position - 1)) & 1u);
}

std::string BinaryChain::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int p = 1; p <= length_; ++p) out += static_cast<char>('0' + digit(p));
  return out;
}

ChainStats chain_stats(const BinaryChain& alpha) {
  const int n = alpha.length();
  ChainStats stats{0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0),
                   BinaryChain(0, n)};
  std::uint32_t reversed_index = 0;
  for (int p = 1; p <= n; ++p) {
    stats.chi_before[static_cast<std::size_t>(p)] = stats.chi;
    const int d = alpha.digit(p);
    stats.chi += d;
    if (d) reversed_index |= std::uint32_t{1} << (n - p);
  }
  stats.reversed = BinaryChain(reversed_index, n);
  return stats;
}

VacuumCoefficients::VacuumCoefficients(const FieldSpec& field, const SqueezeParameter& r)
    : chain_length_(field.chain_length()) {
  const std::uint32_t count = std::uint32_t{1} << chain_length_;
  weights_.resize(count);
  const double t = r.tan();
  for (std::uint32_t v = 0; v < count; ++v) {
    weights_[v] = std::pow(t, std::popcount(v));
  }
}

double VacuumCoefficients::x(const BinaryChain& alpha) const {
  if (alpha.length() != chain_length_) {
    throw std::domain_error("VacuumCoefficients: chain length mismatch");
  }
  return weights_.at(alpha.index());
}

}  // namespace fermiwedge
