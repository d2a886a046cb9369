#include "fermiwedge/mode.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermiwedge {

ModeOrdering::ModeOrdering(std::vector<ModeId> modes) : modes_(std::move(modes)) {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    for (std::size_t j = i + 1; j < modes_.size(); ++j) {
      if (modes_[i] == modes_[j]) {
        throw std::domain_error("ModeOrdering: duplicate mode");
      }
    }
    if (modes_[i].is_alice() && i != 0) {
      throw std::domain_error("ModeOrdering: Alice's mode must occupy position 0");
    }
  }
}

int ModeOrdering::position_of(const ModeId& mode) const {
  if (auto pos = find(mode)) return *pos;
  throw std::domain_error("ModeOrdering: unknown mode");
}

std::optional<int> ModeOrdering::find(const ModeId& mode) const {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i] == mode) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool ModeOrdering::same_mode_set(const ModeOrdering& other) const {
  if (modes_.size() != other.modes_.size()) return false;
  auto a = modes_;
  auto b = other.modes_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace fermiwedge
