#include "fermiwedge/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fermiwedge {

namespace {

std::vector<Term> combine(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().amp += t.amp;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return std::abs(t.amp) <= kPruneThreshold; });
  return out;
}

}  // namespace

SparseState::SparseState(ModeOrdering ordering, std::vector<Term> terms)
    : ordering_(std::move(ordering)), terms_(combine(std::move(terms))) {
  const OccupationKey limit =
      ordering_.size() >= 32 ? ~OccupationKey{0} : ((OccupationKey{1} << ordering_.size()) - 1);
  for (const Term& t : terms_) {
    if ((t.key & ~limit) != 0) {
      throw std::domain_error("SparseState: occupation key exceeds mode count");
    }
  }
}

SparseState SparseState::basis_state(ModeOrdering ordering, OccupationKey key, Amplitude amp) {
  return SparseState(std::move(ordering), {Term{key, amp}});
}

Amplitude SparseState::amplitude(OccupationKey key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, OccupationKey k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->amp;
  return Amplitude{0.0, 0.0};
}

double SparseState::norm_squared() const {
  double s = 0.0;
  for (const Term& t : terms_) s += std::norm(t.amp);
  return s;
}

double SparseState::norm() const { return std::sqrt(norm_squared()); }

SparseState SparseState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("SparseState: cannot normalize the zero state");
  return scaled(Amplitude{1.0 / n, 0.0});
}

SparseState SparseState::scaled(Amplitude factor) const {
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.amp *= factor;
  return SparseState(ordering_, std::move(terms));
}

SparseState operator+(const SparseState& a, const SparseState& b) {
  if (a.ordering() != b.ordering()) {
    throw std::domain_error("SparseState: cannot add states over different orderings");
  }
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return SparseState(a.ordering_, std::move(terms));
}

}  // namespace fermiwedge
