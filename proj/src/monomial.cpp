#include "qcva/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcva {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (f.mode < 1 || f.color < 1 || f.tpow < 0)
      throw std::invalid_argument("monomial factor needs color >= 1, tpow >= 0, mode >= 1");
  std::sort(factors_.begin(), factors_.end());
}

long Monomial::weight() const {
  long s = 0;
  for (const auto& f : factors_) s += f.mode;
  return s;
}

long Monomial::nweight() const {
  long s = 0;
  for (const auto& f : factors_) s += f.tpow;
  return s;
}

std::size_t Monomial::multiplicity(const Factor& f) const {
  auto [lo, hi] = std::equal_range(factors_.begin(), factors_.end(), f);
  return static_cast<std::size_t>(hi - lo);
}

Monomial Monomial::times(const Factor& f) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  auto pos = std::upper_bound(factors_.begin(), factors_.end(), f);
  out.factors_.insert(out.factors_.end(), factors_.begin(), pos);
  out.factors_.push_back(f);
  out.factors_.insert(out.factors_.end(), pos, factors_.end());
  return out;
}

Monomial Monomial::without_one(const Factor& f) const {
  Monomial out = *this;
  auto pos = std::lower_bound(out.factors_.begin(), out.factors_.end(), f);
  if (pos == out.factors_.end() || *pos != f) throw std::logic_error("factor not present in monomial");
  out.factors_.erase(pos);
  return out;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  const auto ka = std::make_pair(a.weight(), a.nweight());
  const auto kb = std::make_pair(b.weight(), b.nweight());
  if (ka != kb) return ka < kb;
  return a < b;
}

}  // namespace qcva
