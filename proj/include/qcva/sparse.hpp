#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "qcva/monomial.hpp"
#include "qcva/rational.hpp"

namespace qcva {

/// Finite rational linear combination of keys. Zero coefficients are never stored.
template <typename Key>
class SparseVector {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  SparseVector() = default;
  SparseVector(const Key& k, const Rational& c) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += s * other
  void axpy(const Rational& s, const SparseVector& other) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, s * c);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  /// Largest absolute coefficient (0 for the zero vector).
  Rational max_abs() const {
    Rational m(0);
    for (const auto& [k, c] : terms_)
      if (c.abs() > m) m = c.abs();
    return m;
  }

  SparseVector& operator+=(const SparseVector& o) { axpy(Rational(1), o); return *this; }
  SparseVector& operator-=(const SparseVector& o) { axpy(Rational(-1), o); return *this; }
  SparseVector& operator*=(const Rational& s) {
    if (s.is_zero()) terms_.clear();
    else
      for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& s, SparseVector a) { return a *= s; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map terms_;
};

/// Element of M(l).
using FockState = SparseVector<Monomial>;

/// Basis vector of an induced module: a monomial acting on top-space basis vector `top`.
struct ModuleKey {
  Monomial mono;
  std::size_t top = 0;
  friend auto operator<=>(const ModuleKey&, const ModuleKey&) = default;
};

/// Element of W(lambda, c, l), G(Omega, c, l), or M(l) itself (top always 0).
using ModuleState = SparseVector<ModuleKey>;

inline FockState vacuum_state() { return FockState(Monomial{}, Rational(1)); }

inline ModuleState as_module_state(const FockState& v) {
  ModuleState w;
  for (const auto& [m, c] : v) w.add({m, 0}, c);
  return w;
}

/// Drops the top index; throws if any term sits above a top vector other than 0.
inline FockState as_fock_state(const ModuleState& w) {
  FockState v;
  for (const auto& [k, c] : w) {
    if (k.top != 0) throw std::invalid_argument("state is not an element of M(l)");
    v.add(k.mono, c);
  }
  return v;
}

}  // namespace qcva
