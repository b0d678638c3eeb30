#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace qcva {

/// Basis element u^(i) t^j of the current algebra h[t]; `color` is 1-based.
struct GenIndex {
  int color = 1;
  int tpow = 0;
  friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

/// The mode (u^(i) t^j)(n): creation for n < 0, annihilation for n > 0,
/// zero mode for n = 0.
struct ModeOp {
  GenIndex gen;
  long n = 0;
};

/// A polynomial variable x_{ijn}, i.e. the creation operator (u^(i) t^j)(-n), n >= 1.
struct Factor {
  int color = 1;
  int tpow = 0;
  int mode = 1;
  friend auto operator<=>(const Factor&, const Factor&) = default;
  GenIndex gen() const { return {color, tpow}; }
};

/// Commutative monomial in the x_{ijn}; factors kept sorted (lexicographic on
/// (i, j, n)) with repetition for multiplicity. The empty monomial is the vacuum.
class Monomial {
 public:
  Monomial() = default;
  /// Sorts the given factors; throws std::invalid_argument for mode < 1,
  /// color < 1 or tpow < 0.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_vacuum() const { return factors_.empty(); }
  std::size_t degree() const { return factors_.size(); }

  /// Sum of the modes n (the weight above the top space).
  long weight() const;
  /// Sum of the t-powers j (the N-weight).
  long nweight() const;

  std::size_t multiplicity(const Factor& f) const;
  Monomial times(const Factor& f) const;
  /// Removes one copy of `f`; precondition multiplicity(f) > 0.
  Monomial without_one(const Factor& f) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Canonical basis order: graded by (weight, N-weight), then lexicographic.
bool graded_less(const Monomial& a, const Monomial& b);

}  // namespace qcva
