#pragma once

#include <cstddef>
#include <vector>

#include "qcva/rat_matrix.hpp"
#include "qcva/rational.hpp"

namespace qcva {

enum class ModuleKind { Adjoint, Evaluation };

/// Which module an operator acts on: M(l) itself, or M(l) tensored with a
/// finite-dimensional evaluation top space on which u^(i) t^j acts as c^j H_i.
///
/// Invariants, checked by the factories: l != 0, the H_i commute pairwise,
/// and each H_i - lambda_i I is nilpotent. Adjoint has r = 1, H = 0, c = 0.
class ModuleSpec {
 public:
  static ModuleSpec adjoint(int d, const Rational& level);
  /// W(lambda, c, l): one-dimensional top space, H_i = lambda_i.
  static ModuleSpec evaluation(const Rational& level, const Rational& c, const RatVector& lambda);
  /// G(Omega, c, l) with an arbitrary finite-dimensional top space.
  static ModuleSpec generalized(const Rational& level, const Rational& c, const RatVector& lambda,
                                std::vector<RatMatrix> h);

  ModuleKind kind() const { return kind_; }
  int d() const { return d_; }
  const Rational& level() const { return level_; }
  const Rational& c() const { return c_; }
  std::size_t top_dim() const { return r_; }
  const RatVector& lambda() const { return lambda_; }
  /// H_i for 1-based color i.
  const RatMatrix& h(int color) const { return h_.at(static_cast<std::size_t>(color - 1)); }
  const std::vector<RatMatrix>& hs() const { return h_; }

  /// True when some H_i is nonzero, i.e. zero modes act nontrivially.
  bool has_zero_modes() const { return has_zero_modes_; }
  /// Matrix of the zero mode (u^(i) t^j)(0) on the top space: c^j H_i.
  RatMatrix zero_mode(int color, int tpow) const;

  /// The adjoint module with the same d and level; L(m)A for A in M(l) lives there.
  ModuleSpec algebra() const { return adjoint(d_, level_); }

 private:
  ModuleSpec() = default;
  void validate() const;

  ModuleKind kind_ = ModuleKind::Adjoint;
  int d_ = 1;
  Rational level_{1};
  Rational c_{0};
  std::size_t r_ = 1;
  RatVector lambda_;
  std::vector<RatMatrix> h_;
  bool has_zero_modes_ = false;
};

}  // namespace qcva
