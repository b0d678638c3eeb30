#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcva/fock.hpp"
#include "qcva/module_spec.hpp"
#include "qcva/rat_matrix.hpp"

namespace qcva {

/// Finite-dimensional h-module Omega_lambda: commuting H_i with
/// (H_i - lambda_i) nilpotent. Validated on construction.
class TopSpace {
 public:
  TopSpace(RatVector lambda, std::vector<RatMatrix> h);
  /// One Jordan block of size r per color, all with the same nilpotent part.
  static TopSpace jordan(const RatVector& lambda, std::size_t r);
  static TopSpace scalar(const RatVector& lambda) { return jordan(lambda, 1); }

  std::size_t r() const { return h_.front().rows(); }
  int d() const { return static_cast<int>(lambda_.size()); }
  const RatVector& lambda() const { return lambda_; }
  const std::vector<RatMatrix>& h() const { return h_; }

  /// The dual module: H_i -> -H_i^T, lambda -> -lambda.
  TopSpace dual() const;
  ModuleSpec induced(const Rational& level, const Rational& c) const {
    return ModuleSpec::generalized(level, c, lambda_, h_);
  }

 private:
  RatVector lambda_;
  std::vector<RatMatrix> h_;
};

/// Triple of tops (Omega(lambda_1,0), Omega(lambda_2,0), Omega(lambda_3,0)).
struct HomProblem {
  TopSpace source;
  TopSpace middle;
  TopSpace target;
};

/// Polynomial f(t) = sum coeff * t^exponent.
using PolyTerms = std::vector<std::pair<unsigned, Rational>>;

/// Action of u^(i) t^j f(t) on the top at evaluation point c: c^j f(c) H_i.
RatMatrix eval_action(const GenIndex& gen, const PolyTerms& f, const TopSpace& top, const Rational& c);

/// <lambda, lambda> / (1 - c^2); throws std::domain_error when c^2 = 1.
Rational casimir_scalar(const RatVector& lambda, const Rational& c);
/// sum_{n=0}^{J} c^{2n} <lambda, lambda>.
Rational casimir_partial(const RatVector& lambda, const Rational& c, unsigned cutoff);

struct VacuumSpace {
  std::vector<ModuleState> basis;
  std::vector<Bigrade> bigrades_scanned;
};

/// Joint kernel of every a(n), 0 < n <= tr.max_wt, t-power <= tr.max_nwt,
/// on the states within tr. Computed bigrade by bigrade since each mode
/// shifts the bigrade by a fixed amount.
VacuumSpace vacuum_space(const ModuleSpec& spec, const Truncation& tr);

struct LogCheck {
  bool genuine = false;
  Rational eigenvalue;
  std::vector<std::size_t> blocks;  // descending
};

/// Jordan structure of L(0) on the top space at its unique eigenvalue
/// <lambda,lambda>/(2l(1-c^2)). Evaluation kind only.
LogCheck is_genuine_logarithmic(const ModuleSpec& spec);

/// dim of maps T: Omega_1 -> Hom(Omega_2, Omega_3) with
/// T(H1_i u) = H3_i T(u) - T(u) H2_i for all i. Throws on mismatched d.
std::size_t intertwiner_dim(const HomProblem& p);

}  // namespace qcva
