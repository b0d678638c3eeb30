#pragma once

#include <vector>

#include "qcva/fock.hpp"
#include "qcva/module_spec.hpp"
#include "qcva/rat_matrix.hpp"
#include "qcva/sparse.hpp"

namespace qcva {

/// Coefficient of z^{-k-1} in Y_W(v, z) w.
///
/// Each monomial factor x_{ijn} of v contributes the field
/// (1/(n-1)!) (d/dz)^{n-1} a_{ij}(z) = sum_m C(-m-1, n-1) a_{ij}(m) z^{-m-n};
/// the product is normal ordered with creation modes left of annihilation
/// modes, and zero modes (central here) applied first. Only finitely many
/// mode tuples act nontrivially on a given w, so the result is exact.
ModuleState vertex_mode(const FockState& v, long k, const ModuleState& w, const ModuleSpec& spec);

struct LResult {
  ModuleState state;
  bool exact = true;
};

/// Whether L(n) on `spec` is an exact finite computation. The only inexact
/// case is n = -1 on a module with c != 0 and a nonzero H, where the
/// creation/zero-mode tail sum_j c^j H_i x_{i,j,1} is infinite.
bool l_is_exact(long n, const ModuleSpec& spec);

/// L(n) w for n >= -1. Inexact tails are cut at j <= tr.j_max and reported
/// through `exact`. Throws std::invalid_argument for n < -1, and
/// std::domain_error for n = 0 when c^2 = 1 and zero modes are nontrivial.
LResult l_apply(long n, const ModuleState& w, const ModuleSpec& spec, const Truncation& tr);

/// Convenience for the vertex algebra itself, where L(n) is always exact.
FockState l_apply(long n, const FockState& v, const ModuleSpec& algebra);

/// Matrix of L(0) on the top space: (1 / (2l(1 - c^2))) sum_i H_i^2.
RatMatrix l0_top_matrix(const ModuleSpec& spec);

/// The derivation x_{ijn} -> n x_{i,j,n+1}, the D-operator of M(l).
FockState d_apply(const FockState& v);

/// Matrix of the contragredient mode u_n on the truncated graded dual.
///
/// Rows and columns are indexed by the dual basis of `basis`; entry
/// (b, b') = <u_n b'^*, b> = <b'^*, u_n^* b>, where
/// u_n^* = (-1)^h sum_k (1/k!) (L(1)^k v)_{2h-k-n-2} for v of weight h.
struct AdjointModeMatrix {
  std::vector<ModuleKey> basis;
  RatMatrix matrix;
};

/// Throws std::invalid_argument if v is not doubly homogeneous, or if the
/// top-space L(0) eigenvalue of `spec` is not an integer.
AdjointModeMatrix adjoint_mode_matrix(const FockState& v, long n, const ModuleSpec& spec, const Truncation& tr);

}  // namespace qcva
