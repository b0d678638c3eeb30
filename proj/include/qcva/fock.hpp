#pragma once

#include <optional>
#include <vector>

#include "qcva/module_spec.hpp"
#include "qcva/monomial.hpp"
#include "qcva/sparse.hpp"

namespace qcva {

/// Bounds on the states swept by identity checks. `j_max` caps the
/// otherwise infinite j-sum in L(-1) on modules with c != 0.
struct Truncation {
  int max_wt = 0;
  int max_nwt = 0;
  int j_max = 0;
};

struct Bigrade {
  long wt = 0;   // sum of modes, the weight above the top space
  long nwt = 0;  // sum of t-powers
  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

/// All monomials over d colors with N-weight `nwt` and weight `wt`, in
/// lexicographic order.
std::vector<Monomial> enumerate_basis(int d, int nwt, int wt);

/// Basis of the module inside the truncation, ordered by (wt, nwt), then
/// monomial, then top index.
std::vector<ModuleKey> basis_states(const ModuleSpec& spec, const Truncation& tr);

/// Common bigrade of all terms, or nullopt when the terms disagree
/// (NotHomogeneous). The zero state has no bigrade and also yields nullopt.
std::optional<Bigrade> grading(const FockState& s);
std::optional<Bigrade> grading(const ModuleState& s);

/// Action of one mode on a module state. Throws std::out_of_range when the
/// color exceeds spec.d().
ModuleState apply_mode(const ModeOp& op, const ModuleState& w, const ModuleSpec& spec);

}  // namespace qcva
