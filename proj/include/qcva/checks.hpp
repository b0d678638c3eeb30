#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcva/fock.hpp"
#include "qcva/module_spec.hpp"
#include "qcva/sparse.hpp"

namespace qcva {

struct Counterexample {
  ModuleState input;
  ModuleState defect;
  nlohmann::json config;
};

/// Outcome of an exhaustive identity sweep. Defects are exact rational
/// vectors; `defect_zero` means every one of them vanished identically.
struct CheckReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  std::size_t states_checked = 0;
  std::size_t configs_checked = 0;
  std::size_t configs_skipped = 0;  // configurations with an inexact L(-1)
  bool truncated = false;           // some L(-1) tail was cut at tr.j_max
  bool defect_zero = true;
  Rational max_abs_defect{0};
  std::optional<Counterexample> counterexample;

  /// Records the defect of one state; keeps the first nonzero one.
  void record(const ModuleKey& input, const ModuleState& defect, const nlohmann::json& config);
  /// Folds `other` into this report; counterexamples from earlier reports win.
  void merge(const CheckReport& other);
};

// Configurations that need an inexact L(-1) are skipped and counted, unless
// `allow_truncated` is set: then the tail is cut at tr.j_max and the report
// is flagged `truncated`.

/// [L(n), a(k)] = -k a(n+k) for a = u^(i) t^j, on every basis state within tr.
CheckReport check_l_mode_commutator(long n, const GenIndex& gen, long k, const ModuleSpec& spec,
                                    const Truncation& tr, bool allow_truncated = false);

/// [L(m), L(n)] = (m-n) L(m+n) on every basis state within tr. Requires
/// m + n >= -1 or m == n.
CheckReport check_virasoro(long m, long n, const ModuleSpec& spec, const Truncation& tr,
                           bool allow_truncated = false);

/// [L(n), A_k] = sum_{m=-1}^{n} C(n+1, m+1) (L(m)A)_{k+n-m} on every basis state within tr.
CheckReport check_field_commutator(long n, const FockState& a, long k, const ModuleSpec& spec,
                                   const Truncation& tr, bool allow_truncated = false);

/// L(0) acts as (weight above top) + top-space L(0); L(j), -1 <= j <= 3, preserves N-weight.
CheckReport check_l0_grading(const ModuleSpec& spec, const Truncation& tr);

/// L(-1) = D on every basis state of M(l) within tr.
CheckReport check_d_equals_lminus1(const ModuleSpec& algebra, const Truncation& tr);

}  // namespace qcva
