#include "qcva/checks.hpp"

#include <stdexcept>

#include "qcva/serialize.hpp"
#include "qcva/vertex_ops.hpp"

namespace qcva {

void CheckReport::record(const ModuleKey& input, const ModuleState& defect, const nlohmann::json& config) {
  ++states_checked;
  if (defect.is_zero()) return;
  defect_zero = false;
  if (defect.max_abs() > max_abs_defect) max_abs_defect = defect.max_abs();
  if (!counterexample) counterexample = Counterexample{ModuleState(input, Rational(1)), defect, config};
}

void CheckReport::merge(const CheckReport& other) {
  states_checked += other.states_checked;
  configs_checked += other.configs_checked;
  configs_skipped += other.configs_skipped;
  truncated = truncated || other.truncated;
  defect_zero = defect_zero && other.defect_zero;
  if (other.max_abs_defect > max_abs_defect) max_abs_defect = other.max_abs_defect;
  if (!counterexample && other.counterexample) counterexample = other.counterexample;
}

namespace {

ModuleState apply_l(long n, const ModuleState& w, const ModuleSpec& spec, const Truncation& tr) {
  return l_apply(n, w, spec, tr).state;
}

// Returns false (and counts a skip) when the configuration cannot be checked.
bool admit(CheckReport& rep, bool exact, bool allow_truncated) {
  if (!exact && !allow_truncated) {
    rep.configs_skipped = 1;
    return false;
  }
  rep.truncated = !exact;
  rep.configs_checked = 1;
  return true;
}

nlohmann::json spec_brief(const ModuleSpec& spec) { return to_json(spec); }

}  // namespace

CheckReport check_l_mode_commutator(long n, const GenIndex& gen, long k, const ModuleSpec& spec,
                                    const Truncation& tr, bool allow_truncated) {
  CheckReport rep;
  rep.identity = "e1";
  rep.params = {{"n", n}, {"gen", {gen.color, gen.tpow}}, {"k", k}, {"spec", spec_brief(spec)}};
  if (!admit(rep, l_is_exact(n, spec), allow_truncated)) return rep;
  for (const auto& key : basis_states(spec, tr)) {
    const ModuleState w(key, Rational(1));
    ModuleState lhs = apply_l(n, apply_mode({gen, k}, w, spec), spec, tr);
    lhs -= apply_mode({gen, k}, apply_l(n, w, spec, tr), spec);
    ModuleState rhs = apply_mode({gen, n + k}, w, spec);
    rhs *= Rational(-k);
    rep.record(key, lhs - rhs, rep.params);
  }
  return rep;
}

CheckReport check_virasoro(long m, long n, const ModuleSpec& spec, const Truncation& tr, bool allow_truncated) {
  if (m + n < -1 && m != n) throw std::invalid_argument("L(m+n) undefined for m + n < -1");
  CheckReport rep;
  rep.identity = "virasoro";
  rep.params = {{"m", m}, {"n", n}, {"spec", spec_brief(spec)}};
  const bool exact = l_is_exact(m, spec) && l_is_exact(n, spec) && (m == n || l_is_exact(m + n, spec));
  if (!admit(rep, exact, allow_truncated)) return rep;
  for (const auto& key : basis_states(spec, tr)) {
    const ModuleState w(key, Rational(1));
    ModuleState defect = apply_l(m, apply_l(n, w, spec, tr), spec, tr);
    defect -= apply_l(n, apply_l(m, w, spec, tr), spec, tr);
    if (m != n) defect.axpy(Rational(n - m), apply_l(m + n, w, spec, tr));
    rep.record(key, defect, rep.params);
  }
  return rep;
}

CheckReport check_field_commutator(long n, const FockState& a, long k, const ModuleSpec& spec,
                                   const Truncation& tr, bool allow_truncated) {
  CheckReport rep;
  rep.identity = "field-commutator";
  rep.params = {{"n", n}, {"A", to_json(a)}, {"k", k}, {"spec", spec_brief(spec)}};
  if (!admit(rep, l_is_exact(n, spec), allow_truncated)) return rep;
  const ModuleSpec algebra = spec.algebra();
  std::vector<std::pair<FockState, long>> rhs_fields;  // C(n+1, m+1) L(m)A with its mode index
  for (long m = -1; m <= n; ++m) {
    FockState lm = l_apply(m, a, algebra);
    lm *= binomial(n + 1, m + 1);
    if (!lm.is_zero()) rhs_fields.emplace_back(std::move(lm), k + n - m);
  }
  for (const auto& key : basis_states(spec, tr)) {
    const ModuleState w(key, Rational(1));
    ModuleState defect = apply_l(n, vertex_mode(a, k, w, spec), spec, tr);
    defect -= vertex_mode(a, k, apply_l(n, w, spec, tr), spec);
    for (const auto& [field, mode] : rhs_fields) defect -= vertex_mode(field, mode, w, spec);
    rep.record(key, defect, rep.params);
  }
  return rep;
}

CheckReport check_l0_grading(const ModuleSpec& spec, const Truncation& tr) {
  CheckReport rep;
  rep.identity = "l0-grading";
  rep.params = {{"spec", spec_brief(spec)}, {"j_range", {-1, 3}}};
  rep.configs_checked = 1;
  const RatMatrix top = l0_top_matrix(spec);
  for (const auto& key : basis_states(spec, tr)) {
    const ModuleState w(key, Rational(1));
    ModuleState defect = apply_l(0, w, spec, tr);
    defect.axpy(Rational(-key.mono.weight()), w);
    for (std::size_t s = 0; s < top.rows(); ++s) defect.add({key.mono, s}, -top(s, key.top));
    rep.record(key, defect, rep.params);

    // N-weight preservation: report any term of L(j)w off the N-weight of w.
    for (long j = -1; j <= 3; ++j) {
      if (!l_is_exact(j, spec)) continue;
      ModuleState off;
      for (const auto& [k2, c] : apply_l(j, w, spec, tr))
        if (k2.mono.nweight() != key.mono.nweight()) off.add(k2, c);
      rep.record(key, off, {{"j", j}, {"check", "nwt-preserved"}});
    }
  }
  return rep;
}

CheckReport check_d_equals_lminus1(const ModuleSpec& algebra, const Truncation& tr) {
  if (algebra.kind() != ModuleKind::Adjoint) throw std::invalid_argument("L(-1) = D is a statement on M(l)");
  CheckReport rep;
  rep.identity = "d-equals-lminus1";
  rep.params = {{"spec", spec_brief(algebra)}};
  rep.configs_checked = 1;
  for (const auto& key : basis_states(algebra, tr)) {
    const FockState v(key.mono, Rational(1));
    FockState defect = l_apply(-1, v, algebra);
    defect -= d_apply(v);
    rep.record(key, as_module_state(defect), rep.params);
  }
  return rep;
}

}  // namespace qcva
