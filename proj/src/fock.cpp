#include "qcva/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcva {

namespace {

void enumerate_rec(const std::vector<Factor>& parts, std::size_t from, int nwt_left, int wt_left,
                   std::vector<Factor>& current, std::vector<Monomial>& out) {
  if (nwt_left == 0 && wt_left == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t k = from; k < parts.size(); ++k) {
    const Factor& f = parts[k];
    if (f.tpow > nwt_left || f.mode > wt_left) continue;
    current.push_back(f);
    enumerate_rec(parts, k, nwt_left - f.tpow, wt_left - f.mode, current, out);
    current.pop_back();
  }
}

template <typename Key, typename GradeOf>
std::optional<Bigrade> common_grade(const SparseVector<Key>& s, GradeOf grade_of) {
  std::optional<Bigrade> g;
  for (const auto& [k, c] : s) {
    Bigrade b = grade_of(k);
    if (g && *g != b) return std::nullopt;
    g = b;
  }
  return g;
}

}  // namespace

std::vector<Monomial> enumerate_basis(int d, int nwt, int wt) {
  if (nwt < 0 || wt < 0) return {};
  std::vector<Factor> parts;
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j <= nwt; ++j)
      for (int n = 1; n <= wt; ++n) parts.push_back({i, j, n});
  std::vector<Monomial> out;
  std::vector<Factor> current;
  enumerate_rec(parts, 0, nwt, wt, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleKey> basis_states(const ModuleSpec& spec, const Truncation& tr) {
  std::vector<ModuleKey> out;
  for (int n = 0; n <= tr.max_wt; ++n)
    for (int m = 0; m <= tr.max_nwt; ++m)
      for (const auto& mono : enumerate_basis(spec.d(), m, n))
        for (std::size_t t = 0; t < spec.top_dim(); ++t) out.push_back({mono, t});
  return out;
}

std::optional<Bigrade> grading(const FockState& s) {
  return common_grade(s, [](const Monomial& m) { return Bigrade{m.weight(), m.nweight()}; });
}

std::optional<Bigrade> grading(const ModuleState& s) {
  return common_grade(s, [](const ModuleKey& k) { return Bigrade{k.mono.weight(), k.mono.nweight()}; });
}

ModuleState apply_mode(const ModeOp& op, const ModuleState& w, const ModuleSpec& spec) {
  const int i = op.gen.color;
  const int j = op.gen.tpow;
  if (i < 1 || i > spec.d()) throw std::out_of_range("color index out of range");
  if (j < 0) throw std::invalid_argument("t-power must be nonnegative");
  ModuleState out;
  if (op.n < 0) {
    const Factor f{i, j, static_cast<int>(-op.n)};
    for (const auto& [k, c] : w) out.add({k.mono.times(f), k.top}, c);
  } else if (op.n > 0) {
    const Factor f{i, j, static_cast<int>(op.n)};
    const Rational scale = Rational(op.n) * spec.level();
    for (const auto& [k, c] : w) {
      const std::size_t mult = k.mono.multiplicity(f);
      if (mult == 0) continue;
      out.add({k.mono.without_one(f), k.top}, c * scale * Rational(static_cast<long>(mult)));
    }
  } else {
    if (!spec.has_zero_modes()) return out;
    const RatMatrix z = spec.zero_mode(i, j);
    for (const auto& [k, c] : w)
      for (std::size_t s = 0; s < spec.top_dim(); ++s)
        if (!z(s, k.top).is_zero()) out.add({k.mono, s}, c * z(s, k.top));
  }
  return out;
}

}  // namespace qcva
