#include "qcva/repcat.hpp"

#include <map>
#include <stdexcept>

#include "qcva/vertex_ops.hpp"

namespace qcva {

TopSpace::TopSpace(RatVector lambda, std::vector<RatMatrix> h) : lambda_(std::move(lambda)), h_(std::move(h)) {
  // Reuse the module validation (commuting, nilpotent shifts, shapes).
  (void)ModuleSpec::generalized(Rational(1), Rational(0), lambda_, h_);
}

TopSpace TopSpace::jordan(const RatVector& lambda, std::size_t r) {
  RatMatrix nil(r, r);
  for (std::size_t k = 0; k + 1 < r; ++k) nil(k, k + 1) = Rational(1);
  std::vector<RatMatrix> h;
  for (const auto& x : lambda) h.push_back(RatMatrix::scalar(r, x) + nil);
  return TopSpace(lambda, std::move(h));
}

TopSpace TopSpace::dual() const {
  RatVector lam;
  for (const auto& x : lambda_) lam.push_back(-x);
  std::vector<RatMatrix> h;
  for (const auto& m : h_) h.push_back(m.transpose() * Rational(-1));
  return TopSpace(std::move(lam), std::move(h));
}

RatMatrix eval_action(const GenIndex& gen, const PolyTerms& f, const TopSpace& top, const Rational& c) {
  if (gen.color < 1 || gen.color > top.d()) throw std::out_of_range("color index out of range");
  Rational value(0);
  for (const auto& [e, coeff] : f) value += coeff * c.pow(e);
  value *= c.pow(static_cast<unsigned>(gen.tpow));
  return top.h()[static_cast<std::size_t>(gen.color - 1)] * value;
}

namespace {
Rational norm2(const RatVector& lambda) {
  Rational s(0);
  for (const auto& x : lambda) s += x * x;
  return s;
}
}  // namespace

Rational casimir_scalar(const RatVector& lambda, const Rational& c) {
  const Rational denom = Rational(1) - c * c;
  if (denom.is_zero()) throw std::domain_error("c^2 = 1: the Casimir series does not converge");
  return norm2(lambda) / denom;
}

Rational casimir_partial(const RatVector& lambda, const Rational& c, unsigned cutoff) {
  const Rational c2 = c * c;
  Rational sum(0), term(1);
  for (unsigned n = 0; n <= cutoff; ++n) {
    sum += term;
    term *= c2;
  }
  return sum * norm2(lambda);
}

VacuumSpace vacuum_space(const ModuleSpec& spec, const Truncation& tr) {
  VacuumSpace out;
  for (int wt = 0; wt <= tr.max_wt; ++wt)
    for (int nwt = 0; nwt <= tr.max_nwt; ++nwt) {
      out.bigrades_scanned.push_back({wt, nwt});
      std::vector<ModuleKey> cols;
      for (const auto& mono : enumerate_basis(spec.d(), nwt, wt))
        for (std::size_t t = 0; t < spec.top_dim(); ++t) cols.push_back({mono, t});
      if (cols.empty()) continue;

      // Stack the images of every positive mode; rows are indexed by output keys.
      std::map<std::pair<std::size_t, ModuleKey>, std::size_t> row_of;
      std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries(cols.size());
      std::size_t op_index = 0;
      for (int i = 1; i <= spec.d(); ++i)
        for (int j = 0; j <= tr.max_nwt; ++j)
          for (int n = 1; n <= tr.max_wt; ++n, ++op_index)
            for (std::size_t c = 0; c < cols.size(); ++c)
              for (const auto& [key, coeff] : apply_mode({{i, j}, n}, ModuleState(cols[c], Rational(1)), spec)) {
                auto [it, _] = row_of.try_emplace({op_index, key}, row_of.size());
                col_entries[c].emplace_back(it->second, coeff);
              }
      RatMatrix m(row_of.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, coeff] : col_entries[c]) m(r, c) += coeff;
      for (const auto& v : rank_nullspace(m).nullspace) {
        ModuleState s;
        for (std::size_t c = 0; c < cols.size(); ++c) s.add(cols[c], v[c]);
        out.basis.push_back(std::move(s));
      }
    }
  return out;
}

LogCheck is_genuine_logarithmic(const ModuleSpec& spec) {
  if (spec.kind() != ModuleKind::Evaluation) throw std::invalid_argument("logarithmic check needs an evaluation top");
  const Rational denom = Rational(2) * spec.level() * (Rational(1) - spec.c() * spec.c());
  if (denom.is_zero()) throw std::domain_error("c^2 = 1: the zero-mode series does not converge");
  LogCheck out;
  out.eigenvalue = norm2(spec.lambda()) / denom;
  out.blocks = jordan_structure(l0_top_matrix(spec), out.eigenvalue);
  for (auto b : out.blocks) out.genuine = out.genuine || b >= 2;
  return out;
}

std::size_t intertwiner_dim(const HomProblem& p) {
  if (p.source.d() != p.middle.d() || p.source.d() != p.target.d())
    throw std::invalid_argument("intertwiner tops must share the same d");
  const std::size_t r1 = p.source.r(), r2 = p.middle.r(), r3 = p.target.r();
  // Unknown T[c][b][a] = (T(e_a))(f_b) component on g_c.
  auto var = [&](std::size_t c, std::size_t b, std::size_t a) { return (c * r2 + b) * r1 + a; };
  const std::size_t nvars = r1 * r2 * r3;
  std::vector<RatVector> rows;
  for (int i = 0; i < p.source.d(); ++i) {
    const auto& h1 = p.source.h()[static_cast<std::size_t>(i)];
    const auto& h2 = p.middle.h()[static_cast<std::size_t>(i)];
    const auto& h3 = p.target.h()[static_cast<std::size_t>(i)];
    // For each a, c, b: T(H1 e_a)[c][b] - (H3 T(e_a))[c][b] + (T(e_a) H2)[c][b] = 0
    for (std::size_t a = 0; a < r1; ++a)
      for (std::size_t c = 0; c < r3; ++c)
        for (std::size_t b = 0; b < r2; ++b) {
          RatVector row(nvars);
          for (std::size_t a2 = 0; a2 < r1; ++a2) row[var(c, b, a2)] += h1(a2, a);
          for (std::size_t c2 = 0; c2 < r3; ++c2) row[var(c2, b, a)] -= h3(c, c2);
          for (std::size_t b2 = 0; b2 < r2; ++b2) row[var(c, b2, a)] += h2(b2, b);
          rows.push_back(std::move(row));
        }
  }
  if (rows.empty()) return nvars;
  return nvars - rank(RatMatrix::from_rows(rows));
}

}  // namespace qcva
