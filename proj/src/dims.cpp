#include "qcva/dims.hpp"

#include <stdexcept>

#include "qcva/vertex_ops.hpp"

namespace qcva {

DimTable bipartite_table(int d, int max_nwt, int max_wt) {
  DimTable t(d, max_nwt, max_wt);
  t.at(0, 0) = 1;
  // Unbounded knapsack: each part type (color, a, b) may repeat.
  for (int color = 0; color < d; ++color)
    for (int a = 0; a <= max_nwt; ++a)
      for (int b = 1; b <= max_wt; ++b)
        for (int m = a; m <= max_nwt; ++m)
          for (int n = b; n <= max_wt; ++n) t.at(m, n) += t.at(m - a, n - b);
  return t;
}

BigCount bipartite_count(int d, int m, int n) {
  if (m < 0 || n < 0) return 0;
  return bipartite_table(d, m, n).at(m, n);
}

DimTable enumeration_table(int d, int max_nwt, int max_wt) {
  DimTable t(d, max_nwt, max_wt);
  for (int m = 0; m <= max_nwt; ++m)
    for (int n = 0; n <= max_wt; ++n) t.at(m, n) = static_cast<unsigned long>(enumerate_basis(d, m, n).size());
  return t;
}

DimTable gf_product_count(int d, int max_wt, int max_nwt) {
  // Dense power series in (q, p) truncated at (max_nwt, max_wt).
  const int Q = max_nwt, P = max_wt;
  auto idx = [P](int m, int n) { return static_cast<std::size_t>(m * (P + 1) + n); };
  std::vector<BigCount> prod(static_cast<std::size_t>((Q + 1) * (P + 1)));
  prod[idx(0, 0)] = 1;
  for (int a = 0; a <= Q; ++a)
    for (int b = 1; b <= P; ++b)
      for (int rep = 0; rep < d; ++rep)
        // multiply by (1 - q^a p^b), descending so each source is read before it is updated
        for (int m = Q; m >= a; --m)
          for (int n = P; n >= b; --n) prod[idx(m, n)] -= prod[idx(m - a, n - b)];
  // Invert: inv * prod = 1 with prod(0,0) = 1.
  DimTable inv(d, max_nwt, max_wt);
  for (int m = 0; m <= Q; ++m)
    for (int n = 0; n <= P; ++n) {
      BigCount s = (m == 0 && n == 0) ? 1 : 0;
      for (int m2 = 0; m2 <= m; ++m2)
        for (int n2 = 0; n2 <= n; ++n2) {
          if (m2 == 0 && n2 == 0) continue;
          const BigCount& c = prod[idx(m2, n2)];
          if (c != 0) s -= c * inv.at(m - m2, n - n2);
        }
      inv.at(m, n) = s;
    }
  return inv;
}

LaurentSeries2 LaurentSeries2::one(int max_p, int max_q, int min_x, int max_x) {
  LaurentSeries2 s(max_p, max_q, min_x, max_x);
  s.add({0, 0, 0}, Rational(1));
  return s;
}

LaurentSeries2 LaurentSeries2::geometric(int xp, int pp, int qp, int max_p, int max_q, int min_x, int max_x) {
  if (pp < 0 || qp < 0 || (xp == 0 && pp == 0 && qp == 0))
    throw std::invalid_argument("geometric series needs a nonconstant monomial with nonnegative p, q powers");
  LaurentSeries2 s(max_p, max_q, min_x, max_x);
  for (int k = 0;; ++k) {
    const int x = k * xp, p = k * pp, q = k * qp;
    if (p > max_p || q > max_q || x < min_x || x > max_x) break;
    s.add({x, p, q}, Rational(1));
  }
  return s;
}

void LaurentSeries2::add(const Key& k, const Rational& c) {
  const auto [x, p, q] = k;
  if (!in_bounds(x, p, q) || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentSeries2::coeff(int xp, int pp, int qp) const {
  auto it = terms_.find({xp, pp, qp});
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries2 LaurentSeries2::operator*(const LaurentSeries2& o) const {
  LaurentSeries2 out(std::min(max_p_, o.max_p_), std::min(max_q_, o.max_q_), std::max(min_x_, o.min_x_),
                     std::min(max_x_, o.max_x_));
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      const auto [xa, pa, qa] = ka;
      const auto [xb, pb, qb] = kb;
      if (pa + pb > out.max_p_ || qa + qb > out.max_q_) continue;
      out.add({xa + xb, pa + pb, qa + qb}, ca * cb);
    }
  return out;
}

DimTable gf_paper_ct(int max_wt, int max_nwt) {
  const int P = max_wt, Q = max_nwt;
  // Only x^k with |k| <= P can meet in the constant term: the p-side carries
  // x^{-k} with k <= (number of parts) <= P.
  const int lo = -P, hi = P;
  LaurentSeries2 left = LaurentSeries2::one(P, Q, lo, hi);  // 1/(x^{-1}p; p)_inf
  for (int k = 1; k <= P; ++k) left = left * LaurentSeries2::geometric(-1, k, 0, P, Q, lo, hi);
  LaurentSeries2 right = LaurentSeries2::one(P, Q, lo, hi);  // 1/(x; q)_inf
  for (int k = 0; k <= Q; ++k) right = right * LaurentSeries2::geometric(1, 0, k, P, Q, lo, hi);
  const LaurentSeries2 full = left * right;
  DimTable t(1, max_nwt, max_wt);
  for (int m = 0; m <= Q; ++m)
    for (int n = 0; n <= P; ++n) {
      const Rational c = full.coeff(0, n, m);
      t.at(m, n) = c.numerator();
    }
  return t;
}

DimCrossCheck cross_check_dims(int d, int max_wt, int max_nwt) {
  const DimTable en = enumeration_table(d, max_nwt, max_wt);
  const DimTable dp = bipartite_table(d, max_nwt, max_wt);
  const DimTable gp = gf_product_count(d, max_wt, max_nwt);
  std::optional<DimTable> ct;
  if (d == 1) ct = gf_paper_ct(max_wt, max_nwt);
  DimCrossCheck out;
  for (int m = 0; m <= max_nwt; ++m)
    for (int n = 0; n <= max_wt; ++n) {
      DimRow row{m, n, en.at(m, n), dp.at(m, n), gp.at(m, n), std::nullopt, std::nullopt};
      if (ct) {
        row.constant_term = ct->at(m, n);
        row.diff = BigCount(row.enumerated - *row.constant_term);
      }
      out.consistent = out.consistent && row.enumerated == row.dp && row.dp == row.product;
      out.rows.push_back(std::move(row));
    }
  return out;
}

CheckReport check_strong_grading(const ModuleSpec& spec, const Truncation& tr,
                                 const std::vector<std::pair<FockState, long>>& samples) {
  CheckReport rep;
  rep.identity = "strong-grading";
  rep.params = {{"samples", samples.size()}, {"max_wt", tr.max_wt}, {"max_nwt", tr.max_nwt}};
  const auto vac = grading(vacuum_state());
  ModuleState vac_defect;
  if (!vac || *vac != Bigrade{0, 0}) vac_defect.add({}, Rational(1));
  rep.record({}, vac_defect, {{"check", "vacuum-bigrade"}});

  const auto basis = basis_states(spec, tr);
  for (const auto& [v, j] : samples) {
    const auto g = grading(v);
    if (!g) throw std::invalid_argument("strong-grading sample is not doubly homogeneous");
    ++rep.configs_checked;
    for (const auto& key : basis) {
      const long wt_w = key.mono.weight(), nwt_w = key.mono.nweight();
      ModuleState bad;
      for (const auto& [k2, c] : vertex_mode(v, j, ModuleState(key, Rational(1)), spec))
        if (k2.mono.nweight() > g->nwt + nwt_w || k2.mono.weight() != wt_w + g->wt - j - 1) bad.add(k2, c);
      rep.record(key, bad, {{"j", j}});
    }
  }
  return rep;
}

namespace {

// Row echelon basis under a custom key order; each row is stored with its
// smallest key (under the order) as pivot, normalized to coefficient 1.
class EchelonSpan {
 public:
  using OrderKey = std::pair<int, ModuleKey>;
  using Vec = SparseVector<OrderKey>;

  void insert(Vec v) {
    while (!v.is_zero()) {
      const auto& [pivot, lead] = *v.begin();
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        v *= Rational(1) / lead;
        rows_.emplace(v.begin()->first, std::move(v));
        return;
      }
      v.axpy(-lead, it->second);
    }
  }
  std::size_t count_pivots_with_tag(int tag) const {
    std::size_t c = 0;
    for (const auto& [k, row] : rows_) c += (k.first == tag);
    return c;
  }

 private:
  std::map<OrderKey, Vec> rows_;
};

}  // namespace

DimTable c1_quotient_dims(const ModuleSpec& spec, const Truncation& tr) {
  DimTable out(spec.d(), tr.max_nwt, tr.max_wt);
  const auto module_basis = basis_states(spec, tr);
  for (int m = 0; m <= tr.max_nwt; ++m)
    for (int n = 0; n <= tr.max_wt; ++n) {
      // Keys outside bigrade (m, n) sort first (tag 0); a reduced row whose
      // pivot carries tag 1 lies entirely inside the bigrade.
      EchelonSpan span;
      for (int wu = 1; wu <= n; ++wu)
        for (int nu = 0; nu <= m; ++nu)
          for (const auto& u : enumerate_basis(spec.d(), nu, wu)) {
            const FockState uv(u, Rational(1));
            for (const auto& w : module_basis) {
              if (w.mono.weight() != n - wu) continue;
              EchelonSpan::Vec g;
              for (const auto& [k, c] : vertex_mode(uv, -1, ModuleState(w, Rational(1)), spec))
                g.add({k.mono.nweight() == m ? 1 : 0, k}, c);
              span.insert(std::move(g));
            }
          }
      const auto dim = enumerate_basis(spec.d(), m, n).size() * spec.top_dim();
      out.at(m, n) = static_cast<unsigned long>(dim - span.count_pivots_with_tag(1));
    }
  return out;
}

}  // namespace qcva
