#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qcva/checks.hpp"
#include "qcva/fock.hpp"
#include "qcva/module_spec.hpp"
#include "qcva/rational.hpp"

namespace qcva {

using BigCount = mpz_class;

/// Dense table of counts indexed by (m = N-weight, n = weight), 0 <= m <= max_nwt,
/// 0 <= n <= max_wt.
class DimTable {
 public:
  DimTable(int d, int max_nwt, int max_wt)
      : d_(d), max_nwt_(max_nwt), max_wt_(max_wt),
        cells_(static_cast<std::size_t>((max_nwt + 1) * (max_wt + 1))) {}

  int d() const { return d_; }
  int max_nwt() const { return max_nwt_; }
  int max_wt() const { return max_wt_; }
  BigCount& at(int m, int n) { return cells_.at(index(m, n)); }
  const BigCount& at(int m, int n) const { return cells_.at(index(m, n)); }
  friend bool operator==(const DimTable&, const DimTable&) = default;

 private:
  std::size_t index(int m, int n) const { return static_cast<std::size_t>(m * (max_wt_ + 1) + n); }
  int d_, max_nwt_, max_wt_;
  std::vector<BigCount> cells_;
};

/// Multisets of colored parts (color, m_j >= 0, n_j >= 1) summing to (m, n),
/// by dynamic programming over part types.
BigCount bipartite_count(int d, int m, int n);
DimTable bipartite_table(int d, int max_nwt, int max_wt);

/// |enumerate_basis(d, m, n)| for every cell.
DimTable enumeration_table(int d, int max_nwt, int max_wt);

/// Coefficients of the Euler product prod_{a>=0, b>=1} (1 - q^a p^b)^{-d},
/// obtained by expanding the finite product and inverting it as a power series.
DimTable gf_product_count(int d, int max_wt, int max_nwt);

/// Truncated series in p, q with a Laurent variable x.
class LaurentSeries2 {
 public:
  using Key = std::tuple<int, int, int>;  // (xpow, ppow, qpow)

  LaurentSeries2(int max_p, int max_q, int min_x, int max_x)
      : max_p_(max_p), max_q_(max_q), min_x_(min_x), max_x_(max_x) {}

  static LaurentSeries2 one(int max_p, int max_q, int min_x, int max_x);
  /// 1 / (1 - x^xp p^pp q^qp), truncated to the bounds.
  static LaurentSeries2 geometric(int xp, int pp, int qp, int max_p, int max_q, int min_x, int max_x);

  void add(const Key& k, const Rational& c);
  Rational coeff(int xp, int pp, int qp) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  LaurentSeries2 operator*(const LaurentSeries2& o) const;

 private:
  bool in_bounds(int xp, int pp, int qp) const {
    return pp >= 0 && qp >= 0 && pp <= max_p_ && qp <= max_q_ && xp >= min_x_ && xp <= max_x_;
  }
  int max_p_, max_q_, min_x_, max_x_;
  std::map<Key, Rational> terms_;
};

/// Constant term in x of 1 / ((x^{-1} p; p)_inf (x; q)_inf), coefficient of
/// p^n q^m stored at (m, n). One color.
DimTable gf_paper_ct(int max_wt, int max_nwt);

struct DimRow {
  int m = 0;
  int n = 0;
  BigCount enumerated, dp, product;
  std::optional<BigCount> constant_term;  // one color only
  std::optional<BigCount> diff;      // enumerated - constant_term
};

struct DimCrossCheck {
  std::vector<DimRow> rows;  // ordered by (m, n)
  bool consistent = true;    // enumerated == dp == product everywhere
};

DimCrossCheck cross_check_dims(int d, int max_wt, int max_nwt);

/// Containment v_j W^(k) in sum_{i <= m+k} W^(i) and wt(v_j w) = wt w + wt v - j - 1
/// for each sampled (v, j) over every basis state within tr; also checks that
/// the vacuum sits in bigrade (0, 0). Throws std::invalid_argument on a
/// non-homogeneous sample.
CheckReport check_strong_grading(const ModuleSpec& spec, const Truncation& tr,
                                 const std::vector<std::pair<FockState, long>>& samples);

/// Per bigrade (m, n): dim W^(m)_(n) minus the dimension of the part of
/// span{u_{-1} w} lying in that bigrade, with u over basis monomials of
/// M(l) with 0 < wt(u), nwt(u) <= m, and w over basis states within tr.
DimTable c1_quotient_dims(const ModuleSpec& spec, const Truncation& tr);

}  // namespace qcva
