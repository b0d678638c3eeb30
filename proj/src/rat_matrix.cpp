#include "qcva/rat_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcva {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& s) {
  RatMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = s;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::pow(unsigned e) const {
  if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
  RatMatrix result = identity(rows_);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
    }
  return p;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t piv = lead_row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead_row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(lead_row, c));
    const Rational inv = Rational(1) / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(lead_row, c).is_zero()) m(r, c) -= f * m(lead_row, c);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return rref(work).size();
}

RankNullspace rank_nullspace(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = rref(work);
  RankNullspace out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> jordan_structure(const RatMatrix& m, const Rational& eigenvalue) {
  if (!m.is_square()) throw std::invalid_argument("jordan_structure requires a square matrix");
  const std::size_t n = m.rows();
  const RatMatrix shifted = m - RatMatrix::scalar(n, eigenvalue);
  // ranks[k] = rank((m - eigenvalue)^k); stabilizes after at most n steps.
  std::vector<std::size_t> ranks{n};
  RatMatrix power = RatMatrix::identity(n);
  while (true) {
    power = power * shifted;
    ranks.push_back(rank(power));
    if (ranks.back() == ranks[ranks.size() - 2]) break;
  }
  // at_least[k] = number of blocks of size >= k
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t at_least_next = (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t b = 0; b < at_least - at_least_next; ++b) sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace qcva
