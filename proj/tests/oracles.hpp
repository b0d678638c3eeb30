#pragma once
// Independent reference computations used only by tests. None of these call
// into the code paths they are used to check.

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>
#include <vector>

#include "qcva/rat_matrix.hpp"
#include "qcva/rational.hpp"

namespace oracle {

using Pair = std::pair<int, int>;  // (t-power, mode) for one color

// Multisets of (color, j, n) with sum j = nwt and sum n = wt, found by first
// listing partitions of wt into modes and then distributing nwt and colors
// over the parts in every possible way, deduplicating via std::set.
inline std::set<std::vector<std::tuple<int, int, int>>> bipartite_multisets(int d, int nwt, int wt) {
  std::vector<std::vector<int>> partitions;
  std::function<void(int, int, std::vector<int>&)> parts = [&](int left, int max_part, std::vector<int>& cur) {
    if (left == 0) {
      partitions.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      parts(left - p, p, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  parts(wt, wt, cur);

  std::set<std::vector<std::tuple<int, int, int>>> out;
  for (const auto& modes : partitions) {
    std::vector<std::tuple<int, int, int>> assign(modes.size());
    std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int left) {
      if (idx == modes.size()) {
        if (left != 0) return;
        auto sorted = assign;
        std::sort(sorted.begin(), sorted.end());
        out.insert(sorted);
        return;
      }
      for (int color = 1; color <= d; ++color)
        for (int j = 0; j <= left; ++j) {
          assign[idx] = {color, j, modes[idx]};
          fill(idx + 1, left - j);
        }
    };
    fill(0, nwt);
  }
  return out;
}

// Number of partitions of n into exactly k positive parts.
inline long partitions_k(int k, int n) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  // p(k, n) = p(k-1, n-1) + p(k, n-k)
  return partitions_k(k - 1, n - 1) + partitions_k(k, n - k);
}

// Number of partitions of m into exactly k nonnegative parts, i.e. into at
// most k positive parts.
inline long partitions_k_nonneg(int k, int m) {
  long s = 0;
  for (int j = 0; j <= k; ++j) s += partitions_k(j, m);
  return s;
}

// Naive Kronecker-product formulation of the intertwiner constraint
//   T o H1 = H3 o T - T o H2   with T in Hom(Omega1, Hom(Omega2, Omega3)),
// vectorizing T column-major as a (r3*r2) x r1 matrix over the basis of
// Hom(Omega2, Omega3) ~ Omega2^* (x) Omega3.
inline qcva::RatMatrix kron(const qcva::RatMatrix& a, const qcva::RatMatrix& b) {
  qcva::RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

inline std::size_t hom_dim_kron(const std::vector<qcva::RatMatrix>& h1, const std::vector<qcva::RatMatrix>& h2,
                                const std::vector<qcva::RatMatrix>& h3) {
  using qcva::RatMatrix;
  const std::size_t r1 = h1[0].rows(), r2 = h2[0].rows(), r3 = h3[0].rows();
  const std::size_t n = r1 * r2 * r3;
  // vec(T) index: (a, b, c) -> a*(r2*r3) + b*r3 + c, where T(e_a) is the r3 x r2 matrix.
  // Action on Hom(Omega2, Omega3): X -> H3 X - X H2, i.e. I (x) H3 - H2^T (x) I on vec(X) = b*r3 + c.
  std::vector<RatMatrix> blocks;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const RatMatrix phi = kron(RatMatrix::identity(r2), h3[i]) - kron(h2[i].transpose(), RatMatrix::identity(r3));
    // T H1 - Phi T = 0  ->  (H1^T (x) I - I (x) Phi) vec = 0
    blocks.push_back(kron(h1[i].transpose(), RatMatrix::identity(r2 * r3)) - kron(RatMatrix::identity(r1), phi));
  }
  RatMatrix stacked(blocks.size() * n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = blocks[b](r, c);
  return n - qcva::rank(stacked);
}

}  // namespace oracle
