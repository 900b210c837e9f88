#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "elimkit/bigint.hpp"
#include "elimkit/ring.hpp"
#include "elimkit/unipoly.hpp"

namespace elimkit {

template <class R>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n, R(0)) {}

  std::size_t size() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j) std::swap(a_[i * n_ + j], a_[k * n_ + j]);
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(std::declval<const R&>()));
    ExactMatrix<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<R> a_;
};

// Single-step Bareiss, pivot = first nonzero entry of the current column.
template <ExactRing R>
R det_bareiss(ExactMatrix<R> m) {
  std::size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return R(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

BigInt det_bareiss(ExactMatrix<BigInt> m);

// Laplace expansion along rows top to bottom, memoizing minors by column set.
template <ExactRing R>
R det_cofactor(const ExactMatrix<R>& m) {
  std::size_t n = m.size();
  if (n == 0) return R(1);
  std::vector<R> minor(std::size_t{1} << n, R(0));
  minor[0] = R(1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
    R acc(0);
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const R& e = m(row, j);
      if (!is_zero(e)) {
        const R& sub = minor[mask & ~(1u << j)];
        if (!is_zero(sub)) {
          // sign of column j's position within the set, relative to the last row
          bool neg = ((static_cast<std::size_t>(pos) + row) & 1) != 0;
          acc = neg ? acc - e * sub : acc + e * sub;
        }
      }
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor[(1u << n) - 1];
}

// Sum over rows of the largest entry degree, or the same over columns,
// whichever is smaller.
int det_degree_bound(const ExactMatrix<UniPoly>& m);
// Evaluation at 0,1,-1,... then interpolation; degree_bound < 0 means compute it.
UniPoly det_interpolate(const ExactMatrix<UniPoly>& m, int degree_bound = -1);

// Bareiss for a matrix whose leading K x K principal block is factored first
// (pivots for the first K steps come from the first K rows only).
struct BlockDet {
  bool block_singular = false;
  BigInt block;  // det of the leading K x K block
  BigInt full;   // det of the whole matrix
};
BlockDet det_with_leading_block(ExactMatrix<BigInt> m, std::size_t K);

template <ExactRing R>
R det_fraction_free(const ExactMatrix<R>& m) {
  return det_bareiss(m);
}

inline BigInt det(const ExactMatrix<BigInt>& m) { return det_bareiss(m); }
inline UniPoly det(const ExactMatrix<UniPoly>& m) { return det_interpolate(m); }

}  // namespace elimkit
