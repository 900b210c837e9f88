#include "elimkit/matrix.hpp"

#include <algorithm>

namespace elimkit {

namespace {

// Row-pointer Bareiss on raw mpz values. Steps [0, K) pivot within rows < K.
struct Bareiss {
  std::size_t n;
  std::vector<mpz_class> a;
  std::vector<std::size_t> row;  // logical row -> storage row
  bool negate = false;

  explicit Bareiss(ExactMatrix<BigInt>&& m) : n(m.size()), a(n * n), row(n) {
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = i;
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = std::move(m(i, j).mpz());
    }
  }

  mpz_class& at(std::size_t i, std::size_t j) { return a[row[i] * n + j]; }

  // Runs steps [from, to); returns false if no pivot is found.
  bool run(std::size_t from, std::size_t to, std::size_t pivot_limit, mpz_class& prev) {
    mpz_class t;
    for (std::size_t k = from; k < to; ++k) {
      std::size_t p = k;
      while (p < pivot_limit && sgn(at(p, k)) == 0) ++p;
      if (p == pivot_limit) return false;
      if (p != k) {
        std::swap(row[p], row[k]);
        negate = !negate;
      }
      mpz_ptr piv = at(k, k).get_mpz_t();
      mpz_class* rk = &a[row[k] * n];
      bool trivial_prev = prev == 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        mpz_class* ri = &a[row[i] * n];
        mpz_ptr aik = ri[k].get_mpz_t();
        bool aik_zero = mpz_sgn(aik) == 0;
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_ptr aij = ri[j].get_mpz_t();
          if (aik_zero || mpz_sgn(rk[j].get_mpz_t()) == 0) {
            if (mpz_sgn(aij) == 0) continue;
            mpz_mul(aij, aij, piv);
          } else {
            mpz_mul(t.get_mpz_t(), aij, piv);
            mpz_submul(t.get_mpz_t(), aik, rk[j].get_mpz_t());
            mpz_swap(aij, t.get_mpz_t());
          }
          if (!trivial_prev) mpz_divexact(aij, aij, prev.get_mpz_t());
        }
      }
      prev = at(k, k);
    }
    return true;
  }
};

}  // namespace

BigInt det_bareiss(ExactMatrix<BigInt> m) {
  std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  Bareiss b(std::move(m));
  mpz_class prev = 1;
  if (!b.run(0, n, n, prev)) return BigInt(0);
  mpz_class r = b.at(n - 1, n - 1);
  if (b.negate) r = -r;
  return BigInt(std::move(r));
}

BlockDet det_with_leading_block(ExactMatrix<BigInt> m, std::size_t K) {
  std::size_t n = m.size();
  BlockDet out;
  Bareiss b(std::move(m));
  mpz_class prev = 1;
  if (!b.run(0, K, K, prev)) {
    out.block_singular = true;
    return out;
  }
  out.block = BigInt(b.negate ? mpz_class(-prev) : prev);
  if (n == 0) {
    out.full = BigInt(1);
    return out;
  }
  if (!b.run(K, n, n, prev)) {
    out.full = BigInt(0);
    return out;
  }
  mpz_class r = b.at(n - 1, n - 1);
  if (b.negate) r = -r;
  out.full = BigInt(std::move(r));
  return out;
}

int det_degree_bound(const ExactMatrix<UniPoly>& m) {
  std::size_t n = m.size();
  long rows = 0, cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int rmax = -1, cmax = -1;
    for (std::size_t j = 0; j < n; ++j) {
      rmax = std::max(rmax, m(i, j).degree());
      cmax = std::max(cmax, m(j, i).degree());
    }
    if (rmax < 0 || cmax < 0) return -1;  // zero row or column
    rows += rmax;
    cols += cmax;
  }
  return static_cast<int>(std::min(rows, cols));
}

UniPoly det_interpolate(const ExactMatrix<UniPoly>& m, int degree_bound) {
  if (m.size() == 0) return UniPoly(1);
  if (degree_bound < 0) {
    degree_bound = det_degree_bound(m);
    if (degree_bound < 0) return UniPoly();
  }
  std::vector<BigInt> values;
  values.reserve(degree_bound + 1);
  for (int k = 0; k <= degree_bound; ++k) {
    BigInt x0 = interpolation_node(k);
    values.push_back(det_bareiss(m.map([&](const UniPoly& p) { return p.eval(x0); })));
  }
  return interpolate(values);
}

}  // namespace elimkit
