#pragma once

#include <vector>

#include "elimkit/errors.hpp"
#include "elimkit/linalg.hpp"

namespace elimkit {

// f[k], g[k] multiply X^k; m, n are the declared degrees.
template <class C>
struct SylvesterSpec {
  std::vector<C> f;
  int m = 0;
  std::vector<C> g;
  int n = 0;
};

template <class R>
SylvesterSpec<MultiPoly<R>> sylvester_spec(const DeclaredUniView<R>& f, const DeclaredUniView<R>& g) {
  return {f.coeffs, f.declared_deg, g.coeffs, g.declared_deg};
}

// Columns 0..n-1 hold a_m..a_0 shifted down, columns n..n+m-1 hold b_n..b_0.
template <class C>
ExactMatrix<C> sylvester_matrix(const SylvesterSpec<C>& s) {
  if (s.m < 0 || s.n < 0 || static_cast<int>(s.f.size()) != s.m + 1 || static_cast<int>(s.g.size()) != s.n + 1)
    throw DegreeExceeded("coefficient list does not match declared degree");
  int N = s.m + s.n;
  ExactMatrix<C> M(N);
  for (int c = 0; c < s.n; ++c)
    for (int r = 0; r <= s.m; ++r) M(c + r, c) = s.f[s.m - r];
  for (int c = 0; c < s.m; ++c)
    for (int r = 0; r <= s.n; ++r) M(c + r, s.n + c) = s.g[s.n - r];
  return M;
}

template <class C>
C res_uni(const SylvesterSpec<C>& s) {
  return det(sylvester_matrix(s));
}

// Principal subresultant: drop the last two rows and the last f- and g-columns.
template <class C>
C sres1(const SylvesterSpec<C>& s) {
  if (s.m + s.n < 3) throw DegreeExceeded("sres1 needs m+n >= 3");
  ExactMatrix<C> full = sylvester_matrix(s);
  int N = s.m + s.n - 2;
  std::vector<int> cols;
  for (int c = 0; c < s.n - 1; ++c) cols.push_back(c);
  for (int c = 0; c < s.m - 1; ++c) cols.push_back(s.n + c);
  ExactMatrix<C> M(N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) M(r, c) = full(r, cols[c]);
  return det(M);
}

// Res(P, P') / a0 in declared degrees (n, n-1).
template <class C>
C disc_uni(const std::vector<C>& p, int n) {
  if (n < 1) throw DegreeExceeded("disc_uni needs declared degree >= 1");
  if (static_cast<int>(p.size()) != n + 1) throw DegreeExceeded("coefficient list does not match declared degree");
  if (is_zero(p[n])) throw LeadingZero("leading declared coefficient vanishes");
  std::vector<C> dp(n);
  for (int k = 1; k <= n; ++k) dp[k - 1] = p[k] * C(k);
  return exact_div(res_uni(SylvesterSpec<C>{p, n, dp, n - 1}), p[n]);
}

template <class R>
MultiPoly<R> disc_uni(const DeclaredUniView<R>& v) {
  return disc_uni(v.coeffs, v.declared_deg);
}

// Coefficients of a view whose entries are constants, as ring elements.
template <class R>
std::vector<R> constant_coeffs(const DeclaredUniView<R>& v) {
  std::vector<R> out;
  for (const auto& c : v.coeffs) {
    if (!c.is_constant()) throw DegreeExceeded("coefficient involves other variables");
    out.push_back(c.constant_value());
  }
  return out;
}

}  // namespace elimkit
