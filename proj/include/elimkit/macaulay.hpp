#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "elimkit/errors.hpp"
#include "elimkit/linalg.hpp"
#include "elimkit/sylvester.hpp"

namespace elimkit {

template <class R>
struct MacaulaySystem {
  std::vector<MultiPoly<R>> polys;
  std::vector<int> degs;
  std::vector<int> vars;  // active slots; vars[0] plays the role of X1
};

namespace detail {

// Degree-D monomials in n variables, with the Macaulay row assignment.
struct MacaulayLayout {
  int n = 0, D = 0;
  std::vector<std::array<int, 4>> mono;  // extraneous block first, then reduced monomials
  std::vector<int> owner;                // index of the polynomial generating each row
  std::size_t extraneous = 0;            // size of the leading principal block M'
  int index_of(const std::array<int, 4>& a) const;
  std::vector<long> key_to_index;        // dense lookup table
  int base = 0;
};

const MacaulayLayout& layout_for(const std::vector<int>& degs);

// Sign making Res(X1^d1, ..., Xn^dn) = +1 for this construction, cached per signature.
int calibration_sign(const std::vector<int>& degs);

long long degree_product(const std::vector<int>& degs);

// Unimodular integer matrices used when the extraneous minor vanishes.
std::vector<std::vector<long>> unimodular_change(int n, int attempt);

// Variable order (as a permutation of 0..n-1) placing a nonzero pure power of
// vars[perm[i]] in f_i whenever possible; `has_power(i, k)` reports whether
// f_i has a nonzero vars[k]^{d_i} term.
template <class F>
std::vector<int> choose_order(int n, F&& has_power) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  int best_score = -1;
  do {
    int score = 0;
    for (int i = 0; i < n; ++i) score += has_power(i, perm[i]) ? 1 : 0;
    if (score > best_score) {
      best_score = score;
      best = perm;
    }
  } while (best_score < n && std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

template <class R>
std::array<int, 4> exponents(const Monomial& m, const std::vector<int>& vars) {
  std::array<int, 4> a{};
  for (std::size_t k = 0; k < vars.size(); ++k) a[k] = m.e[vars[k]];
  return a;
}

template <class R>
ExactMatrix<R> build_matrix(const MacaulaySystem<R>& sys, const MacaulayLayout& L) {
  std::size_t N = L.mono.size();
  ExactMatrix<R> M(N);
  for (std::size_t r = 0; r < N; ++r) {
    int i = L.owner[r];
    std::array<int, 4> shift = L.mono[r];
    shift[i] -= sys.degs[i];
    for (const auto& t : sys.polys[i].terms()) {
      auto b = exponents<R>(t.m, sys.vars);
      for (int k = 0; k < L.n; ++k) b[k] += shift[k];
      M(r, L.index_of(b)) = t.c;
    }
  }
  return M;
}

template <class R>
void validate(const MacaulaySystem<R>& sys) {
  std::size_t n = sys.polys.size();
  if (n < 1 || n > 4) throw NonHomogeneous("Macaulay resultant needs 1 to 4 polynomials");
  if (sys.degs.size() != n || sys.vars.size() != n) throw NonHomogeneous("degrees/variables do not match polynomial count");
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.degs[i] < 0) throw NonHomogeneous("negative degree");
    if (!sys.polys[i].is_homogeneous_over(sys.vars, sys.degs[i]))
      throw NonHomogeneous("polynomial " + std::to_string(i + 1) + " is not homogeneous of degree " +
                           std::to_string(sys.degs[i]) + " in the active variables");
    for (const auto& t : sys.polys[i].terms())
      for (int s = 0; s < kMaxVars; ++s)
        if (t.m.e[s] && std::find(sys.vars.begin(), sys.vars.end(), s) == sys.vars.end())
          throw NonHomogeneous("polynomial " + std::to_string(i + 1) + " involves a non-active variable");
  }
}

// f_i(A X) for an integer matrix A acting on the active variables.
template <class R>
MacaulaySystem<R> change_variables(const MacaulaySystem<R>& sys, const std::vector<std::vector<long>>& A) {
  std::map<int, MultiPoly<R>> bind;
  for (std::size_t k = 0; k < sys.vars.size(); ++k) {
    MultiPoly<R> img;
    for (std::size_t l = 0; l < sys.vars.size(); ++l)
      if (A[k][l]) img = img + MultiPoly<R>::var(sys.vars[l]).scale(R(BigInt(A[k][l])));
    bind.emplace(sys.vars[k], std::move(img));
  }
  MacaulaySystem<R> out = sys;
  for (auto& p : out.polys) p = mp_substitute(p, bind);
  return out;
}

template <class R>
MacaulaySystem<R> reorder(const MacaulaySystem<R>& sys, int& sign) {
  int n = static_cast<int>(sys.polys.size());
  auto perm = choose_order(n, [&](int i, int k) {
    return !is_zero(sys.polys[i].coeff(Monomial::var(sys.vars[k], sys.degs[i])));
  });
  MacaulaySystem<R> out = sys;
  for (int k = 0; k < n; ++k) out.vars[k] = sys.vars[perm[k]];
  // Res over the reordered variables is Res(f o P) = sign(P)^{d1...dn} Res(f).
  sign = (degree_product(sys.degs) % 2 == 1) ? permutation_sign(perm) : 1;
  return out;
}

// Handles n <= 2, zero polynomials and constants. Returns false if the
// general construction is needed.
template <class R>
bool trivial_cases(const MacaulaySystem<R>& sys, R& out) {
  std::size_t n = sys.polys.size();
  for (std::size_t i = 0; i < n; ++i)
    if (sys.polys[i].is_zero_poly() && sys.degs[i] > 0) {
      out = R(0);
      return true;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (sys.degs[i] == 0) {
      long long e = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) e *= sys.degs[j];
      out = ring_pow(sys.polys[i].constant_value(), static_cast<unsigned long>(e));
      return true;
    }
  if (n == 1) {
    out = sys.polys[0].coeff(Monomial::var(sys.vars[0], sys.degs[0]));
    return true;
  }
  if (n == 2) {
    // Sylvester in vars[0] after setting vars[1] = 1.
    SylvesterSpec<R> s;
    s.m = sys.degs[0];
    s.n = sys.degs[1];
    for (int k = 0; k <= s.m; ++k) {
      Monomial m = Monomial::var(sys.vars[0], k) * Monomial::var(sys.vars[1], s.m - k);
      s.f.push_back(sys.polys[0].coeff(m));
    }
    for (int k = 0; k <= s.n; ++k) {
      Monomial m = Monomial::var(sys.vars[0], k) * Monomial::var(sys.vars[1], s.n - k);
      s.g.push_back(sys.polys[1].coeff(m));
    }
    out = res_uni(s);
    return true;
  }
  return false;
}

constexpr int kBaseChangeAttempts = 8;

// Generic construction for coefficient rings with their own det/exact_div.
template <class R>
R macaulay_generic(const MacaulaySystem<R>& sys0) {
  for (int attempt = 0; attempt <= kBaseChangeAttempts; ++attempt) {
    MacaulaySystem<R> sys =
        attempt == 0 ? sys0 : change_variables(sys0, unimodular_change(static_cast<int>(sys0.vars.size()), attempt));
    int sign = 1;
    sys = reorder(sys, sign);
    const MacaulayLayout& L = layout_for(sys.degs);
    ExactMatrix<R> M = build_matrix(sys, L);
    ExactMatrix<R> Mp(L.extraneous);
    for (std::size_t i = 0; i < L.extraneous; ++i)
      for (std::size_t j = 0; j < L.extraneous; ++j) Mp(i, j) = M(i, j);
    R den = det(Mp);
    if (is_zero(den)) continue;
    R res = exact_div(det(M), den);
    sign *= calibration_sign(sys.degs);
    return sign < 0 ? -res : res;
  }
  throw DegenerateInput("extraneous minor vanished under every change of variables");
}

}  // namespace detail

BigInt macaulay_resultant_int(const MacaulaySystem<BigInt>& sys);
UniPoly macaulay_resultant_zx(const MacaulaySystem<UniPoly>& sys);
// Degree bound in x from homogeneity and weighted isobarity.
int macaulay_degree_bound(const MacaulaySystem<UniPoly>& sys);

template <class R>
R macaulay_resultant(const MacaulaySystem<R>& sys) {
  detail::validate(sys);
  R out(0);
  if (detail::trivial_cases(sys, out)) return out;
  if constexpr (std::is_same_v<R, BigInt>) {
    return macaulay_resultant_int(sys);
  } else if constexpr (std::is_same_v<R, UniPoly>) {
    return macaulay_resultant_zx(sys);
  } else {
    return detail::macaulay_generic(sys);
  }
}

// Convenience: resultant of forms in the given slots with the given degrees.
template <class R>
R mres(std::vector<MultiPoly<R>> polys, std::vector<int> degs, std::vector<int> vars) {
  return macaulay_resultant(MacaulaySystem<R>{std::move(polys), std::move(degs), std::move(vars)});
}

// Homogenize each polynomial in elim_vars with hvar, placed first, then Res.
template <class R>
R resultant_eliminating(const std::vector<MultiPoly<R>>& polys, const std::vector<int>& elim_vars,
                        const std::vector<int>& declared_degs, int hvar) {
  if (polys.size() != elim_vars.size() + 1 || declared_degs.size() != polys.size())
    throw DegreeExceeded("need one more polynomial than eliminated variables");
  MacaulaySystem<R> sys;
  sys.vars.push_back(hvar);
  sys.vars.insert(sys.vars.end(), elim_vars.begin(), elim_vars.end());
  sys.degs = declared_degs;
  for (std::size_t i = 0; i < polys.size(); ++i) sys.polys.push_back(mp_homogenize(polys[i], hvar, declared_degs[i], elim_vars));
  return macaulay_resultant(sys);
}

// d^{d^2-3d+3} Disc(P) = Res(d1 P, d2 P, d3 P) for a ternary form in X1, X2, X3.
template <class R>
R disc_ternary(const MultiPoly<R>& P, int d) {
  if (d < 2) throw NonHomogeneous("ternary discriminant needs degree >= 2");
  std::vector<int> vars{kX1, kX2, kX3};
  if (!P.is_homogeneous_over(vars, d)) throw NonHomogeneous("not a ternary form of the declared degree");
  R r = mres<R>({mp_partial(P, kX1), mp_partial(P, kX2), mp_partial(P, kX3)}, {d - 1, d - 1, d - 1}, vars);
  return exact_div(r, R(pow(BigInt(d), static_cast<unsigned long>(d * d - 3 * d + 3))));
}

// Res(P1, P2, d2P1 d3P2 - d2P2 d3P1) / Res(P1, P2, X1).
template <class R>
R disc_pair(const MultiPoly<R>& P1, int d1, const MultiPoly<R>& P2, int d2) {
  std::vector<int> vars{kX1, kX2, kX3};
  MultiPoly<R> J = mp_partial(P1, kX2) * mp_partial(P2, kX3) - mp_partial(P2, kX2) * mp_partial(P1, kX3);
  R den = mres<R>({P1, P2, MultiPoly<R>::var(kX1)}, {d1, d2, 1}, vars);
  if (is_zero(den)) throw DenominatorZero("Res(P1, P2, X1) vanishes");
  R num = mres<R>({P1, P2, J}, {d1, d2, d1 + d2 - 2}, vars);
  return exact_div(num, den);
}

}  // namespace elimkit
