#include "checks.hpp"

#include <algorithm>

#include "test_util.hpp"

namespace checks {

using namespace elimkit;
using P = MultiPoly<BigInt>;

namespace {

std::vector<int> slots(std::size_t n) {
  std::vector<int> s;
  for (std::size_t k = 0; k < n; ++k) s.push_back(kX1 + static_cast<int>(k));
  return s;
}

BigInt res(const std::vector<P>& f, const std::vector<int>& d) { return mres<BigInt>(f, d, slots(f.size())); }

std::string tuple_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

long long prod(const std::vector<int>& d) {
  long long p = 1;
  for (int x : d) p *= x;
  return p;
}

// Degree tuples kept small enough for 20 trials to run in seconds.
const std::vector<std::vector<int>> kPool{{2, 3}, {3, 3}, {1, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 2, 1},
                                          {2, 1, 2}, {1, 1, 1, 2}, {2, 1, 2, 1}, {2, 2, 1, 1}};

std::vector<int> pick(Rng& rng) { return kPool[static_cast<std::size_t>(rng.uniform(0, kPool.size() - 1))]; }

std::vector<P> forms(Rng& rng, const std::vector<int>& d) {
  std::vector<P> f;
  for (int di : d) f.push_back(testutil::random_form(rng, slots(d.size()), di, 5));
  return f;
}

P at_x4(const P& p) { return mp_rename(p, kX3, kX4); }
P x4_to_x3(const P& p) { return mp_substitute(p, {{kX4, P::var(kX3)}}); }
P dl(const P& p, int k = 1) { return mp_delta_pow(p, kX3, kX4, k); }

}  // namespace

Tally normalization(int max_deg) {
  Tally t;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<int> d(n, 1);
    for (;;) {
      std::vector<P> f;
      for (std::size_t k = 0; k < n; ++k) f.push_back(P::var(kX1 + static_cast<int>(k), d[k]));
      BigInt r = res(f, d);
      t.record(r == BigInt(1), "Res of pure powers " + tuple_str(d) + " = " + r.str());
      std::size_t k = 0;
      while (k < n && d[k] == max_deg) d[k++] = 1;
      if (k == n) break;
      ++d[k];
    }
  }
  return t;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::PermutationSign: return "permutation sign";
    case Axiom::Multiplicativity: return "multiplicativity";
    case Axiom::Elementary: return "elementary transformation";
    case Axiom::BaseChange: return "linear base change";
    case Axiom::Homogeneity: return "homogeneity";
    case Axiom::Isobarity: return "isobarity";
    case Axiom::LinearDet: return "linear forms";
    case Axiom::PolarDisc: return "Res(d1P, d2P, P) factorization";
  }
  return "?";
}

Tally axiom(Axiom a, int trials, std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> d = pick(rng);
    std::size_t n = d.size();
    std::string where = axiom_name(a) + " at " + tuple_str(d) + ", trial " + std::to_string(trial);
    switch (a) {
      case Axiom::PermutationSign: {
        auto f = forms(rng, d);
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, n - 1)), j = (i + 1) % n;
        auto g = f;
        auto e = d;
        std::swap(g[i], g[j]);
        std::swap(e[i], e[j]);
        BigInt expect = prod(d) % 2 ? -res(f, d) : res(f, d);
        t.record(res(g, e) == expect, where);
        break;
      }
      case Axiom::Multiplicativity: {
        std::sort(d.rbegin(), d.rend());
        if (d[0] < 2) d[0] = 2;
        int d1 = static_cast<int>(rng.uniform(1, d[0] - 1));
        auto f = forms(rng, d);
        P f1 = testutil::random_form(rng, slots(n), d1, 5), f2 = testutil::random_form(rng, slots(n), d[0] - d1, 5);
        auto g1 = f, g2 = f;
        auto e1 = d, e2 = d;
        f[0] = f1 * f2;
        g1[0] = f1;
        g2[0] = f2;
        e1[0] = d1;
        e2[0] = d[0] - d1;
        t.record(res(f, d) == res(g1, e1) * res(g2, e2), where);
        break;
      }
      case Axiom::Elementary: {
        std::sort(d.rbegin(), d.rend());
        auto f = forms(rng, d);
        auto g = f;
        g[0] = f[0] + testutil::random_form(rng, slots(n), d[0] - d[1], 5) * f[1];
        t.record(res(g, d) == res(f, d), where);
        break;
      }
      case Axiom::BaseChange: {
        auto f = forms(rng, d);
        ExactMatrix<BigInt> A(n);
        do {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = BigInt(rng.uniform(-2, 2));
        } while (det_bareiss(A).is_zero());
        std::map<int, P> bind;
        for (std::size_t i = 0; i < n; ++i) {
          P img;
          for (std::size_t j = 0; j < n; ++j) img = img + P::var(kX1 + static_cast<int>(j)).scale(A(i, j));
          bind.emplace(kX1 + static_cast<int>(i), img);
        }
        auto g = f;
        for (auto& p : g) p = mp_substitute(p, bind);
        BigInt expect = pow(det_bareiss(A), static_cast<unsigned long>(prod(d))) * res(f, d);
        t.record(res(g, d) == expect, where);
        break;
      }
      case Axiom::Homogeneity: {
        auto f = forms(rng, d);
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, n - 1));
        BigInt s(rng.uniform(2, 5));
        auto g = f;
        g[i] = g[i].scale(s);
        t.record(res(g, d) == pow(s, static_cast<unsigned long>(prod(d) / d[i])) * res(f, d), where);
        break;
      }
      case Axiom::Isobarity: {
        // Xn -> s Xn multiplies each coefficient by s^(its Xn exponent).
        auto f = forms(rng, d);
        BigInt s(rng.uniform(2, 4));
        int last = kX1 + static_cast<int>(n) - 1;
        auto g = f;
        for (auto& p : g) p = mp_substitute(p, {{last, P::var(last).scale(s)}});
        t.record(res(g, d) == pow(s, static_cast<unsigned long>(prod(d))) * res(f, d), where);
        break;
      }
      case Axiom::LinearDet: {
        std::vector<int> ones(n, 1);
        auto f = forms(rng, ones);
        ExactMatrix<BigInt> C(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) C(i, j) = f[i].coeff(Monomial::var(kX1 + static_cast<int>(j), 1));
        t.record(res(f, ones) == det_cofactor(C), "linear forms, n = " + std::to_string(n));
        break;
      }
      case Axiom::PolarDisc: {
        // Res(d2P, d3P, P) = Disc(P) Disc_X3(P(0,1,X3)) and the X3 = 0 analogue with d1P, d2P.
        int deg = 2 + trial % 3;
        P p = testutil::random_form(rng, slots(3), deg, 5);
        auto on_line = [&](int zero, int one, int free) {
          return mp_as_declared(mp_substitute(p, {{zero, P()}, {one, P(1)}}), free, deg);
        };
        auto v = on_line(kX1, kX2, kX3), w = on_line(kX3, kX2, kX1);
        if (v.coeffs[deg].is_zero_poly() || w.coeffs[deg].is_zero_poly()) break;
        BigInt disc = disc_ternary(p, deg);
        BigInt a = mres<BigInt>({mp_partial(p, kX2), mp_partial(p, kX3), p}, {deg - 1, deg - 1, deg}, slots(3));
        BigInt b = mres<BigInt>({mp_partial(p, kX1), mp_partial(p, kX2), p}, {deg - 1, deg - 1, deg}, slots(3));
        t.record(a == disc * disc_uni(constant_coeffs(v), deg) && b == disc * disc_uni(constant_coeffs(w), deg),
                 "Res(d2P, d3P, P) at degree " + std::to_string(deg) + " on " + p.str());
        break;
      }
    }
  }
  return t;
}

std::string delta_law_name(DeltaLaw l) {
  switch (l) {
    case DeltaLaw::Eq1: return "delta = d3 + (X4-X3) delta^2";
    case DeltaLaw::Eq2: return "2 delta^2 = d3^2 + 2 (X4-X3) delta^3";
    case DeltaLaw::ProductRule: return "delta(LQ) product rule";
    case DeltaLaw::SecondProductRule: return "delta^2(LQ) product rule";
    case DeltaLaw::Taylor: return "Taylor telescoping";
    case DeltaLaw::FactorialDerivative: return "k! delta^k = d3^k on the diagonal";
    case DeltaLaw::DiagonalIsPartial: return "delta on the diagonal = d3";
  }
  return "?";
}

Tally delta_law(DeltaLaw l, int n_polys, int max_deg, std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  const std::vector<int> xyz{kX1, kX2, kX3};
  const P h = P::var(kX4) - P::var(kX3);
  for (int i = 0; i < n_polys; ++i) {
    int deg = static_cast<int>(rng.uniform(0, max_deg));
    P p = testutil::random_poly(rng, xyz, deg, false);
    std::string where = delta_law_name(l) + " on " + p.str();
    P d3 = mp_partial(p, kX3);
    switch (l) {
      case DeltaLaw::Eq1:
        t.record(dl(p) == d3 + h * dl(p, 2), where);
        break;
      case DeltaLaw::Eq2: {
        bool a = dl(p, 2).scale(BigInt(2)) == mp_partial(d3, kX3) + h.scale(BigInt(2)) * dl(p, 3);
        // Second form: (X4-X3)^2 delta^2 P = P(X4) - P(X3) - (X4-X3) d3P.
        bool b = h * h * dl(p, 2) == at_x4(p) - p - h * d3;
        t.record(a && b, where);
        break;
      }
      case DeltaLaw::ProductRule:
      case DeltaLaw::SecondProductRule: {
        int split = static_cast<int>(rng.uniform(0, deg));
        P L = testutil::random_poly(rng, xyz, split, false), Q = testutil::random_poly(rng, xyz, deg - split, false);
        bool ok = l == DeltaLaw::ProductRule
                      ? dl(L * Q) == dl(L) * Q + at_x4(L) * dl(Q)
                      : dl(L * Q, 2) == dl(L, 2) * Q + dl(L) * mp_partial(Q, kX3) + at_x4(L) * dl(Q, 2);
        t.record(ok, delta_law_name(l) + " on L = " + L.str() + ", Q = " + Q.str());
        break;
      }
      case DeltaLaw::Taylor: {
        // P(X4) = P + sum_{k<n} (X4-X3)^k delta^k P|diag + (X4-X3)^n delta^n P for every n.
        bool ok = true;
        P partial = p, pw(1);
        for (int n = 1; n <= deg + 1; ++n) {
          P pn = pw * h;
          ok = ok && at_x4(p) == partial + pn * dl(p, n);
          partial = partial + pn * x4_to_x3(dl(p, n));
          pw = pn;
        }
        t.record(ok && dl(p, deg + 1).is_zero_poly(), where);
        break;
      }
      case DeltaLaw::FactorialDerivative: {
        bool ok = true;
        P dk = p;
        BigInt fact(1);
        for (int k = 1; k <= deg + 1; ++k) {
          dk = mp_partial(dk, kX3);
          fact = fact * BigInt(k);
          ok = ok && x4_to_x3(dl(p, k)).scale(fact) == dk;
        }
        t.record(ok, where);
        break;
      }
      case DeltaLaw::DiagonalIsPartial:
        t.record(x4_to_x3(dl(p)) == d3 && mp_delta(p, kX3, kX3) == d3, where);
        break;
    }
  }
  return t;
}

}  // namespace checks
