#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "elimkit/bigint.hpp"
#include "elimkit/errors.hpp"
#include "elimkit/monomial.hpp"
#include "elimkit/ring.hpp"
#include "elimkit/unipoly.hpp"

namespace elimkit {

// Coefficient printing: simple coefficients print bare, compound ones in parentheses.
inline std::string coeff_str(const BigInt& c) { return c.str(); }
inline std::string coeff_str(const UniPoly& c) { return c.str(); }
inline bool coeff_is_atomic(const BigInt&) { return true; }
inline bool coeff_is_atomic(const UniPoly& c) { return c.is_constant(); }

template <class R>
class MultiPoly;
template <class R>
std::string coeff_str(const MultiPoly<R>& c);
template <class R>
bool coeff_is_atomic(const MultiPoly<R>& c);

using VarNamer = std::function<std::string(int)>;
std::string default_var_name(int slot);

// Sparse polynomial, terms kept in descending grevlex order with no zero coefficients.
template <class R>
class MultiPoly {
 public:
  struct Term {
    Monomial m;
    R c;
  };

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(R(c)) {}
  MultiPoly(const R& c) {
    if (!is_zero(c)) t_.push_back({Monomial{}, c});
  }

  static MultiPoly var(int slot, int power = 1) { return monomial(Monomial::var(slot, power), R(1)); }
  static MultiPoly monomial(const Monomial& m, const R& c) {
    MultiPoly p;
    if (!is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  // Sorts and merges arbitrary terms into canonical form.
  static MultiPoly from_terms(std::vector<Term> terms) {
    MultiPoly p;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return GrevlexGreater{}(a.m, b.m); });
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c = p.t_.back().c + t.c;
      } else {
        if (!p.t_.empty() && is_zero(p.t_.back().c)) p.t_.pop_back();
        p.t_.push_back(std::move(t));
      }
    }
    if (!p.t_.empty() && is_zero(p.t_.back().c)) p.t_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  std::size_t num_terms() const { return t_.size(); }
  bool is_zero_poly() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  R constant_value() const { return t_.empty() || !t_.back().m.is_one() ? R(0) : t_.back().c; }
  const Term& leading() const { return t_.front(); }

  R coeff(const Monomial& m) const {
    for (const auto& t : t_)
      if (t.m == m) return t.c;
    return R(0);
  }
  int total_degree() const { return t_.empty() ? -1 : t_.front().m.degree(); }
  int degree_in(int slot) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& t : t_) d = std::max<int>(d, t.m.e[slot]);
    return d;
  }
  bool depends_on(int slot) const {
    for (const auto& t : t_)
      if (t.m.e[slot]) return true;
    return false;
  }
  // Degree counting only the given slots.
  int degree_over(const std::vector<int>& slots) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& t : t_) {
      int s = 0;
      for (int v : slots) s += t.m.e[v];
      d = std::max(d, s);
    }
    return d;
  }
  bool is_homogeneous_over(const std::vector<int>& slots, int deg) const {
    for (const auto& t : t_) {
      int s = 0;
      for (int v : slots) s += t.m.e[v];
      if (s != deg) return false;
    }
    return true;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<typename MultiPoly<S>::Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) out.push_back({t.m, f(t.c)});
    return MultiPoly<S>::from_terms(std::move(out));
  }
  template <class F>
  MultiPoly map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) out.push_back({f(t.m), t.c});
    return from_terms(std::move(out));
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.empty() || b.t_.empty()) return MultiPoly();
    if (b.t_.size() == 1 && b.t_[0].m.is_one()) return a.scale(b.t_[0].c);
    if (a.t_.size() == 1 && a.t_[0].m.is_one()) return b.scale(a.t_[0].c);
    std::unordered_map<Monomial, R, MonomialHash> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) {
        auto [it, fresh] = acc.try_emplace(x.m * y.m, R(0));
        it->second = it->second + x.c * y.c;
      }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!is_zero(c)) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& p, const Term& q) { return GrevlexGreater{}(p.m, q.m); });
    MultiPoly r;
    r.t_ = std::move(out);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }

  MultiPoly scale(const R& c) const {
    if (is_zero(c)) return MultiPoly();
    MultiPoly r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
      R v = t.c * c;
      if (!is_zero(v)) r.t_.push_back({t.m, std::move(v)});
    }
    return r;
  }
  MultiPoly mul_monomial(const Monomial& m) const {
    MultiPoly r = *this;
    for (auto& t : r.t_) t.m = t.m * m;
    return r;
  }

  std::string str(const VarNamer& name = default_var_name) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
      std::string mono;
      for (int i = 0; i < kMaxVars; ++i) {
        if (!t.m.e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += name(i);
        if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
      }
      std::string c = coeff_str(t.c);
      bool atomic = coeff_is_atomic(t.c);
      bool neg = atomic && !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (!atomic) c = "(" + c + ")";
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (mono.empty()) {
        os << c;
      } else if (c == "1") {
        os << mono;
      } else {
        os << c << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    GrevlexGreater gt;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && gt(a.t_[i].m, b.t_[j].m))) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || gt(b.t_[j].m, a.t_[i].m)) {
        r.t_.push_back({b.t_[j].m, subtract ? -b.t_[j].c : b.t_[j].c});
        ++j;
      } else {
        R c = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
        if (!is_zero(c)) r.t_.push_back({a.t_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> t_;
};

template <class R>
bool is_zero(const MultiPoly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
std::string coeff_str(const MultiPoly<R>& c) {
  return c.str();
}
template <class R>
bool coeff_is_atomic(const MultiPoly<R>& c) {
  return c.is_constant() && coeff_is_atomic(c.constant_value());
}

// Exact quotient; throws NotDivisible.
template <class R>
MultiPoly<R> exact_div(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  if (b.is_zero_poly()) throw NotDivisible("division by the zero polynomial");
  if (b.is_constant()) {
    R c = b.constant_value();
    return a.map_coeffs([&](const R& v) { return exact_div(v, c); });
  }
  std::vector<typename MultiPoly<R>::Term> q;
  MultiPoly<R> rem = a;
  const auto& lb = b.leading();
  while (!rem.is_zero_poly()) {
    const auto& lr = rem.leading();
    if (!lr.m.divisible_by(lb.m)) throw NotDivisible("multivariate quotient");
    typename MultiPoly<R>::Term t{lr.m / lb.m, exact_div(lr.c, lb.c)};
    rem = rem - b.mul_monomial(t.m).scale(t.c);
    q.push_back(std::move(t));
  }
  return MultiPoly<R>::from_terms(std::move(q));
}

template <class R>
MultiPoly<R> mp_pow(const MultiPoly<R>& p, unsigned e) {
  return ring_pow(p, e);
}

template <class R>
MultiPoly<R> mp_partial(const MultiPoly<R>& p, int slot) {
  std::vector<typename MultiPoly<R>::Term> out;
  for (const auto& t : p.terms()) {
    int k = t.m.e[slot];
    if (!k) continue;
    Monomial m = t.m;
    m.e[slot] = static_cast<std::uint16_t>(k - 1);
    out.push_back({m, t.c * R(k)});
  }
  return MultiPoly<R>::from_terms(std::move(out));
}

// (P - P|_{Xi:=Xj}) / (Xi - Xj), computed monomial by monomial; delta_{i,i} = d/dXi.
template <class R>
MultiPoly<R> mp_delta(const MultiPoly<R>& p, int i, int j) {
  if (i == j) return mp_partial(p, i);
  std::vector<typename MultiPoly<R>::Term> out;
  for (const auto& t : p.terms()) {
    int k = t.m.e[i];
    for (int l = 0; l < k; ++l) {
      Monomial m = t.m;
      m.e[i] = static_cast<std::uint16_t>(l);
      m.e[j] = static_cast<std::uint16_t>(m.e[j] + k - 1 - l);
      out.push_back({m, t.c});
    }
  }
  return MultiPoly<R>::from_terms(std::move(out));
}

// Taylor coefficients around Xi: P(Xj) = sum_k (Xj - Xi)^k D^k P with D^1 = delta_{i,j}.
// Each later step divides out in Xj towards Xi, so D^2 P = (delta P - dP/dXi) / (Xj - Xi).
template <class R>
MultiPoly<R> mp_delta_pow(const MultiPoly<R>& p, int i, int j, int k) {
  if (k <= 0) return p;
  MultiPoly<R> r = mp_delta(p, i, j);
  for (int s = 1; s < k; ++s) r = mp_delta(r, j, i);
  return r;
}

// Simultaneous substitution of the bound slots.
template <class R>
MultiPoly<R> mp_substitute(const MultiPoly<R>& p, const std::map<int, MultiPoly<R>>& bindings) {
  std::map<std::pair<int, int>, MultiPoly<R>> powers;
  auto power = [&](int slot, int e) -> const MultiPoly<R>& {
    auto key = std::make_pair(slot, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MultiPoly<R> v = ring_pow(bindings.at(slot), static_cast<unsigned>(e));
    return powers.emplace(key, std::move(v)).first->second;
  };
  MultiPoly<R> out;
  std::vector<typename MultiPoly<R>::Term> plain;
  for (const auto& t : p.terms()) {
    Monomial rest = t.m;
    MultiPoly<R> factor(R(1));
    bool touched = false;
    for (const auto& [slot, val] : bindings) {
      int e = t.m.e[slot];
      if (!e) continue;
      rest.e[slot] = 0;
      factor = factor * power(slot, e);
      touched = true;
    }
    if (!touched) {
      plain.push_back(t);
      continue;
    }
    out = out + factor.mul_monomial(rest).scale(t.c);
  }
  return out + MultiPoly<R>::from_terms(std::move(plain));
}

// Rename slot `from` to slot `to` (used for P(X4) := P with X3 -> X4).
template <class R>
MultiPoly<R> mp_rename(const MultiPoly<R>& p, int from, int to) {
  return p.map_monomials([&](Monomial m) {
    m.e[to] = static_cast<std::uint16_t>(m.e[to] + m.e[from]);
    m.e[from] = 0;
    return m;
  });
}

// Homogenize with respect to `slots` (default: all slots except hvar).
template <class R>
MultiPoly<R> mp_homogenize(const MultiPoly<R>& p, int hvar, int target, std::vector<int> slots = {}) {
  if (slots.empty())
    for (int i = 0; i < kMaxVars; ++i)
      if (i != hvar) slots.push_back(i);
  if (p.depends_on(hvar)) throw DegreeExceeded("polynomial already involves the homogenizing variable");
  if (p.degree_over(slots) > target)
    throw DegreeExceeded("degree " + std::to_string(p.degree_over(slots)) + " > " + std::to_string(target));
  return p.map_monomials([&](Monomial m) {
    int s = 0;
    for (int v : slots) s += m.e[v];
    m.e[hvar] = static_cast<std::uint16_t>(target - s);
    return m;
  });
}

template <class R>
MultiPoly<R> mp_dehomogenize(const MultiPoly<R>& p, int hvar) {
  return p.map_monomials([&](Monomial m) {
    m.e[hvar] = 0;
    return m;
  });
}

// A polynomial seen as univariate in one slot with a declared degree;
// coeffs[k] multiplies var^k and never involves var.
template <class R>
struct DeclaredUniView {
  std::vector<MultiPoly<R>> coeffs;
  int var = 0;
  int declared_deg = 0;

  const MultiPoly<R>& operator[](int k) const { return coeffs[k]; }
  MultiPoly<R> to_poly() const {
    MultiPoly<R> r;
    for (int k = 0; k <= declared_deg; ++k) r = r + coeffs[k].mul_monomial(Monomial::var(var, k));
    return r;
  }
};

template <class R>
DeclaredUniView<R> mp_as_declared(const MultiPoly<R>& p, int var, int declared_deg) {
  if (declared_deg < 0) throw DegreeExceeded("negative declared degree");
  std::vector<std::vector<typename MultiPoly<R>::Term>> parts(declared_deg + 1);
  for (const auto& t : p.terms()) {
    int k = t.m.e[var];
    if (k > declared_deg)
      throw DegreeExceeded("degree " + std::to_string(p.degree_in(var)) + " exceeds declared " +
                           std::to_string(declared_deg));
    Monomial m = t.m;
    m.e[var] = 0;
    parts[k].push_back({m, t.c});
  }
  DeclaredUniView<R> v;
  v.var = var;
  v.declared_deg = declared_deg;
  for (auto& part : parts) v.coeffs.push_back(MultiPoly<R>::from_terms(std::move(part)));
  return v;
}

// Specialize the parameter slot of a polynomial over the integers into the
// coefficient ring Z[x].
MultiPoly<UniPoly> lift_parameter(const MultiPoly<BigInt>& p, int slot = kXParam);
MultiPoly<BigInt> eval_parameter(const MultiPoly<UniPoly>& p, const BigInt& x);

}  // namespace elimkit
