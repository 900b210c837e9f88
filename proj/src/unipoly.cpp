#include "elimkit/unipoly.hpp"

#include <sstream>

#include "elimkit/errors.hpp"

namespace elimkit {

UniPoly::UniPoly(const BigInt& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigInt& UniPoly::lead() const {
  static const BigInt zero(0);
  return c_.empty() ? zero : c_.back();
}

BigInt UniPoly::eval(const BigInt& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.mpz();
    acc += it->mpz();
  }
  return BigInt(std::move(acc));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * BigInt(static_cast<long>(k));
  return UniPoly(std::move(d));
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c.is_zero()) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  std::vector<BigInt> r(big);
  for (std::size_t k = 0; k < small.size(); ++k) r[k] += small[k];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<BigInt> r(a.c_.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = -a.c_[k];
  UniPoly p;
  p.c_ = std::move(r);
  return p;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].mpz().get_mpz_t(), b.c_[j].mpz().get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(r.size());
  for (auto& v : r) out.emplace_back(std::move(v));
  return UniPoly(std::move(out));
}

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

UniPoly upoly_exact_div(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return UniPoly();
  int da = a.degree(), db = b.degree();
  if (da < db) throw NotDivisible(a.str() + " / " + b.str());
  std::vector<mpz_class> rem(a.coeffs().size());
  for (std::size_t k = 0; k < rem.size(); ++k) rem[k] = a.coeffs()[k].mpz();
  std::vector<BigInt> q(da - db + 1);
  const mpz_class& lb = b.lead().mpz();
  for (int k = da - db; k >= 0; --k) {
    mpz_class& top = rem[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw NotDivisible(a.str() + " / " + b.str());
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (sgn(c) != 0)
      for (int j = 0; j <= db; ++j)
        mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].mpz().get_mpz_t());
    q[k] = BigInt(std::move(c));
  }
  for (int k = 0; k < db; ++k)
    if (sgn(rem[k]) != 0) throw NotDivisible(a.str() + " / " + b.str());
  return UniPoly(std::move(q));
}

UniPoly upoly_sqrt(const UniPoly& a) {
  if (a.is_zero()) return UniPoly();
  int n = a.degree();
  if (n % 2 != 0) throw NotASquare("odd degree " + std::to_string(n));
  if (a.lead().sign() < 0 || !is_perfect_square(a.lead())) throw NotASquare("leading coefficient " + a.lead().str());
  int h = n / 2;
  std::vector<BigInt> s(h + 1);
  s[h] = sqrt_exact(a.lead());
  BigInt two_lead = BigInt(2) * s[h];
  // s[h-j] from the coefficient of x^(n-j), top down.
  for (int j = 1; j <= h; ++j) {
    mpz_class acc = a.coeff(n - j).mpz();
    for (int i = 1; i < j; ++i) mpz_submul(acc.get_mpz_t(), s[h - i].mpz().get_mpz_t(), s[h - j + i].mpz().get_mpz_t());
    if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.mpz().get_mpz_t())) throw NotASquare(a.str());
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), two_lead.mpz().get_mpz_t());
    s[h - j] = BigInt(std::move(c));
  }
  UniPoly root(std::move(s));
  if (!(root * root == a)) throw NotASquare(a.str());
  return root;
}

BigInt interpolation_node(std::size_t k) {
  long m = static_cast<long>((k + 1) / 2);
  return BigInt(k % 2 == 1 ? m : -m);
}

UniPoly interpolate(const std::vector<BigInt>& values) {
  std::size_t n = values.size();
  if (n == 0) return UniPoly();
  std::vector<mpz_class> nodes(n), dd(n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes[k] = interpolation_node(k).mpz();
    dd[k] = values[k].mpz();
  }
  // In-place divided differences: dd[k] becomes f[x_0..x_k].
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      mpz_class num = dd[k] - dd[k - 1];
      mpz_class den = nodes[k] - nodes[k - level];
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NotDivisible("interpolation: degree bound too small or non-integer data");
      mpz_divexact(dd[k].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // Horner in Newton form.
  std::vector<mpz_class> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<mpz_class> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      mpz_submul(next[i].get_mpz_t(), acc[i].get_mpz_t(), nodes[k].get_mpz_t());
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return UniPoly(std::move(out));
}

}  // namespace elimkit
