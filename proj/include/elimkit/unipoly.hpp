#pragma once

#include <string>
#include <vector>

#include "elimkit/bigint.hpp"
#include "elimkit/ring.hpp"

namespace elimkit {

// Dense polynomial in one parameter, coeffs_[k] is the coefficient of x^k.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(BigInt(c)) {}
  UniPoly(const BigInt& c);
  explicit UniPoly(std::vector<BigInt> coeffs);

  static UniPoly x() { return UniPoly(std::vector<BigInt>{BigInt(0), BigInt(1)}); }
  static UniPoly monomial(const BigInt& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0); }
  const BigInt& lead() const;

  BigInt eval(const BigInt& x) const;
  UniPoly derivative() const;
  std::string str(const std::string& var = "x") const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

inline bool is_zero(const UniPoly& a) { return a.is_zero(); }

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b);
// q with a = q*b; throws NotDivisible on nonzero remainder.
UniPoly upoly_exact_div(const UniPoly& a, const UniPoly& b);
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return upoly_exact_div(a, b); }
// s with s*s = a and positive leading coefficient; throws NotASquare.
UniPoly upoly_sqrt(const UniPoly& a);

// Interpolation nodes 0, 1, -1, 2, -2, ...
BigInt interpolation_node(std::size_t k);
// Newton interpolation of values at the first values.size() nodes. Division
// steps are exact for integer polynomials; an inexact step throws NotDivisible.
UniPoly interpolate(const std::vector<BigInt>& values);

}  // namespace elimkit
