#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace elimkit {

// Thin value wrapper over GMP integers.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(static_cast<long>(v)) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v) : v_(static_cast<long>(v)) {}
  BigInt(unsigned long v) : v_(v) {}
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal);

  const mpz_class& mpz() const { return v_; }
  mpz_class& mpz() { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  std::string str() const { return v_.get_str(); }
  std::size_t bits() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.v_ > b.v_; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_.get_str(); }

 private:
  mpz_class v_;
};

// Throws NotDivisible when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& a, unsigned long e);
BigInt abs(const BigInt& a);
// Nonnegative square root; throws NotASquare.
BigInt sqrt_exact(const BigInt& a);
bool is_perfect_square(const BigInt& a);

}  // namespace elimkit
