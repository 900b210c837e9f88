#include "elimkit/bigint.hpp"

#include "elimkit/errors.hpp"

namespace elimkit {

BigInt::BigInt(const std::string& decimal) {
  if (v_.set_str(decimal, 10) != 0) throw ParseError("bad integer literal '" + decimal + "'");
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw NotDivisible("division by zero");
  if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t()))
    throw NotDivisible(a.str() + " / " + b.str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt pow(const BigInt& a, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.mpz().get_mpz_t(), e);
  return BigInt(std::move(r));
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.mpz()))); }

bool is_perfect_square(const BigInt& a) {
  return a.sign() >= 0 && mpz_perfect_square_p(a.mpz().get_mpz_t());
}

BigInt sqrt_exact(const BigInt& a) {
  if (!is_perfect_square(a)) throw NotASquare(a.str());
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

}  // namespace elimkit
