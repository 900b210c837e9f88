#pragma once

#include <concepts>

#include "elimkit/bigint.hpp"

namespace elimkit {

inline bool is_zero(const BigInt& a) { return a.is_zero(); }

// What the determinant and resultant code needs from a coefficient ring.
template <class R>
concept ExactRing = requires(const R& a, const R& b) {
  { R(0) };
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { exact_div(a, b) } -> std::convertible_to<R>;
};

template <ExactRing R>
R ring_pow(const R& a, unsigned long e) {
  R result(1), base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace elimkit
