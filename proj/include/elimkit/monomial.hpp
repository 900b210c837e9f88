#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace elimkit {

constexpr int kMaxVars = 16;

// Slot layout used throughout: projective variables X1..X4, then the
// parameter x and the probe variable t.
constexpr int kX1 = 0, kX2 = 1, kX3 = 2, kX4 = 3, kXParam = 4, kT = 5;
constexpr int kNumNamedSlots = 6;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial var(int slot, int power = 1) {
    Monomial m;
    m.e[slot] = static_cast<std::uint16_t>(power);
    return m;
  }
  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool divisible_by(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < o.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  // Caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Graded reverse lexicographic: higher degree first, then the monomial whose
// last differing exponent is smaller.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace elimkit
