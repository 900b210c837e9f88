#pragma once

#include <ostream>
#include <vector>

#include "elimkit/harness.hpp"
#include "elimkit/parse.hpp"

namespace elimkit {
template <class R>
void PrintTo(const MultiPoly<R>& p, std::ostream* os) {
  *os << p.str();
}
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const BigInt& v, std::ostream* os) { *os << v.str(); }
}  // namespace elimkit

namespace testutil {

using namespace elimkit;

inline MultiPoly<BigInt> mp(const char* s) { return parse_poly(s).poly; }

// Random polynomial in the given slots with total degree <= deg (or == deg if homogeneous).
inline MultiPoly<BigInt> random_poly(Rng& rng, const std::vector<int>& slots, int deg, bool homogeneous,
                                     long long bound = 9) {
  std::vector<MultiPoly<BigInt>::Term> terms;
  std::vector<int> e(slots.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == slots.size()) {
      for (int last = homogeneous ? left : 0; last <= left; ++last) {
        Monomial m;
        for (std::size_t k = 0; k + 1 < slots.size(); ++k) m.e[slots[k]] = static_cast<std::uint16_t>(e[k]);
        m.e[slots[i]] = static_cast<std::uint16_t>(last);
        terms.push_back({m, BigInt(rng.uniform(-bound, bound))});
      }
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, deg);
  return MultiPoly<BigInt>::from_terms(std::move(terms));
}

inline MultiPoly<BigInt> random_form(Rng& rng, const std::vector<int>& slots, int deg, long long bound = 9) {
  return random_poly(rng, slots, deg, true, bound);
}

}  // namespace testutil
