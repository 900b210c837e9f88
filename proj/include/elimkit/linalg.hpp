#pragma once

#include "elimkit/matrix.hpp"
#include "elimkit/multipoly.hpp"

namespace elimkit {

inline constexpr std::size_t kCofactorLimit = 12;

// Determinant of a matrix of polynomials: constant matrices drop to the
// coefficient ring, small ones use memoized cofactors, the rest Bareiss.
template <class R>
MultiPoly<R> det(const ExactMatrix<MultiPoly<R>>& m) {
  bool constant = true;
  for (std::size_t i = 0; i < m.size() && constant; ++i)
    for (std::size_t j = 0; j < m.size() && constant; ++j) constant = m(i, j).is_constant();
  if (constant) return MultiPoly<R>(det(m.map([](const MultiPoly<R>& p) { return p.constant_value(); })));
  if (m.size() <= kCofactorLimit) return det_cofactor(m);
  return det_bareiss(m);
}

}  // namespace elimkit
