#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elimkit/macaulay.hpp"

namespace elimkit {

enum class IdentityId { I1 = 1, I2, I3, I4, I5, I6, I7, I8, I9, I10, I11, I12, I13, I14 };

std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& s);
std::vector<IdentityId> all_identities();

// Degrees of the polynomials an identity consumes, from its degree tuple.
// For I9..I13 this is {d}; for I14 it is {1, d-1} (the pair L, Q).
std::vector<int> poly_degrees(IdentityId id, const std::vector<int>& degrees);
// Empty string if the tuple is admissible, otherwise the violated hypothesis.
std::string check_hypotheses(IdentityId id, const std::vector<int>& degrees);

// P = sum U_{i,j} X1^i X2^j X3^{d-i-j}; coefficient slots listed as (i, j).
std::vector<std::pair<int, int>> coefficient_slots(int d);

template <class R>
MultiPoly<R> generic_form(int d, const std::vector<R>& coeffs) {
  auto slots = coefficient_slots(d);
  std::vector<typename MultiPoly<R>::Term> terms;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    Monomial m;
    m.e[kX1] = static_cast<std::uint16_t>(slots[s].first);
    m.e[kX2] = static_cast<std::uint16_t>(slots[s].second);
    m.e[kX3] = static_cast<std::uint16_t>(d - slots[s].first - slots[s].second);
    terms.push_back({m, coeffs[s]});
  }
  return MultiPoly<R>::from_terms(std::move(terms));
}

template <class R>
struct Check {
  std::string name;
  R lhs, rhs;
};

template <class R>
struct Evaluation {
  std::vector<Check<R>> checks;
  // The statement exactly as printed, where it differs from what checks test
  // (I6 sign, I13 power of 2). Reported, never part of the verdict.
  std::vector<Check<R>> printed;
  // Named sides, intermediate resultants and extracted factors.
  std::vector<std::pair<std::string, R>> quantities;

  const R* find(const std::string& name) const {
    for (const auto& [k, v] : quantities)
      if (k == name) return &v;
    return nullptr;
  }
  bool all_equal() const {
    for (const auto& c : checks)
      if (!(c.lhs == c.rhs)) return false;
    return true;
  }
};

// Computes every side of the identity. Throws DegenerateInput for a
// specialization violating a genericity hypothesis, NotDivisible/NotASquare
// when a claimed exact division or square fails.
template <class R>
Evaluation<R> evaluate_identity(IdentityId id, const std::vector<int>& degrees, const std::vector<MultiPoly<R>>& polys);

extern template Evaluation<BigInt> evaluate_identity(IdentityId, const std::vector<int>&,
                                                     const std::vector<MultiPoly<BigInt>>&);
extern template Evaluation<UniPoly> evaluate_identity(IdentityId, const std::vector<int>&,
                                                      const std::vector<MultiPoly<UniPoly>>&);

// Named factor extraction (also used by the showcase).
template <class R>
R extract_T(const MultiPoly<R>& P1, int d1, const MultiPoly<R>& P2, int d2);
template <class R>
R extract_D(const MultiPoly<R>& P1, int d1, const MultiPoly<R>& P2, int d2);
template <class R>
R extract_F(const MultiPoly<R>& P, int d);
template <class R>
R extract_U(const MultiPoly<R>& P, int d);
template <class R>
R script_R(const MultiPoly<R>& P, int d);

// Symbolic check of I1 at degrees (1,1,1,1) over the ring of the twelve
// coefficients: both sides and the 4x4 determinant of the coefficients.
struct SymbolicI1 {
  std::string lhs, rhs, det;
  bool equal = false;
};
SymbolicI1 symbolic_i1();

}  // namespace elimkit
