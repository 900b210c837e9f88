#pragma once

#include <optional>
#include <string>

#include "elimkit/multipoly.hpp"

namespace elimkit {

// Variables: X1..X4, and the corollary names y=X2, z=X3, zp (or z')=X4,
// the parameter x and the probe variable t.
struct ParsedPoly {
  MultiPoly<BigInt> poly;
  bool corollary_names = false;  // input used y, z or zp
};

ParsedPoly parse_poly(const std::string& text);

std::string corollary_var_name(int slot);
// Slot of a variable name accepted by parse_poly, if any.
std::optional<int> var_slot(const std::string& name);

// [{"exps":[e_X1, e_X2, e_X3, e_X4, e_x, e_t], "coeff":"decimal"}, ...] in grevlex order.
std::string mp_to_json(const MultiPoly<BigInt>& p);
MultiPoly<BigInt> mp_from_json(const std::string& text);

}  // namespace elimkit
