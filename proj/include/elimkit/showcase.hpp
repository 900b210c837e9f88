#pragma once

#include <string>
#include <vector>

#include "elimkit/identities.hpp"

namespace elimkit {

struct Factor {
  UniPoly poly;
  int multiplicity = 1;
  std::string label;  // unit/leading, disc, fold-square, pleat-cube, other
};

struct FactorizationReport {
  std::string input;
  std::vector<Factor> factors;
  bool product_ok = false;  // product of factors^multiplicity equals the computed value
};

struct QuarticShowcase {
  std::string f;
  int disc_z_y_degree = -1;
  UniPoly disc_disc;  // Disc_y(Disc_z(f))
  UniPoly disc, flex, pleat;  // Disc(f), F(f), U(f) of the X1-homogenized form
  FactorizationReport report;
  bool multiplicities_ok = false;
  bool labels_ok = false;
  bool catalog_form_ok = false;  // DD = 2^(2d(d-1)) a Disc F^3 U^2
  bool printed_form_ok = false;  // DD = a Disc F^3 U^2
  bool ok() const { return disc_z_y_degree == 12 && report.product_ok && multiplicities_ok && labels_ok; }
};

QuarticShowcase quartic_showcase();

}  // namespace elimkit
