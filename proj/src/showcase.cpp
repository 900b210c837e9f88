#include "elimkit/showcase.hpp"

#include "elimkit/parse.hpp"

namespace elimkit {

namespace {

const char* kQuartic = "z^4 - y^3*z + 2*z^3 - y*z^2 - y^2 - x*z + 1";

UniPoly from_coeffs(std::initializer_list<long long> hi_to_lo) {
  std::vector<BigInt> c;
  for (long long v : hi_to_lo) c.insert(c.begin(), BigInt(v));
  return UniPoly(std::move(c));
}

bool divides(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) return true;
  try {
    upoly_exact_div(b, a);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace

QuarticShowcase quartic_showcase() {
  QuarticShowcase out;
  out.f = kQuartic;
  MultiPoly<UniPoly> f = lift_parameter(parse_poly(kQuartic).poly);

  MultiPoly<UniPoly> dz = disc_uni(mp_as_declared(f, kX3, 4));
  out.disc_z_y_degree = dz.degree_in(kX2);
  out.disc_disc = disc_uni(constant_coeffs(mp_as_declared(dz, kX2, 12)), 12);

  std::vector<Factor> fs = {
      {UniPoly(BigInt("5540271966595842048")), 1, "unit/leading"},
      {from_coeffs({14348907, -93002175, 273574017, -909290448, 2868603336, -5353192260, 9038030571, -17693165669,
                    17648229264, -4081683588, 218938829}),
       1, ""},
      {from_coeffs({1, -1}), 2, ""},
      {from_coeffs({125, -173}), 2, ""},
      {from_coeffs({47832147, 147495688, -245928792, -212731008, 230501936}), 3, ""},
  };
  UniPoly prod(BigInt(1));
  for (const auto& fc : fs) prod = prod * ring_pow(fc.poly, fc.multiplicity);
  out.report.input = std::string("Disc_y(Disc_z(") + kQuartic + "))";
  out.report.product_ok = prod == out.disc_disc;

  // Classify against the factors of the X1-homogenized quartic.
  MultiPoly<UniPoly> P = mp_homogenize(f, kX1, 4);
  out.disc = disc_ternary(P, 4);
  out.flex = extract_F(P, 4);
  out.pleat = extract_U(P, 4);
  for (auto& fc : fs) {
    if (!fc.label.empty()) continue;
    if (divides(fc.poly, out.disc))
      fc.label = "disc";
    else if (divides(fc.poly, out.pleat))
      fc.label = "fold-square";
    else if (divides(fc.poly, out.flex))
      fc.label = "pleat-cube";
    else
      fc.label = "other";
  }
  out.report.factors = fs;
  out.multiplicities_ok = fs[1].multiplicity == 1 && fs[2].multiplicity == 2 && fs[3].multiplicity == 2 &&
                          fs[4].multiplicity == 3;
  out.labels_ok = fs[1].label == "disc" && fs[2].label == "fold-square" && fs[3].label == "fold-square" &&
                  fs[4].label == "pleat-cube";

  UniPoly a = P.coeff(Monomial::var(kX3, 4));
  UniPoly rest = a * out.disc * ring_pow(out.flex, 3) * out.pleat * out.pleat;
  out.printed_form_ok = rest == out.disc_disc;
  out.catalog_form_ok = UniPoly(pow(BigInt(2), 24)) * rest == out.disc_disc;
  return out;
}

}  // namespace elimkit
