#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "elimkit/harness.hpp"
#include "elimkit/parse.hpp"
#include "elimkit/showcase.hpp"
#include "json.hpp"

namespace elimkit {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("ELIMKIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError(std::string("ELIMKIT_SEED is not an unsigned integer: ") + s);
    }
  }
  return 1;
}

int slot_of(const std::string& name) {
  auto s = var_slot(name);
  if (!s) throw UsageError("unknown variable '" + name + "'");
  return *s;
}

struct Inputs {
  std::vector<MultiPoly<BigInt>> polys;
  VarNamer namer = default_var_name;
};

Inputs parse_all(const std::vector<std::string>& texts) {
  Inputs in;
  bool corollary = false;
  for (const auto& t : texts) {
    auto p = parse_poly(t);
    corollary = corollary || p.corollary_names;
    in.polys.push_back(std::move(p.poly));
  }
  if (corollary) in.namer = corollary_var_name;
  return in;
}

void need(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw UsageError(std::string(what) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
}

void emit(std::ostream& out, bool json, const std::string& cmd, const std::string& result) {
  if (json)
    out << ordered_json{{"command", cmd}, {"result", result}}.dump(2) << "\n";
  else
    out << result << "\n";
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      d.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad degree list '" + s + "'");
    }
  }
  if (d.empty()) throw UsageError("empty degree list");
  return d;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"elimkit: exact resultants, discriminants and iterated-elimination identities"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string var;
  std::vector<int> degs;
  std::vector<std::string> texts;

  auto* res = app.add_subcommand("res", "Sylvester resultant in one variable, declared degrees");
  auto* sres = app.add_subcommand("sres1", "principal subresultant in one variable");
  for (auto* c : {res, sres}) {
    c->add_option("--var", var, "elimination variable")->required();
    c->add_option("--deg", degs, "declared degree of each input (twice)")->required()->allow_extra_args(false)->delimiter(',');
    c->add_option("polys", texts, "two polynomials")->required();
  }
  auto* disc = app.add_subcommand("disc", "univariate discriminant Res(P, P')/lc");
  disc->add_option("--var", var)->required();
  disc->add_option("--deg", degs)->required()->allow_extra_args(false)->delimiter(',');
  disc->add_option("polys", texts)->required();

  std::string vars_csv;
  auto* mres_cmd = app.add_subcommand("mres", "Macaulay resultant of n forms in n variables (x is a parameter)");
  mres_cmd->add_option("--deg", degs)->required()->allow_extra_args(false)->delimiter(',');
  mres_cmd->add_option("--vars", vars_csv, "comma-separated variables, default X1..Xn");
  mres_cmd->add_option("polys", texts)->required();

  auto* disc3 = app.add_subcommand("disc3", "discriminant of a ternary form in X1, X2, X3");
  disc3->add_option("--deg", degs)->required()->allow_extra_args(false)->delimiter(',');
  disc3->add_option("polys", texts)->required();
  auto* disc2 = app.add_subcommand("disc2", "discriminant of a pair of ternary forms");
  disc2->add_option("--deg", degs)->required()->allow_extra_args(false)->delimiter(',');
  disc2->add_option("polys", texts)->required();

  std::string from = "X3", to = "X4";
  int k = 1;
  auto* delta = app.add_subcommand("delta", "divided difference (P(from) - P(to))/(from - to), k-th Taylor step");
  delta->add_option("--from", from);
  delta->add_option("--to", to);
  delta->add_option("--k", k)->check(CLI::PositiveNumber);
  delta->add_option("polys", texts)->required();

  std::string id_text, degrees_text, mode_text = "integer";
  int trials = 20, zx_trials = 3, coeff_bound = 10, probe = 0;
  std::optional<std::uint64_t> seed_opt;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run specialization trials of one identity");
  verify->add_option("identity", id_text, "I1..I14")->required();
  verify->add_option("--degrees", degrees_text, "comma-separated degree tuple")->required();
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed_opt);
  verify->add_option("--mode", mode_text, "integer | zx | tprobe");
  verify->add_option("--coeff-bound", coeff_bound)->check(CLI::Range(2, 1 << 20));
  verify->add_option("--probe-component", probe)->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", timings, "fill timings_ms");

  auto* verify_all = app.add_subcommand("verify-all", "run the identity suite in integer and zx modes");
  verify_all->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  verify_all->add_option("--zx-trials", zx_trials)->check(CLI::NonNegativeNumber);
  verify_all->add_option("--seed", seed_opt);
  verify_all->add_option("--coeff-bound", coeff_bound)->check(CLI::Range(2, 1 << 20));
  verify_all->add_flag("--timings", timings);

  auto* quartic = app.add_subcommand("example-quartic", "iterated discriminant of the worked quartic surface");

  for (auto* c : app.get_subcommands({})) c->add_flag("--json", json);

  std::vector<std::string> args(argv + 1, argv + argc);
  // No short options besides -h, so "-y^2+z" is an expression; a leading blank keeps CLI11 off it.
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (res->parsed() || sres->parsed()) {
      need(texts.size(), 2, "polynomials");
      need(degs.size(), 2, "--deg values");
      auto in = parse_all(texts);
      int v = slot_of(var);
      auto spec = sylvester_spec(mp_as_declared(in.polys[0], v, degs[0]), mp_as_declared(in.polys[1], v, degs[1]));
      if (sres->parsed() && degs[0] + degs[1] < 3) throw UsageError("sres1 needs deg sum >= 3");
      auto r = res->parsed() ? res_uni(spec) : sres1(spec);
      emit(out, json, res->parsed() ? "res" : "sres1", r.str(in.namer));
      return 0;
    }
    if (disc->parsed()) {
      need(texts.size(), 1, "polynomials");
      need(degs.size(), 1, "--deg values");
      auto in = parse_all(texts);
      emit(out, json, "disc", disc_uni(mp_as_declared(in.polys[0], slot_of(var), degs[0])).str(in.namer));
      return 0;
    }
    if (mres_cmd->parsed()) {
      std::size_t n = texts.size();
      if (n < 2 || n > 4) throw UsageError("mres takes 2 to 4 polynomials");
      need(degs.size(), n, "--deg values");
      std::vector<int> vars;
      if (vars_csv.empty()) {
        for (std::size_t i = 0; i < n; ++i) vars.push_back(kX1 + static_cast<int>(i));
      } else {
        std::stringstream ss(vars_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) vars.push_back(slot_of(tok));
        need(vars.size(), n, "--vars entries");
      }
      for (int v : vars)
        if (v == kXParam) throw UsageError("x is the coefficient parameter, not a resultant variable");
      auto in = parse_all(texts);
      std::vector<MultiPoly<UniPoly>> lifted;
      for (const auto& p : in.polys) lifted.push_back(lift_parameter(p));
      emit(out, json, "mres", mres<UniPoly>(lifted, degs, vars).str("x"));
      return 0;
    }
    if (disc3->parsed() || disc2->parsed()) {
      std::size_t n = disc3->parsed() ? 1 : 2;
      need(texts.size(), n, "polynomials");
      need(degs.size(), n, "--deg values");
      auto in = parse_all(texts);
      std::vector<MultiPoly<UniPoly>> lifted;
      for (const auto& p : in.polys) lifted.push_back(lift_parameter(p));
      UniPoly r = n == 1 ? disc_ternary(lifted[0], degs[0]) : disc_pair(lifted[0], degs[0], lifted[1], degs[1]);
      emit(out, json, n == 1 ? "disc3" : "disc2", r.str("x"));
      return 0;
    }
    if (delta->parsed()) {
      need(texts.size(), 1, "polynomials");
      auto in = parse_all(texts);
      emit(out, json, "delta", mp_delta_pow(in.polys[0], slot_of(from), slot_of(to), k).str(in.namer));
      return 0;
    }
    if (verify->parsed()) {
      auto id = parse_identity(id_text);
      if (!id) throw UsageError("unknown identity '" + id_text + "'");
      auto degrees = parse_degrees(degrees_text);
      std::string bad = check_hypotheses(*id, degrees);
      if (!bad.empty()) throw UsageError(identity_name(*id) + ": " + bad);
      auto mode = parse_mode(mode_text);
      if (!mode) throw UsageError("unknown mode '" + mode_text + "'");
      if (*mode == Mode::TScalingProbe && probe >= static_cast<int>(poly_degrees(*id, degrees).size()))
        throw UsageError("--probe-component out of range");
      SpecializationSpec spec{*mode, seed_opt ? *seed_opt : default_seed(), coeff_bound, probe};
      auto s = run_trials(*id, degrees, trials, spec);
      out << report_json(s, timings) << "\n";
      return s.ok() ? 0 : 1;
    }
    if (verify_all->parsed()) {
      std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
      ordered_json all = ordered_json::array();
      bool ok = true;
      for (auto [id, degrees] : identity_suite()) {
        for (auto [mode, n] : {std::pair{Mode::Integer, trials}, std::pair{Mode::UniPolyInX, zx_trials}}) {
          if (n == 0) continue;
          auto s = run_trials(id, degrees, n, SpecializationSpec{mode, seed, coeff_bound, 0});
          ok = ok && s.ok();
          all.push_back(ordered_json::parse(report_json(s, timings)));
        }
      }
      out << all.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    if (quartic->parsed()) {
      auto q = quartic_showcase();
      if (json) {
        ordered_json j;
        j["f"] = q.f;
        j["disc_z_y_degree"] = q.disc_z_y_degree;
        j["disc_disc"] = q.disc_disc.str("x");
        ordered_json fs = ordered_json::array();
        for (const auto& f : q.report.factors)
          fs.push_back({{"factor", f.poly.str("x")}, {"multiplicity", f.multiplicity}, {"label", f.label}});
        j["factors"] = fs;
        j["product_matches"] = q.report.product_ok;
        j["Disc"] = q.disc.str("x");
        j["F"] = q.flex.str("x");
        j["U"] = q.pleat.str("x");
        j["DD = 2^24 a Disc F^3 U^2"] = q.catalog_form_ok;
        j["DD = a Disc F^3 U^2"] = q.printed_form_ok;
        j["ok"] = q.ok();
        out << j.dump(2) << "\n";
      } else {
        out << "f = " << q.f << "\n";
        out << "Disc_z(f) has y-degree " << q.disc_z_y_degree << "\n";
        out << "Disc_y(Disc_z(f)) =\n";
        for (const auto& f : q.report.factors)
          out << "  (" << f.poly.str("x") << ")^" << f.multiplicity << "  [" << f.label << "]\n";
        out << "product matches: " << (q.report.product_ok ? "yes" : "NO") << "\n";
        out << "Disc(f) = " << q.disc.str("x") << "\n";
        out << "F(f) = " << q.flex.str("x") << "\n";
        out << "U(f) = " << q.pleat.str("x") << "\n";
        out << "DD = 2^24 a Disc F^3 U^2: " << (q.catalog_form_ok ? "holds" : "fails") << "\n";
        out << "DD = a Disc F^3 U^2: " << (q.printed_form_ok ? "holds" : "fails") << "\n";
      }
      return q.ok() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace elimkit
