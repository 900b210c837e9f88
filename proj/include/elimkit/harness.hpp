#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elimkit/identities.hpp"

namespace elimkit {

// xoshiro256** seeded through splitmix64; the sequence is fixed across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform on [lo, hi], rejection sampled.
  long long uniform(long long lo, long long hi);

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);
// Seed of the index-th child stream of base.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class Mode { Integer, UniPolyInX, TScalingProbe };
std::string mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct SpecializationSpec {
  Mode mode = Mode::Integer;
  std::uint64_t seed = 0;
  int coeff_bound = 10;
  int probe_component = 0;  // TScalingProbe only
};

// assignment[k][s] is the value of the s-th coefficient_slots entry of polynomial k;
// a constant in Integer mode, a polynomial in x or t otherwise.
using CoefficientAssignment = std::vector<std::vector<UniPoly>>;

CoefficientAssignment gen_specialization(const std::vector<int>& poly_degs, const SpecializationSpec& spec);
std::vector<MultiPoly<BigInt>> integer_polys(const CoefficientAssignment& a, const std::vector<int>& poly_degs);
std::vector<MultiPoly<UniPoly>> uni_polys(const CoefficientAssignment& a, const std::vector<int>& poly_degs);

struct DegreeContract {
  std::string quantity;  // name in Evaluation::quantities
  int component;         // which polynomial's coefficients carry t
  int expected;
  std::optional<int> printed;  // set when the printed exponent differs from the derived one
};
std::vector<DegreeContract> degree_contracts(IdentityId id, const std::vector<int>& degrees);

struct DegreeResult {
  bool ok = false;
  int observed = -1;  // exponent of t, -1 if the quantity is not a monomial in t
  std::string detail;
};
// Runs the t-scaling probe and checks quantity == t^expected * (t-free value).
DegreeResult check_degree(IdentityId id, const std::vector<int>& degrees, const std::string& quantity,
                          int component, int expected, std::uint64_t seed, int coeff_bound = 10);

struct TrialFailure {
  std::uint64_t seed;
  std::string detail;
};

struct TrialSummary {
  IdentityId id = IdentityId::I1;
  std::vector<int> degrees;
  Mode mode = Mode::Integer;
  std::uint64_t seed = 0;
  int trials = 0;
  int rerolls = 0;
  std::vector<TrialFailure> failures;
  std::vector<std::string> warnings;
  // Counts of trials where the statement as printed held, per printed check name.
  std::vector<std::pair<std::string, int>> printed_held;
  double wall_ms = 0;

  bool ok() const { return failures.empty() && warnings.empty(); }
};

constexpr int kMaxRerolls = 32;

// Smallest admissible tuples per identity, the standing regression suite.
std::vector<std::pair<IdentityId, std::vector<int>>> identity_suite();

TrialSummary run_trials(IdentityId id, const std::vector<int>& degrees, int n_trials, const SpecializationSpec& spec);

// {identity, degrees, mode, seed, trials, failures:[{seed, detail}], timings_ms, ...}.
// timings_ms is null unless with_timings, keeping reruns byte-identical.
std::string report_json(const TrialSummary& s, bool with_timings);

}  // namespace elimkit
