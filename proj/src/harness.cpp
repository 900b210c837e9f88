#include "elimkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

#include "json.hpp"

namespace elimkit {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t st = base ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(st);
  return splitmix64(st);
}

Rng::Rng(std::uint64_t seed) {
  for (auto& w : s_) w = splitmix64(seed);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t Rng::next() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

long long Rng::uniform(long long lo, long long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return lo + static_cast<long long>(r % span);
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Integer: return "integer";
    case Mode::UniPolyInX: return "zx";
    case Mode::TScalingProbe: return "tprobe";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "integer" || s == "int") return Mode::Integer;
  if (s == "zx" || s == "unipoly") return Mode::UniPolyInX;
  if (s == "tprobe" || s == "probe") return Mode::TScalingProbe;
  return std::nullopt;
}

CoefficientAssignment gen_specialization(const std::vector<int>& poly_degs, const SpecializationSpec& spec) {
  Rng rng(spec.seed);
  const long long B = spec.coeff_bound;
  auto nonzero = [&] {
    long long v;
    do v = rng.uniform(-B, B);
    while (v == 0);
    return v;
  };
  CoefficientAssignment out;
  for (std::size_t k = 0; k < poly_degs.size(); ++k) {
    std::vector<UniPoly> row;
    for (auto [i, j] : coefficient_slots(poly_degs[k])) {
      bool lead = i == 0 && j == 0;
      if (spec.mode == Mode::UniPolyInX) {
        // the X1 exponent bounds the x-degree: f(x, y, z) of total degree <= d, X1 homogenizing
        int cap = lead ? 0 : i;
        std::vector<BigInt> c(cap + 1);
        for (int e = 0; e < cap; ++e) c[e] = BigInt(rng.uniform(-B, B));
        c[cap] = BigInt(nonzero());
        row.push_back(UniPoly(std::move(c)));
      } else {
        UniPoly v(BigInt(lead ? nonzero() : rng.uniform(-B, B)));
        if (spec.mode == Mode::TScalingProbe && static_cast<int>(k) == spec.probe_component) v = v * UniPoly::x();
        row.push_back(v);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<MultiPoly<BigInt>> integer_polys(const CoefficientAssignment& a, const std::vector<int>& poly_degs) {
  std::vector<MultiPoly<BigInt>> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<BigInt> c;
    for (const auto& u : a[k]) c.push_back(u.coeff(0));
    out.push_back(generic_form(poly_degs[k], c));
  }
  return out;
}

std::vector<MultiPoly<UniPoly>> uni_polys(const CoefficientAssignment& a, const std::vector<int>& poly_degs) {
  std::vector<MultiPoly<UniPoly>> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(generic_form(poly_degs[k], a[k]));
  return out;
}

std::vector<std::pair<IdentityId, std::vector<int>>> identity_suite() {
  using I = IdentityId;
  return {{I::I1, {1, 1, 1, 1}}, {I::I1, {2, 1, 1, 1}}, {I::I2, {2, 1, 1}}, {I::I2, {3, 1, 1}}, {I::I3, {2, 1, 1}},
          {I::I3, {3, 1, 1}},    {I::I4, {2, 2}},       {I::I5, {2, 1}},    {I::I5, {3, 1}},    {I::I6, {2, 2}},
          {I::I7, {2, 2}},       {I::I8, {2, 2}},       {I::I9, {3}},       {I::I10, {3}},      {I::I11, {4}},
          {I::I12, {4}},         {I::I13, {4}},         {I::I14, {3}},      {I::I14, {4}}};
}

std::vector<DegreeContract> degree_contracts(IdentityId id, const std::vector<int>& d) {
  std::vector<DegreeContract> c;
  switch (id) {
    case IdentityId::I1:
      for (int k = 0; k < 4; ++k) {
        int e = 1;
        for (int j = 0; j < 4; ++j)
          if (j != k) e *= d[j];
        c.push_back({"lhs", k, e, {}});
        c.push_back({"rhs", k, e, {}});
      }
      break;
    case IdentityId::I2:
      c.push_back({"lhs", 0, 2 * d[0] * d[1] * d[2], {}});
      c.push_back({"lhs", 1, d[0] * d[0] * d[2], {}});
      c.push_back({"lhs", 2, d[0] * d[0] * d[1], {}});
      break;
    case IdentityId::I3:
      c.push_back({"Res_X2(D1,R23)", 0, 2 * d[1] * d[2] * (d[0] - 1), {}});
      c.push_back({"Res_X2(D1,R23)", 1, d[0] * (d[0] - 1) * d[2], {}});
      c.push_back({"Res_X2(D1,R23)", 2, d[0] * (d[0] - 1) * d[1], {}});
      break;
    case IdentityId::I4:
      c.push_back({"Res_X2(D1,D2)", 0, 2 * d[1] * (d[0] - 1) * (d[1] - 1), {}});
      c.push_back({"Res_X2(D1,D2)", 1, 2 * d[0] * (d[0] - 1) * (d[1] - 1), {}});
      break;
    case IdentityId::I5:
      // deg_P1 = 2(d1-1)*d1d2 + d2*d1(d1-1); the printed value carries d1^2-1 for d1-1
      c.push_back({"Res_X2(D1,R12)", 0, 3 * d[0] * d[1] * (d[0] - 1), 3 * d[0] * d[1] * (d[0] * d[0] - 1)});
      c.push_back({"Res_X2(D1,R12)", 1, d[0] * d[0] * (d[0] - 1), {}});
      c.push_back({"T", 0, (3 * d[0] - 1) * (d[0] - 2) * d[1], {}});
      c.push_back({"T", 1, d[0] * (d[0] - 1) * (d[0] - 2), {}});
      break;
    case IdentityId::I6:
      c.push_back({"lhs", 0, 2 * d[1] * (d[0] * d[1] - 1), {}});
      c.push_back({"lhs", 1, 2 * d[0] * (d[0] * d[1] - 1), {}});
      break;
    case IdentityId::I8:
      c.push_back({"D", 0, (2 * d[0] - 1) * d[1] * (d[1] - 1) / 2, {}});
      c.push_back({"D", 1, (2 * d[1] - 1) * d[0] * (d[0] - 1) / 2, {}});
      break;
    case IdentityId::I9:
      c.push_back({"DD", 0, 4 * (d[0] - 1) * (d[0] * d[0] - d[0] - 1), {}});
      break;
    case IdentityId::I10:
      c.push_back({"F", 0, 3 * d[0] * (d[0] - 2), {}});
      break;
    case IdentityId::I12:
      c.push_back({"U", 0, 2 * d[0] * (d[0] - 2) * (d[0] - 3), {}});
      break;
    case IdentityId::I13:
      c.push_back({"DD", 0, 4 * (d[0] - 1) * (d[0] * d[0] - d[0] - 1), {}});
      break;
    default:
      break;
  }
  return c;
}

namespace {

// -1 unless q = c t^e with c != 0.
int monomial_exponent(const UniPoly& q) {
  int e = q.degree();
  if (e < 0) return -1;
  for (int i = 0; i < e; ++i)
    if (!q.coeff(i).is_zero()) return -1;
  return e;
}

struct TrialOutcome {
  bool degenerate = false;
  int rerolls = 0;
  std::uint64_t seed = 0;
  std::string failure;  // empty if all good
  std::vector<bool> printed;
  std::vector<std::string> printed_names;
};

template <class R>
std::string verdict(const Evaluation<R>& ev) {
  for (const auto& c : ev.checks)
    if (!(c.lhs == c.rhs)) return "mismatch: " + c.name;
  return "";
}

template <class R>
void record_printed(const Evaluation<R>& ev, TrialOutcome& out) {
  for (const auto& c : ev.printed) {
    out.printed_names.push_back(c.name);
    out.printed.push_back(c.lhs == c.rhs);
  }
}

TrialOutcome run_one(IdentityId id, const std::vector<int>& degrees, const SpecializationSpec& base,
                     std::uint64_t trial_seed) {
  TrialOutcome out;
  auto pd = poly_degrees(id, degrees);
  auto contracts = degree_contracts(id, degrees);
  for (int r = 0; r <= kMaxRerolls; ++r) {
    SpecializationSpec spec = base;
    spec.seed = r == 0 ? trial_seed : derive_seed(trial_seed, r);
    out.seed = spec.seed;
    out.rerolls = r;
    auto a = gen_specialization(pd, spec);
    try {
      if (spec.mode == Mode::Integer) {
        auto ev = evaluate_identity(id, degrees, integer_polys(a, pd));
        out.failure = verdict(ev);
        record_printed(ev, out);
      } else {
        auto ev = evaluate_identity(id, degrees, uni_polys(a, pd));
        out.failure = verdict(ev);
        record_printed(ev, out);
        if (spec.mode == Mode::TScalingProbe && out.failure.empty()) {
          bool zero = false;
          for (const auto& c : contracts) {
            if (c.component != spec.probe_component) continue;
            const UniPoly* q = ev.find(c.quantity);
            if (!q) {
              out.failure = "missing quantity " + c.quantity;
              break;
            }
            if (q->is_zero()) {
              zero = true;
              break;
            }
            int e = monomial_exponent(*q);
            if (e != c.expected) {
              out.failure = "degree of " + c.quantity + " in P" + std::to_string(c.component + 1) + ": expected " +
                            std::to_string(c.expected) + ", observed " + std::to_string(e);
              break;
            }
          }
          if (zero) throw DegenerateInput("probed quantity vanishes");
        }
      }
      return out;
    } catch (const DegenerateInput&) {
      out.printed.clear();
      out.printed_names.clear();
      continue;
    } catch (const Error& e) {
      out.failure = e.what();
      return out;
    }
  }
  out.degenerate = true;
  return out;
}

}  // namespace

DegreeResult check_degree(IdentityId id, const std::vector<int>& degrees, const std::string& quantity, int component,
                          int expected, std::uint64_t seed, int coeff_bound) {
  DegreeResult res;
  auto pd = poly_degrees(id, degrees);
  for (int r = 0; r <= kMaxRerolls; ++r) {
    SpecializationSpec spec{Mode::TScalingProbe, r == 0 ? seed : derive_seed(seed, r), coeff_bound, component};
    try {
      auto ev = evaluate_identity(id, degrees, uni_polys(gen_specialization(pd, spec), pd));
      const UniPoly* q = ev.find(quantity);
      if (!q) {
        res.detail = "no quantity named " + quantity;
        return res;
      }
      if (q->is_zero()) continue;
      res.observed = monomial_exponent(*q);
      res.ok = res.observed == expected;
      if (!res.ok)
        res.detail = "expected t^" + std::to_string(expected) + ", got " + q->str("t");
      return res;
    } catch (const DegenerateInput&) {
      continue;
    }
  }
  res.detail = "no non-degenerate specialization found";
  return res;
}

TrialSummary run_trials(IdentityId id, const std::vector<int>& degrees, int n_trials, const SpecializationSpec& spec) {
  TrialSummary s;
  s.id = id;
  s.degrees = degrees;
  s.mode = spec.mode;
  s.seed = spec.seed;
  s.trials = n_trials;
  std::string bad = check_hypotheses(id, degrees);
  if (!bad.empty()) {
    s.warnings.push_back(bad);
    return s;
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outs(n_trials);
  auto job = [&](int i) { return run_one(id, degrees, spec, derive_seed(spec.seed, i)); };
  if (std::thread::hardware_concurrency() > 1 && n_trials > 1) {
    std::vector<std::future<TrialOutcome>> fs;
    for (int i = 0; i < n_trials; ++i) fs.push_back(std::async(std::launch::async, job, i));
    for (int i = 0; i < n_trials; ++i) outs[i] = fs[i].get();
  } else {
    for (int i = 0; i < n_trials; ++i) outs[i] = job(i);
  }
  for (const auto& o : outs) {
    s.rerolls += o.rerolls;
    if (o.degenerate) {
      s.warnings.push_back("DegenerateInput after " + std::to_string(kMaxRerolls) + " re-rolls");
      continue;
    }
    if (!o.failure.empty()) s.failures.push_back({o.seed, o.failure});
    for (std::size_t k = 0; k < o.printed.size(); ++k) {
      auto it = std::find_if(s.printed_held.begin(), s.printed_held.end(),
                             [&](const auto& p) { return p.first == o.printed_names[k]; });
      if (it == s.printed_held.end()) it = s.printed_held.insert(s.printed_held.end(), {o.printed_names[k], 0});
      it->second += o.printed[k] ? 1 : 0;
    }
  }
  s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

std::string report_json(const TrialSummary& s, bool with_timings) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["identity"] = identity_name(s.id);
  j["degrees"] = s.degrees;
  j["mode"] = mode_name(s.mode);
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["rerolls"] = s.rerolls;
  ordered_json f = ordered_json::array();
  for (const auto& x : s.failures) f.push_back({{"seed", x.seed}, {"detail", x.detail}});
  j["failures"] = f;
  j["warnings"] = s.warnings;
  if (!s.printed_held.empty()) {
    ordered_json p = ordered_json::array();
    for (const auto& [name, held] : s.printed_held) p.push_back({{"statement", name}, {"held_in", held}});
    j["printed_form"] = p;
  }
  j["timings_ms"] = with_timings ? ordered_json(s.wall_ms) : ordered_json(nullptr);
  return j.dump(2);
}

}  // namespace elimkit
