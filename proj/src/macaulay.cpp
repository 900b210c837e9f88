#include "elimkit/macaulay.hpp"

#include <atomic>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

namespace elimkit {
namespace detail {

int MacaulayLayout::index_of(const std::array<int, 4>& a) const {
  long key = 0;
  for (int k = n - 1; k >= 0; --k) key = key * base + a[k];
  return static_cast<int>(key_to_index[key]);
}

namespace {

MacaulayLayout make_layout(const std::vector<int>& degs) {
  MacaulayLayout L;
  L.n = static_cast<int>(degs.size());
  L.D = 1;
  for (int d : degs) L.D += d - 1;
  L.base = L.D + 1;

  std::vector<Monomial> all;
  std::array<int, 4> a{};
  // enumerate exponent vectors of total degree D
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == L.n - 1) {
      a[k] = left;
      Monomial m;
      for (int i = 0; i < L.n; ++i) m.e[i] = static_cast<std::uint16_t>(a[i]);
      all.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      a[k] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, L.D);
  std::sort(all.begin(), all.end(), GrevlexGreater{});

  std::vector<std::array<int, 4>> extr, reduced;
  std::vector<int> extr_owner, reduced_owner;
  for (const auto& m : all) {
    std::array<int, 4> e{};
    int owner = -1, hits = 0;
    for (int i = 0; i < L.n; ++i) {
      e[i] = m.e[i];
      if (m.e[i] >= degs[i]) {
        ++hits;
        if (owner < 0) owner = i;
      }
    }
    if (hits >= 2) {
      extr.push_back(e);
      extr_owner.push_back(owner);
    } else {
      reduced.push_back(e);
      reduced_owner.push_back(owner);
    }
  }
  L.extraneous = extr.size();
  L.mono = extr;
  L.mono.insert(L.mono.end(), reduced.begin(), reduced.end());
  L.owner = extr_owner;
  L.owner.insert(L.owner.end(), reduced_owner.begin(), reduced_owner.end());

  long size = 1;
  for (int k = 0; k < L.n; ++k) size *= L.base;
  L.key_to_index.assign(size, -1);
  for (std::size_t r = 0; r < L.mono.size(); ++r) {
    long key = 0;
    for (int k = L.n - 1; k >= 0; --k) key = key * L.base + L.mono[r][k];
    L.key_to_index[key] = static_cast<long>(r);
  }
  return L;
}

std::mutex g_layout_mu;
std::map<std::vector<int>, std::unique_ptr<MacaulayLayout>> g_layouts;

std::mutex g_sign_mu;
std::map<std::vector<int>, int> g_signs;

}  // namespace

const MacaulayLayout& layout_for(const std::vector<int>& degs) {
  std::lock_guard<std::mutex> lock(g_layout_mu);
  auto it = g_layouts.find(degs);
  if (it == g_layouts.end()) it = g_layouts.emplace(degs, std::make_unique<MacaulayLayout>(make_layout(degs))).first;
  return *it->second;
}

int calibration_sign(const std::vector<int>& degs) {
  {
    std::lock_guard<std::mutex> lock(g_sign_mu);
    auto it = g_signs.find(degs);
    if (it != g_signs.end()) return it->second;
  }
  MacaulaySystem<BigInt> pure;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    pure.polys.push_back(MultiPoly<BigInt>::var(static_cast<int>(i), degs[i]));
    pure.vars.push_back(static_cast<int>(i));
  }
  pure.degs = degs;
  const MacaulayLayout& L = layout_for(degs);
  BlockDet bd = det_with_leading_block(build_matrix(pure, L), L.extraneous);
  if (bd.block_singular) throw DegenerateInput("calibration system is singular");
  BigInt ratio = exact_div(bd.full, bd.block);
  if (!(ratio == BigInt(1)) && !(ratio == BigInt(-1))) throw DegenerateInput("calibration ratio is not a unit");
  int s = ratio.sign();
  std::lock_guard<std::mutex> lock(g_sign_mu);
  return g_signs.emplace(degs, s).first->second;
}

long long degree_product(const std::vector<int>& degs) {
  long long p = 1;
  for (int d : degs) p *= d;
  return p;
}

std::vector<std::vector<long>> unimodular_change(int n, int attempt) {
  std::mt19937_64 rng(0x5eed0000ull + static_cast<unsigned long long>(attempt) * 7919ull + n);
  std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 1;
  // product of transvections: row_i += c * row_j
  for (int step = 0; step < 3 * n; ++step) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    long c = static_cast<long>(rng() % 5) - 2;
    for (int k = 0; k < n; ++k) A[i][k] += c * A[j][k];
  }
  return A;
}

namespace {

// Res(f) from the characteristic-style perturbation f_i + s X_i^{d_i}:
// the quotient det(M + sI) / det(M' + sI) evaluated at s = 0.
BigInt generalized_char_poly(const ExactMatrix<BigInt>& M, std::size_t K) {
  std::size_t N = M.size();
  auto shifted = [&](std::size_t size) {
    ExactMatrix<UniPoly> S(size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) S(i, j) = UniPoly(M(i, j)) + (i == j ? UniPoly::x() : UniPoly());
    return S;
  };
  UniPoly num = det_interpolate(shifted(N), static_cast<int>(N));
  UniPoly den = det_interpolate(shifted(K), static_cast<int>(K));
  return upoly_exact_div(num, den).coeff(0);
}

}  // namespace
}  // namespace detail

BigInt macaulay_resultant_int(const MacaulaySystem<BigInt>& sys0) {
  using namespace detail;
  for (int attempt = 0; attempt <= kBaseChangeAttempts; ++attempt) {
    MacaulaySystem<BigInt> sys =
        attempt == 0 ? sys0 : change_variables(sys0, unimodular_change(static_cast<int>(sys0.vars.size()), attempt));
    int sign = 1;
    sys = reorder(sys, sign);
    const MacaulayLayout& L = layout_for(sys.degs);
    BlockDet bd = det_with_leading_block(build_matrix(sys, L), L.extraneous);
    if (bd.block_singular) continue;
    BigInt res = exact_div(bd.full, bd.block);
    sign *= calibration_sign(sys.degs);
    return sign < 0 ? -res : res;
  }
  int sign = 1;
  MacaulaySystem<BigInt> sys = reorder(sys0, sign);
  const MacaulayLayout& L = layout_for(sys.degs);
  BigInt res = generalized_char_poly(build_matrix(sys, L), L.extraneous);
  sign *= calibration_sign(sys.degs);
  return sign < 0 ? -res : res;
}

int macaulay_degree_bound(const MacaulaySystem<UniPoly>& sys) {
  int n = static_cast<int>(sys.polys.size());
  long long prod = detail::degree_product(sys.degs);
  long long best = -1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    long long bound = static_cast<long long>(__builtin_popcount(mask)) * prod;
    for (int i = 0; i < n; ++i) {
      long long kappa = 0;
      bool any = false;
      for (const auto& t : sys.polys[i].terms()) {
        long long w = 0;
        for (int k = 0; k < n; ++k)
          if (mask >> k & 1) w += t.m.e[sys.vars[k]];
        long long v = t.c.degree() - w;
        kappa = any ? std::max(kappa, v) : v;
        any = true;
      }
      bound += kappa * (prod / sys.degs[i]);
    }
    bound = std::max(0LL, bound);
    if (best < 0 || bound < best) best = bound;
  }
  return static_cast<int>(best);
}

UniPoly macaulay_resultant_zx(const MacaulaySystem<UniPoly>& sys) {
  int B = macaulay_degree_bound(sys);
  std::vector<BigInt> values(B + 1);
  auto eval_at = [&](int k) {
    BigInt x0 = interpolation_node(k);
    MacaulaySystem<BigInt> s;
    s.degs = sys.degs;
    s.vars = sys.vars;
    for (const auto& p : sys.polys) s.polys.push_back(eval_parameter(p, x0));
    values[k] = macaulay_resultant(s);
  };
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || B < 4) {
    for (int k = 0; k <= B; ++k) eval_at(k);
  } else {
    std::vector<std::future<void>> jobs;
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (int k; (k = next.fetch_add(1)) <= B;) eval_at(k);
      }));
    for (auto& j : jobs) j.get();
  }
  return interpolate(values);
}

}  // namespace elimkit
