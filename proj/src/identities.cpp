#include "elimkit/identities.hpp"

#include <map>

namespace elimkit {

std::string identity_name(IdentityId id) { return "I" + std::to_string(static_cast<int>(id)); }

std::optional<IdentityId> parse_identity(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'I' && s[0] != 'i')) return std::nullopt;
  try {
    std::size_t used = 0;
    int k = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size() || k < 1 || k > 14) return std::nullopt;
    return static_cast<IdentityId>(k);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> v;
  for (int k = 1; k <= 14; ++k) v.push_back(static_cast<IdentityId>(k));
  return v;
}

namespace {

std::size_t tuple_size(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return 4;
    case IdentityId::I2:
    case IdentityId::I3: return 3;
    case IdentityId::I4:
    case IdentityId::I5:
    case IdentityId::I6:
    case IdentityId::I7:
    case IdentityId::I8: return 2;
    default: return 1;
  }
}

}  // namespace

std::vector<int> poly_degrees(IdentityId id, const std::vector<int>& degrees) {
  if (id == IdentityId::I14) return {1, degrees.at(0) - 1};
  return degrees;
}

std::string check_hypotheses(IdentityId id, const std::vector<int>& degrees) {
  if (degrees.size() != tuple_size(id))
    return identity_name(id) + " takes " + std::to_string(tuple_size(id)) + " degree(s)";
  for (int d : degrees)
    if (d < 1) return "degrees must be positive";
  int d1 = degrees[0];
  switch (id) {
    case IdentityId::I2:
    case IdentityId::I3:
    case IdentityId::I5:
      if (d1 < 2) return "needs d1 >= 2";
      break;
    case IdentityId::I4:
      if (d1 < 2 || degrees[1] < 2) return "needs d1, d2 >= 2";
      break;
    case IdentityId::I6:
    case IdentityId::I7:
    case IdentityId::I8:
      if (d1 < 2 || degrees[1] < 2) return "needs d1, d2 >= 2";
      break;
    case IdentityId::I9:
    case IdentityId::I10:
      if (d1 < 3) return "needs d >= 3";
      break;
    case IdentityId::I11:
    case IdentityId::I12:
    case IdentityId::I13:
      if (d1 < 4) return "needs d >= 4";
      break;
    case IdentityId::I14:
      if (d1 < 3) return "needs d >= 3 (Q of degree d-1 >= 2)";
      break;
    default:
      break;
  }
  return "";
}

std::vector<std::pair<int, int>> coefficient_slots(int d) {
  std::vector<std::pair<int, int>> s;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) s.emplace_back(i, j);
  return s;
}

namespace {

inline BigInt ring_sqrt(const BigInt& a) { return sqrt_exact(a); }
inline UniPoly ring_sqrt(const UniPoly& a) { return upoly_sqrt(a); }

template <class R>
R ipow(const R& a, long long e) {
  return ring_pow(a, static_cast<unsigned long>(e));
}

template <class R>
R two_pow(long long e) {
  return R(pow(BigInt(2), static_cast<unsigned long>(e)));
}

template <class R>
struct Ops {
  using MP = MultiPoly<R>;

  static MP at_x4(const MP& p) { return mp_rename(p, kX3, kX4); }
  static MP d3(const MP& p) { return mp_partial(p, kX3); }
  static MP dl(const MP& p, int k = 1) { return mp_delta_pow(p, kX3, kX4, k); }
  static R lead(const MP& p, int d) { return p.coeff(Monomial::var(kX3, d)); }

  static DeclaredUniView<R> affine_view(const MP& p, int d) { return mp_as_declared(mp_dehomogenize(p, kX1), kX3, d); }

  // Res_{X3}(A(1,X2,X3), B(1,X2,X3)) in declared degrees, a polynomial in X2.
  static MP res_x3(const MP& a, int da, const MP& b, int db) {
    return res_uni(sylvester_spec(affine_view(a, da), affine_view(b, db)));
  }
  static MP disc_x3(const MP& a, int da) {
    try {
      return disc_uni(affine_view(a, da));
    } catch (const LeadingZero& e) {
      throw DegenerateInput(e.what());
    }
  }
  static std::vector<R> x2_coeffs(const MP& a, int da) { return constant_coeffs(mp_as_declared(a, kX2, da)); }
  static R res_x2(const MP& a, int da, const MP& b, int db) {
    return res_uni(SylvesterSpec<R>{x2_coeffs(a, da), da, x2_coeffs(b, db), db});
  }
  static R disc_x2(const MP& a, int da) {
    try {
      return disc_uni(x2_coeffs(a, da), da);
    } catch (const LeadingZero& e) {
      throw DegenerateInput(e.what());
    }
  }
  static R res3(std::vector<MP> p, std::vector<int> d) { return mres<R>(std::move(p), std::move(d), {kX1, kX2, kX3}); }
  static R res4(std::vector<MP> p, std::vector<int> d) {
    return mres<R>(std::move(p), std::move(d), {kX1, kX2, kX3, kX4});
  }
  // SRes1 in X3 of the forms, a form in X1, X2 of degree (d1-1)(d2-1).
  static MP sres1_x3(const MP& a, int da, const MP& b, int db) {
    return sres1(sylvester_spec(mp_as_declared(a, kX3, da), mp_as_declared(b, kX3, db)));
  }
  static R nonzero_lead(const MP& p, int d) {
    R u = lead(p, d);
    if (is_zero(u)) throw DegenerateInput("leading coefficient U00 vanishes");
    return u;
  }
};

}  // namespace

template <class R>
R script_R(const MultiPoly<R>& P, int d) {
  using O = Ops<R>;
  MultiPoly<R> last = O::dl(O::d3(P), 2) - O::dl(P, 3).scale(R(2));
  return O::res4({P, O::d3(P), O::dl(P, 2), last}, {d, d - 1, d - 2, d - 3});
}

template <class R>
R extract_T(const MultiPoly<R>& P1, int d1, const MultiPoly<R>& P2, int d2) {
  using O = Ops<R>;
  R u = O::nonzero_lead(P1, d1);
  if (d1 == 2) return R(1);
  R r = O::res4({P1, O::d3(P1), O::dl(P1, 2), O::at_x4(P2)}, {d1, d1 - 1, d1 - 2, d2});
  return exact_div(r, ipow(u, static_cast<long long>(d1) * d2));
}

template <class R>
R extract_D(const MultiPoly<R>& P1, int d1, const MultiPoly<R>& P2, int d2) {
  using O = Ops<R>;
  return ring_sqrt(O::res4({P1, O::dl(P1), P2, O::dl(P2)}, {d1, d1 - 1, d2, d2 - 1}));
}

template <class R>
R extract_F(const MultiPoly<R>& P, int d) {
  using O = Ops<R>;
  R u = O::nonzero_lead(P, d);
  R r = O::res3({P, O::d3(P), O::d3(O::d3(P))}, {d, d - 1, d - 2});
  return exact_div(r, two_pow<R>(static_cast<long long>(d) * (d - 1)) * u * u);
}

template <class R>
R extract_U(const MultiPoly<R>& P, int d) {
  using O = Ops<R>;
  R u = O::nonzero_lead(P, d);
  return ring_sqrt(exact_div(script_R(P, d), ipow(u, 2LL * d * (d - 1) - 6)));
}

template <class R>
Evaluation<R> evaluate_identity(IdentityId id, const std::vector<int>& degrees, const std::vector<MultiPoly<R>>& P) {
  using O = Ops<R>;
  using MP = MultiPoly<R>;
  std::string bad = check_hypotheses(id, degrees);
  if (!bad.empty()) throw DegenerateInput(bad);
  Evaluation<R> ev;
  auto q = [&](const std::string& name, const R& v) { ev.quantities.emplace_back(name, v); };
  auto check = [&](const std::string& name, const R& l, const R& r) { ev.checks.push_back({name, l, r}); };
  const auto& d = degrees;

  switch (id) {
    case IdentityId::I1: {
      MP r12 = O::res_x3(P[0], d[0], P[1], d[1]);
      MP r34 = O::res_x3(P[2], d[2], P[3], d[3]);
      R lhs = O::res_x2(r12, d[0] * d[1], r34, d[2] * d[3]);
      R rhs = O::res4({P[0], P[1], O::at_x4(P[2]), O::at_x4(P[3])}, {d[0], d[1], d[2], d[3]});
      q("lhs", lhs);
      q("rhs", rhs);
      check("Res_X2(R12,R34) = Res(P1,P2,P3(X4),P4(X4))", lhs, rhs);
      break;
    }
    case IdentityId::I2: {
      MP r13 = O::res_x3(P[0], d[0], P[2], d[2]);
      MP r12 = O::res_x3(P[0], d[0], P[1], d[1]);
      R lhs = O::res_x2(r13, d[0] * d[2], r12, d[0] * d[1]);
      R a = O::res3({P[0], P[1], P[2]}, {d[0], d[1], d[2]});
      R b = O::res4({P[0], O::at_x4(P[1]), P[2], O::dl(P[0])}, {d[0], d[1], d[2], d[0] - 1});
      q("lhs", lhs);
      q("Res(P1,P2,P3)", a);
      q("Res(P1,P2(X4),P3,dP1)", b);
      check("Res_X2(R13,R12) = Res(P1,P2,P3) Res(P1,P2(X4),P3,dP1)", lhs, a * b);
      break;
    }
    case IdentityId::I3: {
      R u = O::nonzero_lead(P[0], d[0]);
      MP d1 = O::disc_x3(P[0], d[0]);
      MP r23 = O::res_x3(P[1], d[1], P[2], d[2]);
      R it = O::res_x2(d1, d[0] * (d[0] - 1), r23, d[1] * d[2]);
      R rhs = O::res4({P[0], O::d3(P[0]), O::at_x4(P[1]), O::at_x4(P[2])}, {d[0], d[0] - 1, d[1], d[2]});
      q("Res_X2(D1,R23)", it);
      q("rhs", rhs);
      check("U^(d2 d3) Res_X2(D1,R23) = Res(P1,d3P1,P2(X4),P3(X4))", ipow(u, d[1] * d[2]) * it, rhs);
      break;
    }
    case IdentityId::I4: {
      R u1 = O::nonzero_lead(P[0], d[0]), u2 = O::nonzero_lead(P[1], d[1]);
      MP d1 = O::disc_x3(P[0], d[0]), d2 = O::disc_x3(P[1], d[1]);
      R it = O::res_x2(d1, d[0] * (d[0] - 1), d2, d[1] * (d[1] - 1));
      R rhs = O::res4({P[0], O::d3(P[0]), O::at_x4(P[1]), O::at_x4(O::d3(P[1]))}, {d[0], d[0] - 1, d[1], d[1] - 1});
      q("Res_X2(D1,D2)", it);
      q("rhs", rhs);
      check("U1^(d2(d2-1)) U2^(d1(d1-1)) Res_X2(D1,D2) = Res(P1,d3P1,P2(X4),d3P2(X4))",
            ipow(u1, d[1] * (d[1] - 1)) * ipow(u2, d[0] * (d[0] - 1)) * it, rhs);
      break;
    }
    case IdentityId::I5: {
      R u = O::nonzero_lead(P[0], d[0]);
      MP d1 = O::disc_x3(P[0], d[0]);
      MP r12 = O::res_x3(P[0], d[0], P[1], d[1]);
      R it = O::res_x2(d1, d[0] * (d[0] - 1), r12, d[0] * d[1]);
      R r3 = O::res3({P[0], O::d3(P[0]), P[1]}, {d[0], d[0] - 1, d[1]});
      R r4 = O::res4({P[0], O::d3(P[0]), O::dl(P[0], 2), O::at_x4(P[1])}, {d[0], d[0] - 1, d[0] - 2, d[1]});
      R ue = ipow(u, d[0] * d[1]);
      R T = extract_T(P[0], d[0], P[1], d[1]);
      q("Res_X2(D1,R12)", it);
      q("Res(P1,d3P1,P2)", r3);
      q("T", T);
      check("U^(d1 d2) Res_X2(D1,R12) = Res(P1,d3P1,P2)^2 Res(P1,d3P1,d2P1,P2(X4))", ue * it, r3 * r3 * r4);
      check("Res(P1,d3P1,d2P1,P2(X4)) = U^(d1 d2) T", r4, ue * T);
      check("Res_X2(D1,R12) = Res(P1,d3P1,P2)^2 T", it, r3 * r3 * T);
      break;
    }
    case IdentityId::I6: {
      MP r12 = O::res_x3(P[0], d[0], P[1], d[1]);
      R lhs = O::disc_x2(r12, d[0] * d[1]);
      MP s = O::sres1_x3(P[0], d[0], P[1], d[1]);
      int ds = (d[0] - 1) * (d[1] - 1);
      R rs = O::res3({P[0], P[1], s}, {d[0], d[1], ds});
      R dp;
      try {
        dp = disc_pair(P[0], d[0], P[1], d[1]);
      } catch (const DenominatorZero& e) {
        throw DegenerateInput(e.what());
      }
      q("lhs", lhs);
      q("Res(P1,P2,SRes1)", rs);
      q("Disc(P1,P2)", dp);
      // The printed sign (-1)^((d2+1)(d1d2+d1-1)) rests on Res(P1,P2,X1^k) = (-1)^k at the
      // calibration point; that value is (-1)^(d1(d2+1)k) = 1, so the sign is +1 throughout.
      check("Disc_X2(R12) = Res(P1,P2,SRes1) Disc(P1,P2)", lhs, rs * dp);
      long long e = static_cast<long long>(d[1] + 1) * (d[0] * d[1] + d[0] - 1);
      ev.printed.push_back({"Disc_X2(R12) = (-1)^((d2+1)(d1d2+d1-1)) Res(P1,P2,SRes1) Disc(P1,P2)", lhs,
                            e % 2 ? -(rs * dp) : rs * dp});
      break;
    }
    case IdentityId::I7: {
      MP s = O::sres1_x3(P[0], d[0], P[1], d[1]);
      int ds = (d[0] - 1) * (d[1] - 1);
      R a = O::res3({P[0], P[1], s}, {d[0], d[1], ds});
      MP r12 = O::res_x3(P[0], d[0], P[1], d[1]);
      R b = O::res_x2(r12, d[0] * d[1], mp_dehomogenize(s, kX1), ds);
      R c = O::res4({P[0], O::dl(P[0]), P[1], O::dl(P[1])}, {d[0], d[0] - 1, d[1], d[1] - 1});
      q("Res(P1,P2,SRes1)", a);
      q("Res_X2(R12,SRes1)", b);
      q("Res(P1,dP1,P2,dP2)", c);
      check("Res(P1,P2,SRes1) = Res_X2(R12,SRes1)", a, b);
      check("Res_X2(R12,SRes1) = Res(P1,dP1,P2,dP2)", b, c);
      break;
    }
    case IdentityId::I8: {
      R c = O::res4({P[0], O::dl(P[0]), P[1], O::dl(P[1])}, {d[0], d[0] - 1, d[1], d[1] - 1});
      R D = ring_sqrt(c);
      q("Res(P1,dP1,P2,dP2)", c);
      q("D", D);
      check("Res(P1,dP1,P2,dP2) = D^2", c, D * D);
      break;
    }
    case IdentityId::I9: {
      int n = d[0];
      R u = O::nonzero_lead(P[0], n);
      MP d1 = O::disc_x3(P[0], n);
      R dd = O::disc_x2(d1, n * (n - 1));
      R disc = disc_ternary(P[0], n);
      R f3 = O::res3({P[0], O::d3(P[0]), O::d3(O::d3(P[0]))}, {n, n - 1, n - 2});
      R r4 = O::res4({P[0], O::dl(P[0]), O::d3(P[0]), O::dl(O::d3(P[0]))}, {n, n - 1, n - 1, n - 2});
      q("DD", dd);
      q("Disc(P)", disc);
      q("Res(P,d3P,d3^2P)", f3);
      q("Res(P,dP,d3P,dd3P)", r4);
      check("U^(2d^2-2d-1) DD = Disc(P) Res(P,d3P,d3^2P) Res(P,dP,d3P,dd3P)", ipow(u, 2LL * n * n - 2 * n - 1) * dd,
            disc * f3 * r4);
      break;
    }
    case IdentityId::I10: {
      int n = d[0];
      R u = O::nonzero_lead(P[0], n);
      R f3 = O::res3({P[0], O::d3(P[0]), O::d3(O::d3(P[0]))}, {n, n - 1, n - 2});
      R F = extract_F(P[0], n);
      q("Res(P,d3P,d3^2P)", f3);
      q("F", F);
      check("Res(P,d3P,d3^2P) = 2^(d(d-1)) U^2 F", f3, two_pow<R>(static_cast<long long>(n) * (n - 1)) * u * u * F);
      break;
    }
    case IdentityId::I11: {
      int n = d[0];
      R r4 = O::res4({P[0], O::dl(P[0]), O::d3(P[0]), O::dl(O::d3(P[0]))}, {n, n - 1, n - 1, n - 2});
      R f3 = O::res3({P[0], O::d3(P[0]), O::d3(O::d3(P[0]))}, {n, n - 1, n - 2});
      R rr = script_R(P[0], n);
      q("Res(P,dP,d3P,dd3P)", r4);
      q("Res(P,d3P,d3^2P)", f3);
      q("R(P)", rr);
      check("2^(d(d-1)) Res(P,dP,d3P,dd3P) = Res(P,d3P,d3^2P)^2 R(P)",
            two_pow<R>(static_cast<long long>(n) * (n - 1)) * r4, f3 * f3 * rr);
      break;
    }
    case IdentityId::I12: {
      int n = d[0];
      R u = O::nonzero_lead(P[0], n);
      R rr = script_R(P[0], n);
      R U = extract_U(P[0], n);
      q("R(P)", rr);
      q("U", U);
      check("R(P) = U00^(2d(d-1)-6) U^2", rr, ipow(u, 2LL * n * (n - 1) - 6) * U * U);
      break;
    }
    case IdentityId::I13: {
      int n = d[0];
      R u = O::nonzero_lead(P[0], n);
      MP d1 = O::disc_x3(P[0], n);
      R dd = O::disc_x2(d1, n * (n - 1));
      R disc = disc_ternary(P[0], n);
      R F = extract_F(P[0], n);
      R U = extract_U(P[0], n);
      q("DD", dd);
      q("Disc(P)", disc);
      q("F", F);
      q("U", U);
      R prod = u * disc * F * F * F * U * U;
      // Chaining I9..I12 leaves 2^(2d(d-1)) on this side; the printed form drops it.
      check("DD = 2^(2d(d-1)) U00 Disc(P) F^3 U^2", dd, two_pow<R>(2LL * n * (n - 1)) * prod);
      ev.printed.push_back({"DD = U00 Disc(P) F^3 U^2", dd, prod});
      break;
    }
    case IdentityId::I14: {
      int n = d[0];
      const MP& L = P[0];
      const MP& Q = P[1];
      R c = L.coeff(Monomial::var(kX3, 1));
      MP LQ = L * Q;
      R rlq = O::res3({L, Q, O::d3(Q)}, {1, n - 1, n - 2});
      R fq = O::res3({Q, O::d3(Q), O::d3(O::d3(Q))}, {n - 1, n - 2, n - 3});
      R flex_l = O::res3({LQ, O::d3(LQ), O::d3(O::d3(LQ))}, {n, n - 1, n - 2});
      R flex_r = two_pow<R>(2LL * (n - 1)) * ipow(c, 3LL * n - 4) * ipow(rlq, 3) * fq;
      q("Res(LQ,d3LQ,d3^2LQ)", flex_l);
      check("flex: Res(LQ,d3LQ,d3^2LQ) = 2^(2(d-1)) c^(3d-4) Res(L,Q,d3Q)^3 Res(Q,d3Q,d3^2Q)", flex_l, flex_r);

      R dd2_l = O::res4({LQ, O::d3(LQ), O::dl(LQ), O::dl(O::d3(LQ))}, {n, n - 1, n - 1, n - 2});
      R rl4 = O::res4({O::at_x4(L), Q, O::d3(Q), O::dl(Q, 2)}, {1, n - 1, n - 2, n - 3});
      R r4q = O::res4({Q, O::dl(Q), O::d3(Q), O::dl(O::d3(Q))}, {n - 1, n - 2, n - 2, n - 3});
      R dd2_r = two_pow<R>(2LL * (n - 1)) * ipow(c, 2LL * (n - 1) * (3 * n - 5)) * ipow(rlq, 6) * ipow(rl4, 4) * r4q;
      q("Res(LQ,d3LQ,dLQ,dd3LQ)", dd2_l);
      check("dd2: Res(LQ,d3LQ,dLQ,dd3LQ) = 2^(2(d-1)) c^(2(d-1)(3d-5)) Res(L,Q,d3Q)^6 Res(L(X4),Q,d3Q,d^2Q)^4 "
            "Res(Q,dQ,d3Q,dd3Q)",
            dd2_l, dd2_r);

      if (n >= 4) {
        R rlq_script = script_R(LQ, n);
        R rq_script = script_R(Q, n - 1);
        q("R(LQ)", rlq_script);
        check("dd3: R(LQ) = c^(6d^2-22d+18) Res(L(X4),Q,d3Q,d^2Q)^4 R(Q)", rlq_script,
              ipow(c, 6LL * n * n - 22 * n + 18) * ipow(rl4, 4) * rq_script);
      }
      break;
    }
  }
  return ev;
}

template Evaluation<BigInt> evaluate_identity(IdentityId, const std::vector<int>&, const std::vector<MultiPoly<BigInt>>&);
template Evaluation<UniPoly> evaluate_identity(IdentityId, const std::vector<int>&,
                                               const std::vector<MultiPoly<UniPoly>>&);
template BigInt extract_T(const MultiPoly<BigInt>&, int, const MultiPoly<BigInt>&, int);
template UniPoly extract_T(const MultiPoly<UniPoly>&, int, const MultiPoly<UniPoly>&, int);
template BigInt extract_D(const MultiPoly<BigInt>&, int, const MultiPoly<BigInt>&, int);
template UniPoly extract_D(const MultiPoly<UniPoly>&, int, const MultiPoly<UniPoly>&, int);
template BigInt extract_F(const MultiPoly<BigInt>&, int);
template UniPoly extract_F(const MultiPoly<UniPoly>&, int);
template BigInt extract_U(const MultiPoly<BigInt>&, int);
template UniPoly extract_U(const MultiPoly<UniPoly>&, int);
template BigInt script_R(const MultiPoly<BigInt>&, int);
template UniPoly script_R(const MultiPoly<UniPoly>&, int);

SymbolicI1 symbolic_i1() {
  using C = MultiPoly<BigInt>;
  using MP = MultiPoly<C>;
  // U^(k)_{1,0}, U^(k)_{0,1}, U^(k)_{0,0} live in coefficient slots 3k, 3k+1, 3k+2.
  auto u = [](int k, int which) { return C::var(3 * k + which); };
  std::vector<MP> P;
  for (int k = 0; k < 4; ++k)
    P.push_back(MP::var(kX1).scale(u(k, 0)) + MP::var(kX2).scale(u(k, 1)) + MP::var(kX3).scale(u(k, 2)));
  using O = Ops<C>;
  MP r12 = O::res_x3(P[0], 1, P[1], 1), r34 = O::res_x3(P[2], 1, P[3], 1);
  C lhs = O::res_x2(r12, 1, r34, 1);
  C rhs = O::res4({P[0], P[1], O::at_x4(P[2]), O::at_x4(P[3])}, {1, 1, 1, 1});
  // |U10 U01 U00 0; ...| with P3, P4 contributing their X3 coefficient to the X4 column
  ExactMatrix<C> M(4);
  for (int k = 0; k < 4; ++k) {
    M(0, k) = u(k, 0);
    M(1, k) = u(k, 1);
    M(2, k) = k < 2 ? u(k, 2) : C();
    M(3, k) = k < 2 ? C() : u(k, 2);
  }
  C det = det_cofactor(M);
  auto name = [](int slot) {
    static const char* which[] = {"1,0", "0,1", "0,0"};
    return "U" + std::to_string(slot / 3 + 1) + "_" + which[slot % 3];
  };
  SymbolicI1 out;
  out.lhs = lhs.str(name);
  out.rhs = rhs.str(name);
  out.det = det.str(name);
  out.equal = lhs == rhs && rhs == det;
  return out;
}

}  // namespace elimkit
