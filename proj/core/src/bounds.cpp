#include "fqc/bounds.hpp"

#include <stdexcept>

namespace fqc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
  }
  return "?";
}

std::string to_string(RDomain d) {
  return d == RDomain::all_nonzero ? "F_q^*" : "F_q^+";
}

void settle(BoundReport& rep) {
  if (!rep.hypothesis_ok || rep.bound <= 0) {
    rep.verdict = Verdict::vacuous;
    // Even a vacuous bound must not be contradicted by the exact count.
    if (rep.exact && BigRat(*rep.exact) < rep.bound) rep.verdict = Verdict::violated;
    return;
  }
  if (!rep.exact) return;
  rep.verdict = BigRat(*rep.exact) >= rep.bound ? Verdict::holds : Verdict::violated;
}

BigInt ipow(BigInt base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt binom2(unsigned k) { return BigInt(k) * (k - 1) / 2; }

BigRat kth_root_upper(const BigInt& m, unsigned k) {
  if (m < 0) throw std::invalid_argument("negative radicand");
  const BigInt scale = ipow(10, 6);
  BigInt scaled = m * ipow(scale, k);
  BigInt root;
  int exact = mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  if (!exact) root += 1;
  BigRat r(root, scale);
  r.canonicalize();
  return r;
}

BoundReport s1_lower_bound(std::uint64_t q, unsigned d, const BigInt& n) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  BoundReport rep;
  const BigInt Q(static_cast<unsigned long>(q));
  rep.hypothesis_ok = n * n >= ipow(Q, d);
  BigInt n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  if (d % 2 == 0) {
    rep.name = "s1_lower_bound_even";
    rep.bound = BigRat(n4, Q) - 2 * BigRat(n3) - BigRat(ipow(Q, d - 1) * n2) -
                BigRat(4 * n4, Q * Q) - BigRat(4 * ipow(Q, (d - 2) / 2) * n3);
  } else {
    rep.name = "s1_lower_bound_odd";
    rep.bound = BigRat(n4, Q) - 2 * BigRat(n3) - BigRat(2 * ipow(Q, d - 1) * n2) -
                BigRat(n4, Q * Q) - BigRat(2 * ipow(Q, (d - 3) / 2) * n3);
  }
  rep.bound.canonicalize();
  return rep;
}

Threshold star_pair_threshold(std::uint64_t q, unsigned d, unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (q % 2 == 0 || q < 3) throw std::invalid_argument("q must be an odd prime power");
  const BigInt Q(static_cast<unsigned long>(q));
  if (d % 2 == 0) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    if (q < 5) throw std::invalid_argument("theorem requires q >= 5");
    return {BigRat((31 + 10 * binom2(k)) * ipow(Q, d / 2)), RDomain::all_nonzero};
  }
  if (d < 3) throw std::invalid_argument("odd case requires d >= 3");
  BigRat coeff = BigRat(4) + sqrt3_upper() * BigRat(binom2(k));
  return {coeff * kth_root_upper(ipow(Q, d), 2), RDomain::squares_only};
}

Threshold path4_threshold(std::uint64_t q, unsigned d) {
  if (q % 2 == 0 || q < 3) throw std::invalid_argument("q must be an odd prime power");
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  const BigInt Q(static_cast<unsigned long>(q));
  if (d % 2 == 0 && d <= 4) {
    if (q < 5) throw std::invalid_argument("theorem requires q >= 5 for even d");
    return {BigRat(36) * kth_root_upper(ipow(Q, 2 * d + 1), 3), RDomain::all_nonzero};
  }
  if (d == 3)
    return {BigRat(9) * kth_root_upper(ipow(Q, 2 * d + 1), 3), RDomain::squares_only};
  if (d == 5) return {BigRat(12 * ipow(Q, 3)), RDomain::squares_only};
  if (d % 2 == 0) {
    if (q < 5) throw std::invalid_argument("theorem requires q >= 5 for even d");
    return {BigRat(313 * ipow(Q, d / 2)), RDomain::all_nonzero};
  }
  // d odd >= 7
  return {BigRat(313) * kth_root_upper(ipow(Q, d), 2), RDomain::squares_only};
}

BoundReport star_B_lower_bound(const BigInt& n, unsigned k, const BigInt& S1,
                               const BigInt& Sk_minus_1) {
  BoundReport rep;
  rep.name = "star_B_lower_bound";
  BigInt c = binom2(k);
  BigRat inner = BigRat(S1) - BigRat(2 * c * ipow(n, 3)) + BigRat(c * n * n);
  rep.bound = BigRat(Sk_minus_1) * inner / BigRat(n * n);
  rep.bound.canonicalize();
  return rep;
}

BoundReport path_C_lower_bound(const BigInt& n, std::uint64_t q, unsigned d,
                               const BigInt& P1, const BigInt& P2, const BigInt& P3,
                               const BigInt& P4) {
  BoundReport rep;
  const BigInt Q(static_cast<unsigned long>(q));
  BigInt value;
  if (d <= 4) {
    rep.name = "path_C_lower_bound_d2to4";
    value = P4 - 10 * n * P3 - 3 * ipow(n, 3) * ipow(Q, 2 * d - 2) * P1 - n * n * P2;
  } else {
    rep.name = "path_C_lower_bound_d5plus";
    value = P4 - 10 * n * P3 - 2 * ipow(n, 5) * P1 - n * n * P2;
  }
  rep.bound = BigRat(value);
  return rep;
}

std::vector<InequalityCheck> p_chain_checks(const BigInt& n,
                                            const std::vector<BigInt>& P) {
  if (P.size() < 5) throw std::invalid_argument("need P_0..P_4");
  std::vector<InequalityCheck> out;
  auto add = [&](std::string name, const BigInt& lhs, const BigInt& rhs) {
    out.push_back({std::move(name), lhs >= rhs, lhs == rhs});
  };
  add("P4*n^6 >= P1^4", P[4] * ipow(n, 6), ipow(P[1], 4));
  add("P2*n^2 >= P1^2", P[2] * n * n, P[1] * P[1]);
  add("P4*n^2 >= P3*P1", P[4] * n * n, P[3] * P[1]);
  add("P4*n^2 >= P2^2", P[4] * n * n, P[2] * P[2]);
  return out;
}

std::vector<InequalityCheck> s_holder_checks(const BigInt& n,
                                             const std::vector<BigInt>& S) {
  std::vector<InequalityCheck> out;
  for (unsigned k = 2; k < S.size() && k <= 3; ++k) {
    BigInt lhs = ipow(S[k], k - 1) * n * n;
    BigInt rhs = ipow(S[k - 1], k);
    out.push_back({"S" + std::to_string(k) + "^" + std::to_string(k - 1) +
                       "*n^2 >= S" + std::to_string(k - 1) + "^" + std::to_string(k),
                   lhs >= rhs, lhs == rhs});
  }
  return out;
}

BigRat rakhmonov_threshold(std::uint64_t p, RakhmonovPattern pattern) {
  if (p % 4 != 3) throw std::invalid_argument("requires p = 3 (mod 4)");
  for (std::uint64_t f = 2; f * f <= p; ++f)
    if (p % f == 0) throw std::invalid_argument("p must be prime");
  const BigInt P(static_cast<unsigned long>(p));
  if (pattern == RakhmonovPattern::path2)
    return (sqrt3_upper() + 1) * BigRat(P);
  return BigRat(4) * sqrt3_upper() * kth_root_upper(ipow(P, 3), 2);
}

QuotientReport quotient_threshold_check(const PointSet& E) {
  const Fq& F = E.F();
  const BigInt n(static_cast<unsigned long>(E.size()));
  const BigInt qd = ipow(BigInt(static_cast<unsigned long>(F.q())), E.d);
  QuotientReport rep;
  auto quotient = [&] { return quotient_set(distance_set(E), F); };
  if (E.d % 2 == 0) {
    rep.name = "quotient_full_field_even_d";
    rep.hypothesis_ok = n * n >= 81 * qd;
    if (!rep.hypothesis_ok) return rep;
    auto qs = quotient();
    bool full = qs.size() == F.q();
    rep.verdict = full ? Verdict::holds : Verdict::violated;
  } else {
    rep.name = "quotient_contains_squares_odd_d";
    rep.hypothesis_ok = E.d >= 3 && n * n >= 36 * qd;
    if (!rep.hypothesis_ok) return rep;
    auto qs = quotient();
    bool ok = qs.count(0) == 1;
    for (code_t a : F.qr_set())
      if (!qs.count(a)) ok = false;
    rep.verdict = ok ? Verdict::holds : Verdict::violated;
  }
  return rep;
}

}  // namespace fqc
