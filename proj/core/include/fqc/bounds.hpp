#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqc/auxgraph.hpp"
#include "fqc/geom.hpp"

namespace fqc {

enum class Verdict { holds, violated, vacuous };

std::string to_string(Verdict v);

/// One evaluated theorem bound. Bounds are exact rationals; anywhere the paper
/// has an irrational constant the stored value is a rational upper enclosure,
/// so a "holds" verdict is sound.
struct BoundReport {
  std::string name;
  bool hypothesis_ok = true;
  BigRat bound = 0;
  std::optional<BigInt> exact;
  Verdict verdict = Verdict::vacuous;
};

/// Applies the verdict rule: vacuous when the hypothesis fails or bound <= 0,
/// otherwise holds/violated by exact comparison.
void settle(BoundReport& rep);

BigInt ipow(BigInt base, unsigned exp);
BigInt binom2(unsigned k);  // k choose 2

/// Smallest s/10^6 with (s/10^6)^k >= m; a rational upper enclosure of m^{1/k}.
BigRat kth_root_upper(const BigInt& m, unsigned k);

/// Rational upper enclosure of sqrt(3), within 1e-4.
inline BigRat sqrt3_upper() { return BigRat(97, 56); }

enum class RDomain { all_nonzero, squares_only };

std::string to_string(RDomain d);

/// Lower bound on |S_1(r)| for |E| = n in F_q^d; the even case covers
/// r in F_q^*, the odd case only r in F_q^+. Hypothesis: n >= q^{d/2},
/// compared as n^2 >= q^d.
BoundReport s1_lower_bound(std::uint64_t q, unsigned d, const BigInt& n);

struct Threshold {
  BigRat size;
  RDomain domain;
};

/// Sufficient |E| for a pair of k-stars: (31+10C(k,2))q^{d/2} for even d
/// (q >= 5), (4+sqrt(3)C(k,2))q^{d/2} enclosed from above for odd d.
Threshold star_pair_threshold(std::uint64_t q, unsigned d, unsigned k);

/// Sufficient |E| for a pair of 4-paths; five (q, d) cases.
Threshold path4_threshold(std::uint64_t q, unsigned d);

/// |B| >= n^{-2} S_{k-1} (S_1 - 2C(k,2)n^3 + C(k,2)n^2).
BoundReport star_B_lower_bound(const BigInt& n, unsigned k, const BigInt& S1,
                               const BigInt& Sk_minus_1);

/// |C| >= P_4 - 10n P_3 - 3n^3 q^{2d-2} P_1 - n^2 P_2 for 2 <= d <= 4;
/// the q-power term becomes 2n^5 P_1 for d >= 5.
BoundReport path_C_lower_bound(const BigInt& n, std::uint64_t q, unsigned d,
                               const BigInt& P1, const BigInt& P2, const BigInt& P3,
                               const BigInt& P4);

/// The four P-chain inequalities in cleared-denominator integer form.
std::vector<InequalityCheck> p_chain_checks(const BigInt& n,
                                            const std::vector<BigInt>& P);

/// Holder consequences for S-counts: S_k^{k-1} n^2 >= S_{k-1}^k, k in {2, 3}.
std::vector<InequalityCheck> s_holder_checks(const BigInt& n,
                                             const std::vector<BigInt>& S);

enum class RakhmonovPattern { path2, cycle4 };

/// (sqrt(3)+1)p for 2-paths, 4 sqrt(3) p^{3/2} for 4-cycles, both enclosed
/// from above; requires p prime with p = 3 (mod 4).
BigRat rakhmonov_threshold(std::uint64_t p, RakhmonovPattern pattern);

struct QuotientReport {
  std::string name;
  bool hypothesis_ok = false;
  Verdict verdict = Verdict::vacuous;
};

/// Theorem-level quotient-set check: |E| >= 9q^{d/2} (even d) forces
/// Delta/Delta = F_q; |E| >= 6q^{d/2} (odd d >= 3) forces containment of
/// F_q^+ u {0}. Size hypotheses compared as n^2 >= 81 q^d / n^2 >= 36 q^d.
QuotientReport quotient_threshold_check(const PointSet& E);

}  // namespace fqc
