#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fqc/geom.hpp"

namespace fqc {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Per-point distance profile: profile[i][t] = #{j : ||E_j - E_i|| = t}.
/// Row sums equal |E|; the diagonal contributes to t = 0.
struct DistProfile {
  std::vector<std::vector<std::uint32_t>> counts;

  std::uint32_t at(std::size_t i, code_t t) const { return counts[i][t]; }
};

DistProfile build_profiles(const PointSet& E);

/// Adjacency of the graph on E x E: (x,y) ~ (x',y') iff ||y'-y|| = r||x'-x|| != 0.
/// Throws std::invalid_argument on r = 0.
bool adjacency(const Fq& F, const Point& x, const Point& y, const Point& xp,
               const Point& yp, code_t r);

/// Degrees and walk counts of the auxiliary graph for a fixed dilation ratio.
/// The graph itself is never materialized: degrees come from the profile
/// convolution deg(x,y) = sum_{t != 0} N_x(t) N_y(rt), and each walk step is
/// a two-stage distance-class convolution costing O(|E|^3 + q|E|^2).
class AuxGraph {
 public:
  /// Throws std::invalid_argument on r = 0.
  AuxGraph(const PointSet& E, code_t r);

  code_t ratio() const { return r_; }
  std::size_t n_points() const { return n_; }

  /// deg(x_i, y_j) where i, j index points of E.
  BigInt degree(std::size_t i, std::size_t j) const;

  /// sum_v deg(v)^k over all |E|^2 vertices; equals |S_k(r)|.
  BigInt degree_power_sum(unsigned k) const;

  /// w_0..w_kmax; w_k equals |P_k(r)|.
  std::vector<BigInt> walk_counts(unsigned kmax) const;

 private:
  const PointSet& E_;
  code_t r_;
  std::size_t n_;
  DistProfile profile_;
  std::vector<std::vector<code_t>> dmat_;  // pairwise distances
};

struct InequalityCheck {
  std::string name;
  bool holds = false;
  bool equality = false;
};

/// Checks w_1^k <= w_0^{k-1} w_k for 1 <= k <= kmax and
/// w_{2a+b} w_b <= w_0 w_{2(a+b)} for all a, b >= 0 with 2(a+b) <= kmax.
std::vector<InequalityCheck> verify_walk_inequalities(const std::vector<BigInt>& w);

/// A small explicit graph, used as an independent oracle: walk counts by
/// adjacency-matrix iteration.
struct ExplicitGraph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;

  explicit ExplicitGraph(std::size_t n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}
  void add_edge(std::size_t i, std::size_t j) {
    adj[i][j] = true;
    adj[j][i] = true;
  }
  std::vector<BigInt> walk_counts(unsigned kmax) const;
};

}  // namespace fqc
