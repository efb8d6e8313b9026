#pragma once

#include <memory>
#include <set>
#include <vector>

#include "fqc/field.hpp"

namespace fqc {

/// A point of F_q^d: d field-element codes.
using Point = std::vector<code_t>;

/// A distinct-point subset E of F_q^d.
struct PointSet {
  std::shared_ptr<const Fq> field;
  unsigned d = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  const Fq& F() const { return *field; }

  /// Throws std::invalid_argument on duplicate points or malformed coords.
  void validate() const;
};

/// ||x|| = x_1^2 + ... + x_d^2.
code_t norm(const Fq& F, const Point& x);

/// ||x - y||.
code_t dist(const Fq& F, const Point& x, const Point& y);

/// Exact |S(x, t)| by the closed form:
///   d even:     q^{d-1} + mu(t) q^{(d-2)/2} chi((-1)^{d/2})
///   d odd >= 3: q^{d-1} + q^{(d-1)/2} chi((-1)^{(d-1)/2} t)
/// Throws std::invalid_argument for d < 2.
long long sphere_size_formula(const Fq& F, unsigned d, code_t t);

/// Enumerates S(center, t) by coordinate recursion; final coordinate comes
/// from a precomputed root table of x^2 = c, so cost scales with the output,
/// not with q^d.
std::vector<Point> sphere_enum(const Fq& F, unsigned d, const Point& center, code_t t);

/// The perpendicular bisector {v : ||v-u|| = ||v-w||}; exactly q^{d-1} points.
/// Throws std::invalid_argument when u = w.
std::vector<Point> bisector_enum(const Fq& F, unsigned d, const Point& u, const Point& w);

/// Delta(E) = {||x-y|| : x, y in E}. The diagonal x = y contributes 0 unless
/// include_diagonal is false.
std::set<code_t> distance_set(const PointSet& E, bool include_diagonal = true);

/// S/S' = {a/b : a in S, b in S, b != 0}; empty when S has no nonzero element.
std::set<code_t> quotient_set(const std::set<code_t>& S, const Fq& F);

}  // namespace fqc
