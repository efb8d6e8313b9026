#include "fqc/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqc {

void PointSet::validate() const {
  const std::uint64_t q = F().q();
  for (const Point& pt : points) {
    if (pt.size() != d) throw std::invalid_argument("point has wrong dimension");
    for (code_t c : pt)
      if (c >= q) throw std::invalid_argument("coordinate out of range");
  }
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate point in set");
}

code_t norm(const Fq& F, const Point& x) {
  code_t s = 0;
  for (code_t c : x) s = F.add(s, F.mul(c, c));
  return s;
}

code_t dist(const Fq& F, const Point& x, const Point& y) {
  code_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    code_t diff = F.sub(x[i], y[i]);
    s = F.add(s, F.mul(diff, diff));
  }
  return s;
}

long long sphere_size_formula(const Fq& F, unsigned d, code_t t) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  const long long q = static_cast<long long>(F.q());
  auto qpow = [&](unsigned k) {
    long long r = 1;
    while (k--) r *= q;
    return r;
  };
  if (d % 2 == 0) {
    code_t arg = F.pow(F.minus_one(), d / 2);
    return qpow(d - 1) + F.mu(t) * qpow((d - 2) / 2) * F.quad_char(arg);
  }
  code_t arg = F.mul(F.pow(F.minus_one(), (d - 1) / 2), t);
  return qpow(d - 1) + qpow((d - 1) / 2) * F.quad_char(arg);
}

namespace {

// roots[c] = all x with x^2 = c.
std::vector<std::vector<code_t>> square_roots(const Fq& F) {
  std::vector<std::vector<code_t>> roots(F.q());
  for (code_t x = 0; x < F.q(); ++x) roots[F.mul(x, x)].push_back(x);
  return roots;
}

void sphere_rec(const Fq& F, unsigned d, const Point& center, code_t residual,
                const std::vector<std::vector<code_t>>& roots, Point& prefix,
                std::vector<Point>& out) {
  if (prefix.size() + 1 == d) {
    for (code_t delta : roots[residual]) {
      prefix.push_back(F.add(center[d - 1], delta));
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const std::size_t i = prefix.size();
  for (code_t delta = 0; delta < F.q(); ++delta) {
    code_t rem = F.sub(residual, F.mul(delta, delta));
    prefix.push_back(F.add(center[i], delta));
    sphere_rec(F, d, center, rem, roots, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Point> sphere_enum(const Fq& F, unsigned d, const Point& center, code_t t) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  auto roots = square_roots(F);
  std::vector<Point> out;
  Point prefix;
  prefix.reserve(d);
  sphere_rec(F, d, center, t, roots, prefix, out);
  return out;
}

std::vector<Point> bisector_enum(const Fq& F, unsigned d, const Point& u, const Point& w) {
  if (u == w) throw std::invalid_argument("degenerate bisector");
  // 2(w-u).v = ||w|| - ||u||, a nondegenerate linear equation in odd char.
  std::vector<code_t> coef(d);
  for (unsigned i = 0; i < d; ++i) coef[i] = F.mul(F.from_int(2), F.sub(w[i], u[i]));
  code_t rhs = F.sub(norm(F, w), norm(F, u));

  unsigned pivot = 0;
  while (coef[pivot] == 0) ++pivot;
  code_t pivot_inv = F.inv(coef[pivot]);

  std::vector<Point> out;
  out.reserve(1);
  Point v(d, 0);
  // Iterate over the free coordinates as a mixed-radix counter.
  std::vector<code_t> free_vals(d - 1, 0);
  while (true) {
    unsigned fi = 0;
    code_t acc = 0;
    for (unsigned i = 0; i < d; ++i) {
      if (i == pivot) continue;
      v[i] = free_vals[fi++];
      acc = F.add(acc, F.mul(coef[i], v[i]));
    }
    v[pivot] = F.mul(pivot_inv, F.sub(rhs, acc));
    out.push_back(v);

    unsigned k = 0;
    for (; k < free_vals.size(); ++k) {
      if (++free_vals[k] < F.q()) break;
      free_vals[k] = 0;
    }
    if (k == free_vals.size()) break;
  }
  return out;
}

std::set<code_t> distance_set(const PointSet& E, bool include_diagonal) {
  const Fq& F = E.F();
  std::set<code_t> out;
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = include_diagonal ? i : i + 1; j < E.size(); ++j)
      out.insert(dist(F, E.points[i], E.points[j]));
  return out;
}

std::set<code_t> quotient_set(const std::set<code_t>& S, const Fq& F) {
  std::set<code_t> out;
  for (code_t b : S) {
    if (b == 0) continue;
    code_t binv = F.inv(b);
    for (code_t a : S) out.insert(F.mul(a, binv));
  }
  return out;
}

}  // namespace fqc
