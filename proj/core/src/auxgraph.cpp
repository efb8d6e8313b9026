#include "fqc/auxgraph.hpp"

#include <stdexcept>

namespace fqc {

DistProfile build_profiles(const PointSet& E) {
  const Fq& F = E.F();
  DistProfile prof;
  prof.counts.assign(E.size(), std::vector<std::uint32_t>(F.q(), 0));
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j)
      ++prof.counts[i][dist(F, E.points[i], E.points[j])];
  return prof;
}

bool adjacency(const Fq& F, const Point& x, const Point& y, const Point& xp,
               const Point& yp, code_t r) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  code_t dx = dist(F, x, xp);
  if (dx == 0) return false;
  return dist(F, y, yp) == F.mul(r, dx);
}

AuxGraph::AuxGraph(const PointSet& E, code_t r) : E_(E), r_(r), n_(E.size()) {
  if (r == 0) throw std::invalid_argument("dilation ratio must be nonzero");
  profile_ = build_profiles(E);
  const Fq& F = E.F();
  dmat_.assign(n_, std::vector<code_t>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      dmat_[i][j] = dist(F, E.points[i], E.points[j]);
}

BigInt AuxGraph::degree(std::size_t i, std::size_t j) const {
  const Fq& F = E_.F();
  BigInt deg = 0;
  for (code_t t = 1; t < F.q(); ++t) {
    std::uint64_t a = profile_.at(i, t);
    std::uint64_t b = profile_.at(j, F.mul(r_, t));
    deg += BigInt(a * b);
  }
  return deg;
}

BigInt AuxGraph::degree_power_sum(unsigned k) const {
  BigInt total = 0;
  BigInt dk;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      mpz_pow_ui(dk.get_mpz_t(), degree(i, j).get_mpz_t(), k);
      total += dk;
    }
  return total;
}

std::vector<BigInt> AuxGraph::walk_counts(unsigned kmax) const {
  const Fq& F = E_.F();
  const std::size_t q = F.q();

  std::vector<BigInt> w;
  w.reserve(kmax + 1);
  w.push_back(BigInt(static_cast<unsigned long>(n_)) * static_cast<unsigned long>(n_));

  // c[i*n + j] = number of walks of the current length ending at vertex (i, j).
  std::vector<BigInt> c(n_ * n_, 1);
  std::vector<BigInt> agg(n_ * q);  // agg[i'*q + t] = sum over j' at distance t from j
  std::vector<BigInt> next(n_ * n_);

  for (unsigned step = 1; step <= kmax; ++step) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (auto& v : agg) v = 0;
      for (std::size_t ip = 0; ip < n_; ++ip)
        for (std::size_t jp = 0; jp < n_; ++jp)
          agg[ip * q + dmat_[j][jp]] += c[ip * n_ + jp];
      for (std::size_t i = 0; i < n_; ++i) {
        BigInt sum = 0;
        for (std::size_t ip = 0; ip < n_; ++ip) {
          code_t t = dmat_[i][ip];
          if (t == 0) continue;
          sum += agg[ip * q + F.mul(r_, t)];
        }
        next[i * n_ + j] = sum;
      }
    }
    c.swap(next);
    BigInt total = 0;
    for (const BigInt& v : c) total += v;
    w.push_back(total);
  }
  return w;
}

std::vector<InequalityCheck> verify_walk_inequalities(const std::vector<BigInt>& w) {
  std::vector<InequalityCheck> out;
  const unsigned kmax = static_cast<unsigned>(w.size()) - 1;
  BigInt lhs, rhs;
  for (unsigned k = 1; k <= kmax; ++k) {
    mpz_pow_ui(lhs.get_mpz_t(), w[1].get_mpz_t(), k);
    mpz_pow_ui(rhs.get_mpz_t(), w[0].get_mpz_t(), k - 1);
    rhs *= w[k];
    InequalityCheck chk;
    chk.name = "w1^" + std::to_string(k) + " <= w0^" + std::to_string(k - 1) + "*w" +
               std::to_string(k);
    chk.holds = lhs <= rhs;
    chk.equality = lhs == rhs;
    out.push_back(std::move(chk));
  }
  for (unsigned a = 0; 2 * a <= kmax; ++a)
    for (unsigned b = 0; 2 * (a + b) <= kmax && 2 * a + b <= kmax; ++b) {
      lhs = w[2 * a + b] * w[b];
      rhs = w[0] * w[2 * (a + b)];
      InequalityCheck chk;
      chk.name = "w" + std::to_string(2 * a + b) + "*w" + std::to_string(b) +
                 " <= w0*w" + std::to_string(2 * (a + b));
      chk.holds = lhs <= rhs;
      chk.equality = lhs == rhs;
      out.push_back(std::move(chk));
    }
  return out;
}

std::vector<BigInt> ExplicitGraph::walk_counts(unsigned kmax) const {
  std::vector<BigInt> w;
  w.push_back(BigInt(static_cast<unsigned long>(n)));
  std::vector<BigInt> c(n, 1), next(n);
  for (unsigned step = 1; step <= kmax; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (adj[i][j]) next[i] += c[j];
    }
    c.swap(next);
    BigInt total = 0;
    for (const BigInt& v : c) total += v;
    w.push_back(total);
  }
  return w;
}

}  // namespace fqc
