#include "fqc/field.hpp"

#include <algorithm>
#include <numeric>

namespace fqc {
namespace {

// Factors q as p^e with p prime, or returns false.
bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& e) {
  if (q < 2) return false;
  std::uint64_t n = q;
  std::uint64_t f = 2;
  while (f * f > n ? false : n % f != 0) ++f;
  p = (f * f > n) ? n : f;
  e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1;
}

using Poly = std::vector<code_t>;  // coefficients mod p, low degree first

int deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g over F_p; g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  int dg = deg(g);
  for (int i = deg(f); i >= dg; i = deg(f)) {
    std::uint64_t c = f[i];
    if (c == 0) break;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t t = (std::uint64_t)g[j] * c % p;
      int k = i - dg + j;
      f[k] = static_cast<code_t>((f[k] + p - t) % p);
    }
  }
  f.resize(dg);
  return f;
}

Poly poly_mul_raw(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<code_t>((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
  }
  return r;
}

// Trial division against every monic polynomial of degree <= e/2.
bool irreducible(const Poly& f, std::uint64_t p, unsigned e) {
  for (unsigned dd = 1; dd <= e / 2; ++dd) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(dd + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < dd; ++i) {
        g[i] = static_cast<code_t>(t % p);
        t /= p;
      }
      g[dd] = 1;
      if (deg(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(std::uint64_t q) : q_(q) {
  if (q % 2 == 0) throw std::invalid_argument("even characteristic unsupported");
  if (q < 3) throw std::invalid_argument("field order must be at least 3");
  if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds build limit");
  if (!prime_power(q, p_, e_)) throw std::invalid_argument("order is not a prime power");

  if (e_ > 1) {
    // Lexicographically smallest monic irreducible of degree e, coefficients
    // ordered low degree first.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e_; ++i) count *= p_;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      Poly f(e_ + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < e_; ++i) {
        f[i] = static_cast<code_t>(t % p_);
        t /= p_;
      }
      f[e_] = 1;
      if (irreducible(f, p_, e_)) {
        modulus_.assign(f.begin(), f.end());
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  build_tables();
}

code_t Fq::add(code_t a, code_t b) const {
  if (e_ == 1) return static_cast<code_t>(((std::uint64_t)a + b) % p_);
  code_t r = 0, m = 1;
  for (unsigned i = 0; i < e_; ++i) {
    code_t da = static_cast<code_t>(a % p_), db = static_cast<code_t>(b % p_);
    r += static_cast<code_t>(((std::uint64_t)da + db) % p_) * m;
    a /= static_cast<code_t>(p_);
    b /= static_cast<code_t>(p_);
    m *= static_cast<code_t>(p_);
  }
  return r;
}

code_t Fq::neg(code_t a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<code_t>(p_ - a);
  code_t r = 0, m = 1;
  for (unsigned i = 0; i < e_; ++i) {
    code_t da = static_cast<code_t>(a % p_);
    r += (da == 0 ? 0 : static_cast<code_t>(p_ - da)) * m;
    a /= static_cast<code_t>(p_);
    m *= static_cast<code_t>(p_);
  }
  return r;
}

code_t Fq::sub(code_t a, code_t b) const { return add(a, neg(b)); }

code_t Fq::poly_mul(code_t a, code_t b) const {
  if (e_ == 1) return static_cast<code_t>((std::uint64_t)a * b % p_);
  Poly pa(e_), pb(e_);
  for (unsigned i = 0; i < e_; ++i) {
    pa[i] = static_cast<code_t>(a % p_);
    a /= static_cast<code_t>(p_);
    pb[i] = static_cast<code_t>(b % p_);
    b /= static_cast<code_t>(p_);
  }
  Poly mod(modulus_.begin(), modulus_.end());
  Poly r = poly_mod(poly_mul_raw(pa, pb, p_), mod, p_);
  code_t out = 0, m = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += (i < r.size() ? r[i] : 0) * m;
    m *= static_cast<code_t>(p_);
  }
  return out;
}

code_t Fq::mul(code_t a, code_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + (std::uint64_t)log_[b]) % (q_ - 1)];
}

code_t Fq::inv(code_t a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

code_t Fq::pow(code_t a, std::uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  return exp_[(std::uint64_t)log_[a] * (n % (q_ - 1)) % (q_ - 1)];
}

code_t Fq::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = ((v % m) + m) % m;
  return static_cast<code_t>(r);
}

void Fq::build_tables() {
  // Find a generator of F_q^* by direct order computation through the slow
  // polynomial multiply, then freeze exp/log.
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = q_ - 1;
  for (std::uint64_t f = 2; f * f <= m; ++f)
    if (m % f == 0) {
      prime_factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  if (m > 1) prime_factors.push_back(m);

  auto pow_slow = [&](code_t a, std::uint64_t n) {
    code_t r = 1, base = a;
    while (n) {
      if (n & 1) r = poly_mul(r, base);
      base = poly_mul(base, base);
      n >>= 1;
    }
    return r;
  };

  for (code_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t f : prime_factors)
      if (pow_slow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  code_t x = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, generator_);
  }

  // chi(g^i) = (-1)^i; squares are the even powers.
  chi_.assign(q_, 0);
  for (std::uint64_t i = 0; i < q_ - 1; ++i)
    chi_[exp_[i]] = (i % 2 == 0) ? 1 : -1;

  qr_.clear();
  for (code_t a = 1; a < q_; ++a)
    if (chi_[a] == 1) qr_.push_back(a);
}

}  // namespace fqc
