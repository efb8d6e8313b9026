#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqc {

/// Field element code in [0, q). Codes are base-p digit vectors read as
/// coefficients in the polynomial basis (low degree first).
using code_t = std::uint32_t;

// Largest supported field order. Everything downstream materializes O(q)
// tables, so this is a hard construction limit rather than a soft hint.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

/// Exact arithmetic in F_q, q = p^e an odd prime power.
///
/// Multiplication and inversion run through exp/log tables over a fixed
/// generator of F_q^*; addition is digit-wise mod p. The modulus is the
/// lexicographically smallest monic irreducible of degree e over F_p
/// (coefficients compared low degree first), so element codes are stable
/// across runs and platforms.
class Fq {
 public:
  /// Builds F_q. Throws std::invalid_argument for even q, non-prime-powers,
  /// q < 3, or q beyond kMaxFieldOrder.
  explicit Fq(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }

  /// Modulus coefficients, low degree first, length e+1; empty for e = 1.
  const std::vector<code_t>& modulus() const { return modulus_; }

  code_t add(code_t a, code_t b) const;
  code_t sub(code_t a, code_t b) const;
  code_t neg(code_t a) const;
  code_t mul(code_t a, code_t b) const;
  /// Throws std::domain_error on a = 0.
  code_t inv(code_t a) const;

  code_t pow(code_t a, std::uint64_t n) const;

  code_t zero() const { return 0; }
  code_t one() const { return 1; }
  /// The code of -1 (= p-1 in the prime subfield).
  code_t minus_one() const { return neg(1); }
  /// Embeds a small integer (possibly negative) via the prime subfield.
  code_t from_int(long long v) const;

  /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int quad_char(code_t a) const { return chi_[a]; }

  /// The nonzero quadratic residues F_q^+; size (q-1)/2, sorted.
  const std::vector<code_t>& qr_set() const { return qr_; }

  /// mu(0) = q-1, mu(t) = -1 for t != 0.
  long long mu(code_t t) const { return t == 0 ? static_cast<long long>(q_) - 1 : -1; }

  bool is_square(code_t a) const { return chi_[a] >= 0; }

 private:
  std::uint64_t q_ = 0;
  std::uint64_t p_ = 0;
  unsigned e_ = 1;
  std::vector<code_t> modulus_;

  code_t generator_ = 0;
  std::vector<code_t> exp_;        // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_; // log_[a], a != 0
  std::vector<std::int8_t> chi_;
  std::vector<code_t> qr_;

  void build_tables();
  code_t poly_mul(code_t a, code_t b) const; // slow path, used to bootstrap
};

}  // namespace fqc
