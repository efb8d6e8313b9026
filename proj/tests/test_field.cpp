#include <doctest.h>

#include "fqc/field.hpp"

using namespace fqc;

TEST_CASE("prime field construction") {
  Fq F(3);
  CHECK(F.p() == 3);
  CHECK(F.e() == 1);
  CHECK(F.q() == 3);
  CHECK(F.modulus().empty());
}

TEST_CASE("F_9 uses modulus x^2+1") {
  Fq F(9);
  CHECK(F.p() == 3);
  CHECK(F.e() == 2);
  // coefficients low degree first: 1 + 0x + x^2
  CHECK(F.modulus() == std::vector<code_t>{1, 0, 1});
  // code 3 encodes x; x*x = -1 = 2
  CHECK(F.mul(3, 3) == 2);
}

TEST_CASE("construction rejections") {
  CHECK_THROWS_AS(Fq(8), std::invalid_argument);   // even
  CHECK_THROWS_AS(Fq(15), std::invalid_argument);  // not a prime power
  CHECK_THROWS_AS(Fq(1), std::invalid_argument);
  CHECK_THROWS_AS(Fq((1u << 20) + 1), std::invalid_argument);  // over the cap
}

TEST_CASE("basic arithmetic") {
  Fq F3(3);
  CHECK(F3.add(2, 2) == 1);
  Fq F5(5);
  CHECK(F5.inv(2) == 3);
  CHECK_THROWS_AS(F5.inv(0), std::domain_error);
  for (code_t a = 1; a < 5; ++a) CHECK(F5.mul(a, F5.inv(a)) == 1);
}

TEST_CASE("quadratic character values") {
  Fq F3(3);
  CHECK(F3.quad_char(0) == 0);
  CHECK(F3.quad_char(1) == 1);
  CHECK(F3.quad_char(2) == -1);
  Fq F5(5);
  CHECK(F5.quad_char(4) == 1);
}

TEST_CASE("qr sets") {
  CHECK(Fq(3).qr_set() == std::vector<code_t>{1});
  CHECK(Fq(5).qr_set() == std::vector<code_t>{1, 4});
  CHECK(Fq(7).qr_set() == std::vector<code_t>{1, 2, 4});
}

TEST_CASE("mu") {
  Fq F5(5);
  CHECK(F5.mu(0) == 4);
  CHECK(F5.mu(3) == -1);
  CHECK(Fq(3).mu(0) == 2);
}

TEST_CASE("character properties, exhaustive for q <= 49") {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    CAPTURE(q);
    Fq F(q);
    long long sum = 0;
    for (code_t a = 0; a < q; ++a) sum += F.quad_char(a);
    CHECK(sum == 0);
    CHECK(F.qr_set().size() == (q - 1) / 2);
    for (code_t a = 0; a < q; ++a) {
      // Frobenius fixed point
      CHECK(F.pow(a, q) == a);
      for (code_t b = 0; b < q; ++b)
        CHECK(F.quad_char(F.mul(a, b)) == F.quad_char(a) * F.quad_char(b));
    }
  }
}

TEST_CASE("addition is componentwise in the polynomial basis") {
  Fq F(27);
  for (code_t a = 0; a < 27; ++a) {
    CHECK(F.add(a, F.neg(a)) == 0);
    CHECK(F.sub(a, a) == 0);
  }
  // distributivity spot check
  for (code_t a : {3u, 7u, 20u})
    for (code_t b : {1u, 5u, 26u})
      for (code_t c : {2u, 13u})
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
}
