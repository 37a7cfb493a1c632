#include <doctest.h>

#include "picardcy/hilbert.hpp"

using namespace picardcy;

TEST_SUITE("hilbert") {
  TEST_CASE("dimension table and cubic") {
    CHECK(dim_g33(0) == 1);
    CHECK(dim_g33(1) == 15);
    CHECK(dim_g33(4) == 3115);
    CHECK(dim_g33(5) == 9558);
    CHECK(dim_g33_cubic().leading() == Rational(729, 2));
    CHECK(dim_g33_cubic()(5) == 9558);
    CHECK_THROWS_AS(dim_g33(-1), std::domain_error);
  }

  TEST_CASE("dimension values are integers and increase") {
    for (long k = 1; k <= 40; ++k) CHECK(dim_g33(k) > dim_g33(k - 1));
  }

  TEST_CASE("fourth difference numerator sums to 3! times the leading coefficient") {
    // sum_k d(k) t^k = N(t) / (1 - t)^4 with N(1) = 3! * leading coefficient
    BigInt n1 = 0;
    for (long k = 0; k <= 12; ++k) {
      BigInt nk = 0;
      const long binom4[] = {1, -4, 6, -4, 1};
      for (long i = 0; i <= 4 && i <= k; ++i) nk += binom4[i] * dim_g33(k - i);
      if (k > 8) CHECK(nk == 0);
      n1 += nk;
    }
    CHECK(n1 == 2187);
  }

  TEST_CASE("eisenstein part") {
    CHECK(eisenstein_part(1) == 15);
    CHECK(eisenstein_part(4) == 765);
    CHECK(eisenstein_part(5) == 810);
    CHECK(eisenstein_part(100) == 810);
    CHECK_THROWS_AS(eisenstein_part(0), std::domain_error);
  }

  TEST_CASE("complete intersection coefficients") {
    CHECK(ci_dim(-1) == 0);
    CHECK(ci_dim(0) == 1);
    CHECK(ci_dim(1) == 6);
    CHECK(ci_dim(2) == 21);
    CHECK(ci_dim(3) == 54);
    for (long k = 1; k <= 30; ++k) CHECK(ci_dim(k) > ci_dim(k - 1));
  }

  TEST_CASE("oracle agrees on small degrees") {
    for (long k = 0; k <= 8; ++k) {
      CAPTURE(k);
      CHECK(ci_dim_oracle(k) == ci_dim(k));
    }
    CHECK_THROWS_AS(ci_dim_oracle(-1), std::domain_error);
    CHECK_THROWS_AS(ci_dim_oracle(13), std::domain_error);
  }

  TEST_CASE("hilbert polynomial") {
    Cubic h = hilbert_polynomial_ci();
    CHECK(h.coeffs[0] == 0);
    CHECK(h.coeffs[1] == Rational(9, 2));
    CHECK(h.coeffs[2] == 0);
    CHECK(h.coeffs[3] == Rational(3, 2));
    for (long k = 1; k <= 30; ++k) CHECK(h(k) == Rational(ci_dim(k)));
    // k = 0 is the one place the Hilbert function and polynomial differ
    CHECK(h(0) != Rational(ci_dim(0)));
  }

  TEST_CASE("leading ratio") { CHECK(covering_degree_from_leading() == 243); }
}
