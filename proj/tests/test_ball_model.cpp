#include <doctest.h>

#include <cmath>

#include "picardcy/ball_model.hpp"

using namespace picardcy;

namespace {

double dist(const BallPoint& a, const BallPoint& b) {
  return std::abs(a.w1 - b.w1) + std::abs(a.w3 - b.w3) + std::abs(a.w4 - b.w4);
}

CMatrix diag(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m{};
  m[0] = a;
  m[5] = b;
  m[10] = c;
  m[15] = d;
  return m;
}

}  // namespace

TEST_SUITE("ball_model") {
  TEST_CASE("embedding") {
    Complex z = embed(CycRat::zeta());
    CHECK(z.real() == doctest::Approx(-0.5));
    CHECK(z.imag() == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(std::abs(z * z * z - 1.0) < 1e-12);
    CHECK(std::abs(cmat_det(embed(HermMatrix::identity())) - 1.0) < 1e-12);
  }

  TEST_CASE("identity and minus identity") {
    BallPoint p = sample_ball_point(1);
    auto r = act(cmat_identity(), p);
    CHECK(std::abs(r.j - 1.0) < 1e-12);
    CHECK(dist(r.gz, p) < 1e-12);
    CMatrix minus = diag(-1.0, -1.0, -1.0, -1.0);
    auto s = act(minus, p);
    CHECK(std::abs(s.j + 1.0) < 1e-12);
    CHECK(dist(s.gz, p) < 1e-12);
  }

  TEST_CASE("scalar zeta acts trivially") {
    CMatrix m = embed(HermMatrix::scalar(CycRat::zeta()));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      BallPoint p = sample_ball_point(seed);
      auto r = act(m, p);
      CHECK(dist(r.gz, p) < 1e-12);
      CHECK(std::abs(r.j - embed(CycRat::zeta())) < 1e-12);
      CHECK(jacobian_lemma_check(m, p) < 1e-7);
    }
  }

  TEST_CASE("diagonal unitary closed form") {
    Complex zeta = embed(CycRat::zeta());
    Complex a = zeta, b = zeta, c = -1.0, d = zeta * zeta;
    CMatrix m = diag(a, b, c, d);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      BallPoint p = sample_ball_point(seed);
      auto r = act(m, p);
      CHECK(std::abs(r.j - b) < 1e-12);
      BallPoint want{a / b * p.w1, c / b * p.w3, d / b * p.w4};
      CHECK(dist(r.gz, want) < 1e-12);
      Complex jac = jacobian_numeric(m, p);
      Complex closed = a * c * d / (b * b * b);
      CHECK(std::abs(jac - closed) / std::abs(closed) < 1e-7);
    }
  }

  TEST_CASE("cocycle identity") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CMatrix g = random_triflection_product(2 * seed, 3);
      CMatrix h = random_triflection_product(2 * seed + 1, 2);
      BallPoint p = sample_ball_point(seed);
      auto hz = act(h, p);
      auto ghz = act(g, hz.gz);
      auto direct = act(cmat_mul(g, h), p);
      CHECK(std::abs(direct.j - ghz.j * hz.j) < 1e-9 * std::abs(direct.j));
      CHECK(dist(direct.gz, ghz.gz) < 1e-9);
    }
  }

  TEST_CASE("triflection products preserve the form") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CMatrix g = random_triflection_product(seed, 4);
      CVector u = sample_ball_point(seed).lift();
      CVector v = sample_ball_point(seed + 1000).lift();
      Complex before = herm_form(u, v);
      Complex after = herm_form(cmat_apply(g, u), cmat_apply(g, v));
      CHECK(std::abs(after - before) < 1e-9 * (1 + std::abs(before)));
      CHECK(std::abs(std::abs(cmat_det(g)) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("jacobian lemma on random elements") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CMatrix g = random_triflection_product(seed, 1 + static_cast<int>(seed % 4));
      CHECK(jacobian_lemma_check(g, sample_ball_point(seed)) < 1e-6);
    }
  }

  TEST_CASE("sampling") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      BallPoint p = sample_ball_point(seed);
      BallPoint q = sample_ball_point(seed);
      CHECK(dist(p, q) == 0.0);
      CHECK(p.positivity() >= 0.1);
      CHECK(p.w1.real() >= 0.5);
      CHECK(p.w1.real() <= 2.0);
      CHECK(std::abs(p.w3) <= 0.5);
      CHECK(std::abs(p.w4) <= 0.5);
    }
    CHECK(dist(sample_ball_point(1), sample_ball_point(2)) > 0);
    CMatrix a = random_triflection_product(5, 3), b = random_triflection_product(5, 3);
    CHECK(a == b);
  }

  TEST_CASE("act rejects a degenerate factor") {
    CMatrix zero{};
    CHECK_THROWS_AS(act(zero, sample_ball_point(0)), std::domain_error);
  }
}
