#include <doctest.h>

#include "picardcy/hermitian.hpp"

using namespace picardcy;

namespace {

HermVector vec(CycRat a, CycRat b, CycRat c, CycRat d) { return {a, b, c, d}; }

HermVector basis(std::size_t i) {
  HermVector e{};
  e[i] = CycRat(1);
  return e;
}

}  // namespace

TEST_SUITE("hermitian") {
  TEST_CASE("herm_form examples") {
    CHECK(herm_form(basis(2), basis(2)) == CycRat(-1));
    HermVector v = vec(CycRat::zeta(), -1, 1, 1);
    CHECK(herm_form(v, v) == CycRat(-1));
    CHECK(herm_form(basis(0), basis(1)) == CycRat(1));
  }

  TEST_CASE("herm_form is hermitian and sesquilinear") {
    HermVector a = vec(CycRat(1, 2), CycRat::zeta(), Rational(1, 3), -2);
    HermVector b = vec(-1, CycRat(0, 3), CycRat::zeta_pow(2), Rational(5, 2));
    CHECK(herm_form(a, b) == conj(herm_form(b, a)));
    CycRat s{2, 1};
    HermVector sa = a;
    for (auto& x : sa) x *= s;
    CHECK(herm_form(sa, b) == conj(s) * herm_form(a, b));
    CHECK(herm_form(b, sa) == s * herm_form(b, a));
  }

  TEST_CASE("signature (1,3)") {
    HermVector pos = vec(1, 1, 0, 0);
    CHECK(herm_form(pos, pos) == CycRat(2));
    // On {a1 = a2 = 0} the form is -|a3|^2 - |a4|^2.
    HermVector neg = vec(0, 0, CycRat(1, 1), CycRat(Rational(1, 2), -3));
    CHECK(herm_form(neg, neg) == CycRat(-(norm(neg[2]) + norm(neg[3]))));
    HermVector diff = vec(1, -1, 0, 0);
    CHECK(herm_form(diff, diff) == CycRat(-2));
    HermVector iso = vec(1, 0, 0, 0);
    CHECK(herm_form(iso, iso).is_zero());
  }

  TEST_CASE("reflection examples") {
    HermVector b = vec(CycRat::zeta(), -1, 1, 1);
    HermMatrix r = reflection(b, CycRat::zeta());
    HermVector rb = r.apply(b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(rb[i] == CycRat::zeta() * b[i]);

    // vectors orthogonal to b are fixed
    for (const HermVector& a : {vec(CycRat::zeta_pow(2), 1, 0, 0), vec(0, 0, 1, -1)}) {
      REQUIRE(herm_form(b, a).is_zero());
      CHECK(r.apply(a) == a);
    }

    CHECK(r.pow(3) == HermMatrix::identity());
    CHECK(!(r == HermMatrix::identity()));
  }

  TEST_CASE("is_unitary examples") {
    CHECK(is_unitary(HermMatrix::identity()));
    HermMatrix r = triflection(basis(2));
    CHECK(r == HermMatrix::diagonal({1, 1, CycRat::zeta(), 1}));
    CHECK(is_unitary(r));
    CHECK_FALSE(is_unitary(HermMatrix::diagonal({2, 1, 1, 1})));
  }

  TEST_CASE("reflection errors") {
    HermVector iso = vec(1, 0, 0, 0);
    CHECK_THROWS_AS(reflection(iso, CycRat::zeta()), std::domain_error);
    CHECK_THROWS_AS(reflection(basis(2), CycRat(1)), std::domain_error);
    CHECK_THROWS_AS(reflection(basis(2), CycRat(2)), std::domain_error);
  }

  TEST_CASE("mirror table") {
    const auto& t = mirror_table();
    CHECK(t.at(1) == LatticeVector{0, 0, 1, 0});
    CHECK(t.at(15) == LatticeVector{EisensteinInt::zeta(), 1, 0, 0});
    for (int l = 1; l <= MirrorTable::kSize; ++l) CHECK(herm_form(t.vector(l), t.vector(l)) == CycRat(-1));
    CHECK_THROWS_AS(t.at(0), std::out_of_range);
    CHECK_THROWS_AS(t.at(16), std::out_of_range);
  }

  TEST_CASE("every table reflection is an integral unitary of order 3 with det eta") {
    for (int l = 1; l <= MirrorTable::kSize; ++l) {
      for (const CycRat& eta : {CycRat::zeta(), CycRat::zeta_pow(2)}) {
        CAPTURE(l);
        HermVector b = mirror_table().vector(l);
        HermMatrix r = reflection(b, eta);
        CHECK(is_unitary(r));
        CHECK(r.is_integral());
        CHECK(r.pow(3) == HermMatrix::identity());
        CHECK(!(r == HermMatrix::identity()));
        CHECK(r.determinant() == eta);
        HermVector rb = r.apply(b);
        for (std::size_t i = 0; i < 4; ++i) CHECK(rb[i] == eta * b[i]);
      }
    }
  }

  TEST_CASE("zeta^2 gives the inverse triflection") {
    for (int l = 1; l <= MirrorTable::kSize; ++l) {
      HermVector b = mirror_table().vector(l);
      CHECK(reflection(b, CycRat::zeta()) * reflection(b, CycRat::zeta_pow(2)) == HermMatrix::identity());
    }
  }
}
