#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "picardcy/resgroup.hpp"

using namespace picardcy;

namespace {

ResidueMatrix from_lattice(int label, const CycRat& eta = CycRat::zeta()) {
  return reduce_mod3(reflection(mirror_table().vector(label), eta));
}

std::set<std::uint64_t> keys(const FiniteMatrixGroup& g) {
  std::set<std::uint64_t> out;
  for (const auto& m : g.elements()) out.insert(m.key());
  return out;
}

}  // namespace

TEST_SUITE("resgroup") {
  TEST_CASE("residue arithmetic") {
    constexpr Mod3Residue z{0, 1};
    static_assert((z * z) == Mod3Residue{2, 2});
    static_assert((z * z * z) == Mod3Residue{1, 0});
    static_assert(Mod3Residue{1, 2}.index() == 5);
    CHECK(conj(z) == Mod3Residue{2, 2});
    CHECK(reduce_mod3(EisensteinInt(4, -1)) == Mod3Residue{1, 2});
    CHECK(reduce_mod3(EisensteinInt(-3, 6)).is_zero());
  }

  TEST_CASE("units of E/3E") {
    int count = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Mod3Residue x{a, b};
        bool has_inverse = false;
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d)
            if (x * Mod3Residue{c, d} == Mod3Residue{1, 0}) has_inverse = true;
        CHECK(has_inverse == x.is_unit());
        count += x.is_unit();
      }
    CHECK(count == 6);
  }

  TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int i = 0; i < 300; ++i) {
      EisensteinInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
      CHECK(reduce_mod3(x * y) == reduce_mod3(x) * reduce_mod3(y));
      CHECK(reduce_mod3(x + y) == reduce_mod3(x) + reduce_mod3(y));
      CHECK(reduce_mod3(conj(x)) == conj(reduce_mod3(x)));
    }
  }

  TEST_CASE("matrix reduction") {
    HermMatrix m = reflection(mirror_table().vector(11), CycRat::zeta());
    HermMatrix three = HermMatrix::scalar(3) * m;
    ResidueMatrix zero;
    CHECK(reduce_mod3(three) == zero);
    CHECK(reduce_mod3(HermMatrix::identity()) == ResidueMatrix::identity());
    HermMatrix half = HermMatrix::scalar(CycRat(Rational(1, 2)));
    CHECK_THROWS_AS(reduce_mod3(half), std::domain_error);
  }

  TEST_CASE("reduction commutes with products") {
    HermMatrix a = reflection(mirror_table().vector(3), CycRat::zeta());
    HermMatrix b = reflection(mirror_table().vector(14), CycRat::zeta_pow(2));
    CHECK(reduce_mod3(a * b) == reduce_mod3(a) * reduce_mod3(b));
  }

  TEST_CASE("closure of small generating sets") {
    CHECK(closure({}).order() == 1);
    CHECK(closure({ResidueMatrix::identity()}).order() == 1);
    auto one = closure({from_lattice(1)});
    CHECK(one.order() == 3);
    CHECK(one.elements().front() == ResidueMatrix::identity());
    CHECK(closure({ResidueMatrix::scalar({2, 0})}).order() == 2);
    CHECK(closure({ResidueMatrix::scalar({0, 1})}).order() == 3);
  }

  TEST_CASE("non-invertible generator is rejected") {
    ResidueMatrix m = ResidueMatrix::identity();
    m(0, 0) = Mod3Residue{1, 2};  // 1 + 2 zeta lies in the prime over 3
    CHECK_FALSE(m.is_invertible());
    CHECK_THROWS_AS(closure({m}), std::domain_error);
  }

  TEST_CASE("G' image mod 3") {
    auto g = gprime_image();
    CHECK(g.order() == 243);
    CHECK(g.generators().size() == 6);
    CHECK(covering_degree(g) == 243);
    auto sc = scalar_subgroup(g);
    REQUIRE(sc.size() == 1);
    CHECK(sc[0] == ResidueMatrix::identity());
    CHECK_FALSE(g.contains(ResidueMatrix::scalar({2, 0})));
    CHECK_FALSE(g.contains(ResidueMatrix::scalar({0, 1})));
    for (const auto& m : g.elements()) {
      CHECK(m.preserves_form());
      CHECK(m.is_invertible());
    }
  }

  TEST_CASE("G' image is elementary abelian") {
    // each triflection is 1 mod (1 - zeta), so the images commute and have order 3 mod 3
    auto g = gprime_image();
    for (const auto& a : g.generators())
      for (const auto& b : g.generators()) CHECK(a * b == b * a);
    for (const auto& m : g.elements()) CHECK(m * m * m == ResidueMatrix::identity());
  }

  TEST_CASE("G' image does not depend on eta or generator order") {
    auto base = keys(gprime_image());
    CHECK(keys(gprime_image(CycRat::zeta_pow(2))) == base);
    auto gens = gprime_generators();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(keys(closure(gens)) == base);
    }
  }

  TEST_CASE("closure order is deterministic") {
    auto a = gprime_image();
    auto b = gprime_image();
    CHECK(a.elements() == b.elements());
  }

  TEST_CASE("format_group") {
    auto g = closure({from_lattice(1)});
    std::string text = format_group(g);
    CHECK(text.rfind("# order 3", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find(ResidueMatrix::identity().to_line()) != std::string::npos);
  }
}
