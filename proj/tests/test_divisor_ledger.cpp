#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "picardcy/divisor_ledger.hpp"

using namespace picardcy;

TEST_SUITE("divisor_ledger") {
  TEST_CASE("divisor basics") {
    Divisor d = Divisor::from_labels({1, 1, 15});
    CHECK(d[1] == 2);
    CHECK(d[15] == 1);
    CHECK(d[7] == 0);
    CHECK(d.support() == std::vector<int>{1, 15});
    CHECK(d.is_effective());
    Divisor neg = -1 * d;
    CHECK_FALSE(neg.is_effective());
    CHECK((d + neg) == Divisor());
    CHECK_THROWS_AS(d[0], std::out_of_range);
    CHECK_THROWS_AS(d[16], std::out_of_range);
    CHECK_THROWS_AS(Divisor::from_labels({3, 0}), std::out_of_range);
  }

  TEST_CASE("b divisors are three distinct mirrors") {
    CHECK(b_divisor(1) == Divisor::from_labels({1, 2, 15}));
    for (int i = 1; i <= kBFormCount; ++i) {
      Divisor d = b_divisor(i);
      CHECK(d.support().size() == 3);
      CHECK(d.is_effective());
    }
    CHECK_THROWS_AS(b_divisor(0), std::out_of_range);
    CHECK_THROWS_AS(b_divisor(16), std::out_of_range);
  }

  TEST_CASE("each mirror lies on exactly three B forms") {
    Divisor total;
    for (int i = 1; i <= kBFormCount; ++i) total += b_divisor(i);
    for (int l = 1; l <= kMirrorCount; ++l) CHECK(total[l] == 3);
  }

  TEST_CASE("divisor_of is additive") {
    LaurentWord a = c_word(2), b = c_word(7);
    CHECK(divisor_of(a + b) == divisor_of(a) + divisor_of(b));
    CHECK(divisor_of(3 * a) == 3 * divisor_of(a));
    CHECK(divisor_of(LaurentWord()) == Divisor());
  }

  TEST_CASE("c words") {
    LaurentWord w = c_word(1);
    CHECK(w[2] == 1);
    CHECK(w[4] == 1);
    CHECK(w[15] == 1);
    CHECK(w[8] == -1);
    CHECK(w.weight() == 2);
    for (int i = 1; i <= kCFormCount; ++i) CHECK(c_word(i).weight() == 2);
    CHECK_THROWS_AS(c_word(0), std::out_of_range);
    CHECK_THROWS_AS(c_word(11), std::out_of_range);
  }

  TEST_CASE("c divisor examples") {
    CHECK(divisor_of(c_word(2)).support() == std::vector<int>{4, 5, 8, 9, 11, 14});
    CHECK(divisor_of(c_word(4)).support() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(divisor_of(c_word(1)).support() == std::vector<int>{1, 2, 7, 8, 9, 10});
  }

  TEST_CASE("effectivity report") {
    auto rep = effectivity_report();
    REQUIRE(rep.size() == kCFormCount);
    for (std::size_t i = 0; i < rep.size(); ++i) {
      CAPTURE(i);
      CHECK(rep[i].c_label == static_cast<int>(i) + 1);
      CHECK(rep[i].effective);
      CHECK(rep[i].support_size == 6);
      CHECK(rep[i].divisor == divisor_of(c_word(rep[i].c_label)));
      for (int l : rep[i].divisor.support()) CHECK(rep[i].divisor[l] == 1);
    }
  }

  TEST_CASE("trivial multiplier forms avoid the C1 support") {
    CHECK(trivial_multiplier_support_check());
    Divisor c1 = divisor_of(c_word(1));
    for (int i : kTrivialMultiplierForms)
      for (int l : b_divisor(i).support()) CHECK(c1[l] == 0);
  }

  TEST_CASE("weight of C1 squared") {
    CHECK(cy_weight_check());
    CHECK((2 * c_word(1)).weight() == 4);
  }
}
