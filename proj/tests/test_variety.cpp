#include <doctest.h>

#include <algorithm>
#include <map>

#include "picardcy/autgroup.hpp"
#include "picardcy/variety.hpp"

using namespace picardcy;

namespace {

ProjPoint point(std::array<CycRat, 6> c) { return ProjPoint(c); }

const CycRat z = CycRat::zeta();

}  // namespace

TEST_SUITE("variety") {
  TEST_CASE("projective points are normalized") {
    ProjPoint p = point({0, 2, CycRat(0, 2), 0, 0, 0});
    CHECK(p[0] == CycRat(0));
    CHECK(p[1] == CycRat(1));
    CHECK(p[2] == z);
    CHECK(p == point({0, z, z * z, 0, 0, 0}));
    CHECK(p.nonzero_count() == 2);
    CHECK(p.to_line() == "0 1 z 0 0 0");
    CHECK_THROWS_AS(point({0, 0, 0, 0, 0, 0}), std::domain_error);
  }

  TEST_CASE("evaluation at a singular point") {
    auto e = eval_and_gradient(point({1, 0, 0, 1, 0, 0}));
    CHECK(e.f.is_zero());
    CHECK(e.g.is_zero());
    for (const auto& c : e.grad_f) CHECK(c.is_zero());
    CHECK(e.grad_g == Coords6{3, 0, 0, -3, 0, 0});
    CHECK(jacobian_rank_at_most_one(e));
  }

  TEST_CASE("evaluation at a smooth point") {
    ProjPoint p = point({1, -1, 0, 1, -1, 0});
    auto e = eval_and_gradient(p);
    CHECK(e.f.is_zero());
    CHECK(e.g.is_zero());
    CHECK(e.grad_f == Coords6{0, 0, -1, 0, 0, 1});
    CHECK(e.grad_g == Coords6{3, 3, 0, -3, -3, 0});
    CHECK_FALSE(jacobian_rank_at_most_one(e));
    CHECK_THROWS_AS(node_certificate(p), std::domain_error);
  }

  TEST_CASE("point off the variety is rejected") {
    CHECK_THROWS_AS(node_certificate(point({1, 0, 0, 0, 0, 0})), std::domain_error);
  }

  TEST_CASE("the defining polynomials") {
    CHECK(CubicPair::f().terms().size() == 2);
    CHECK(CubicPair::g().terms().size() == 6);
    CHECK(CubicPair::f().coefficient({1, 1, 1, 0, 0, 0}) == CycRat(1));
    CHECK(CubicPair::g().coefficient({0, 0, 0, 0, 0, 3}) == CycRat(-1));
  }

  TEST_CASE("substitution identity") { CHECK(substitution_identity_check()); }

  TEST_CASE("singular points") {
    const auto& pts = singular_points();
    REQUIRE(pts.size() == kExpectedNodes);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    std::map<std::size_t, int> by_support;
    for (const auto& p : pts) {
      ++by_support[p.nonzero_count()];
      auto e = eval_and_gradient(p);
      CHECK(e.f.is_zero());
      CHECK(e.g.is_zero());
      CHECK(jacobian_rank_at_most_one(e));
    }
    CHECK(by_support[2] == 27);
    CHECK(by_support[6] == 81);
    CHECK(by_support.size() == 2);
  }

  TEST_CASE("node certificates") {
    auto c = node_certificate(point({1, 1, 1, 1, 1, 1}));
    CHECK(c.alpha == CycRat(1));
    CHECK(c.beta == CycRat(Rational(-1, 3)));
    CHECK(c.cone_rank == 4);
    for (const auto& p : singular_points()) {
      CAPTURE(p.to_line());
      CHECK(is_node(p));
    }
  }

  TEST_CASE("H stabilizes the pair") {
    auto sw = h_stabilizes_ideal(MonomialAut::block_swap());
    CHECK(sw.first == CycRat(-1));
    CHECK(sw.second == CycRat(-1));
    auto d = h_stabilizes_ideal(MonomialAut::diagonal({1, 0, 0, 1, 0, 0}));
    CHECK(d.first == z);
    CHECK(d.second == CycRat(1));
    auto t = h_stabilizes_ideal(MonomialAut::transposition(0, 1));
    CHECK(t.first == CycRat(1));
    CHECK(t.second == CycRat(1));
  }

  TEST_CASE("H permutes the singular points") {
    const auto& pts = singular_points();
    for (const auto& g : h_generators()) {
      std::vector<ProjPoint> img;
      for (const auto& p : pts) img.push_back(apply(g, p));
      std::sort(img.begin(), img.end());
      CHECK(img == pts);
    }
  }

  TEST_CASE("H acts transitively on each support type") {
    const auto& pts = singular_points();
    for (const ProjPoint& base : {point({1, 0, 0, 1, 0, 0}), point({1, 1, 1, 1, 1, 1})}) {
      std::vector<ProjPoint> orbit;
      for (const auto& g : h_group()) orbit.push_back(apply(g, base));
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      CHECK(orbit.size() == (base.nonzero_count() == 2 ? 27u : 81u));
      for (const auto& q : orbit) CHECK(std::binary_search(pts.begin(), pts.end(), q));
    }
  }

  TEST_CASE("smoothness screen") {
    CHECK(smoothness_screen(2000, 7, 1e-8) == 0);
    CHECK(smoothness_screen(2000, 8, 1e-8) == 0);
  }
}
