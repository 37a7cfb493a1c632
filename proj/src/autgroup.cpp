#include "picardcy/autgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "picardcy/variety.hpp"

namespace picardcy {

namespace {

// Determinant of a 6x6 monomial matrix: the sign of the support permutation times the
// product of the nonzero entries. Entries are read from the matrix, not from g.
CycRat monomial_determinant(const std::array<CycRat, 36>& m) {
  std::array<std::size_t, 6> col_of_row{};
  CycRat prod{1};
  for (std::size_t r = 0; r < 6; ++r) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < 6; ++c)
      if (!m[6 * r + c].is_zero()) {
        col_of_row[r] = c;
        prod *= m[6 * r + c];
        ++hits;
      }
    if (hits != 1) throw std::logic_error("monomial_determinant: matrix is not monomial");
  }
  int inversions = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (col_of_row[i] > col_of_row[j]) ++inversions;
  return inversions % 2 == 0 ? prod : -prod;
}

}  // namespace

std::vector<MonomialAut> h_generators() {
  return {
      MonomialAut::transposition(0, 1),
      MonomialAut::transposition(1, 2),
      MonomialAut::transposition(3, 4),
      MonomialAut::transposition(4, 5),
      MonomialAut::block_swap(),
      MonomialAut::diagonal({1, 2, 0, 0, 0, 0}),
      MonomialAut::diagonal({0, 1, 2, 0, 0, 0}),
      MonomialAut::diagonal({0, 0, 0, 1, 2, 0}),
      MonomialAut::diagonal({0, 0, 0, 0, 1, 2}),
      MonomialAut::diagonal({1, 0, 0, 1, 0, 0}),
  };
}

std::vector<MonomialAut> close_group(const std::vector<MonomialAut>& generators) {
  std::vector<MonomialAut> elems{MonomialAut()};
  std::unordered_set<std::uint32_t> seen{elems.front().key()};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : generators) {
      MonomialAut next = compose(elems[head], g);
      if (seen.insert(next.key()).second) elems.push_back(next);
    }
  return elems;
}

const std::vector<MonomialAut>& h_group() {
  static const std::vector<MonomialAut> h = [] {
    auto elems = close_group(h_generators());
    if (elems.size() != kHOrder)
      throw std::logic_error("h_group: closure has order " + std::to_string(elems.size()) + ", expected 5832");
    return elems;
  }();
  return h;
}

CharacterValue::CharacterValue(const CycRat& v) {
  const auto u = units();
  for (int k = 0; k < 6; ++k)
    if (v == CycRat(u[static_cast<std::size_t>(k)])) {
      k_ = k;
      return;
    }
  throw std::domain_error("CharacterValue: not a sixth root of unity: " + to_string(v));
}

CharacterValue CharacterValue::from_exponent(int k) {
  CharacterValue c;
  c.k_ = ((k % 6) + 6) % 6;
  return c;
}

CycRat CharacterValue::value() const { return units()[static_cast<std::size_t>(k_)]; }

CharacterValue chi(const MonomialAut& g) {
  // g = t * p with p the pure permutation and t = diag(s).
  // zeta = (-zeta)^4 and -1 = (-zeta)^3.
  int torus = (g.scalars()[0] * g.scalars()[1] * g.scalars()[2]).exponent();
  // p = (block swap)^e * q with q block-internal, chi(q) = sign(q).
  Permutation6 q = g.sigma();
  int minus = 0;
  if (g.swaps_blocks()) {
    for (auto& v : q) v = (v + 3) % 6;
    minus = 1;
  }
  if (MonomialAut::permutation(q).sign() < 0) ++minus;
  return CharacterValue::from_exponent(4 * torus + 3 * minus);
}

CharacterValue chi_via_pullback(const MonomialAut& g) {
  auto [lf, lg] = h_stabilizes_ideal(g);
  return CharacterValue(monomial_determinant(g.matrix()) / (lf * lg));
}

std::vector<MonomialAut> chi_kernel() {
  std::vector<MonomialAut> out;
  for (const auto& g : h_group())
    if (chi(g).is_one()) out.push_back(g);
  if (out.size() != kChiKernelOrder)
    throw std::logic_error("chi_kernel: order " + std::to_string(out.size()) + ", expected 972");
  return out;
}

std::vector<CharacterValue> chi_image() {
  std::vector<CharacterValue> out;
  for (const auto& g : h_group()) {
    CharacterValue v = chi(g);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace picardcy
