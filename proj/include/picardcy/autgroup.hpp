// The automorphism group H of order 5832 acting on X and its character on the
// residue of the meromorphic 5-form
//
//   omega = sum_i (-1)^i z_i dz_0 ^ .. ^ dz_i^ ^ .. ^ dz_5 / (F G).

#pragma once

#include <cstddef>
#include <vector>

#include "picardcy/cyclo.hpp"
#include "picardcy/monomial_aut.hpp"

namespace picardcy {

inline constexpr std::size_t kHOrder = 5832;
inline constexpr std::size_t kPermutationPartOrder = 72;
inline constexpr std::size_t kTorusPartOrder = 81;
inline constexpr std::size_t kChiKernelOrder = 972;

/// Transpositions (01), (12), (34), (45), the block swap and five torus generators.
std::vector<MonomialAut> h_generators();

/// Breadth-first closure from `generators`, identity first.
std::vector<MonomialAut> close_group(const std::vector<MonomialAut>& generators);

/// close_group(h_generators()). Throws std::logic_error unless the order is 5832.
const std::vector<MonomialAut>& h_group();

/// Sixth root of unity, stored as k with value (-zeta)^k. Throws std::domain_error if
/// the value passed in is not a sixth root of unity.
class CharacterValue {
 public:
  explicit CharacterValue(const CycRat& v);
  /// (-zeta)^k.
  static CharacterValue from_exponent(int k);
  int exponent() const { return k_; }
  CycRat value() const;
  bool is_one() const { return k_ == 0; }
  friend CharacterValue operator*(CharacterValue x, CharacterValue y) { return from_exponent(x.k_ + y.k_); }
  friend bool operator==(CharacterValue, CharacterValue) = default;

 private:
  CharacterValue() = default;
  int k_ = 0;
};

/// Product of the generator rules: sign for block-internal permutations, -1 for the block
/// swap, s0 s1 s2 for torus elements. Evaluated on the factorization g = torus * permutation.
CharacterValue chi(const MonomialAut& g);

/// det(M_g) / (lambda_F(g) lambda_G(g)): the factor by which g pulls back omega.
CharacterValue chi_via_pullback(const MonomialAut& g);

/// Elements of H with chi = 1. Throws std::logic_error unless the order is 972.
std::vector<MonomialAut> chi_kernel();

/// Distinct values of chi on H.
std::vector<CharacterValue> chi_image();

}  // namespace picardcy
