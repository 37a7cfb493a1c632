// Monomial automorphisms of P^5 of the form X_{sigma(i)} <- zeta^{s_{sigma(i)}} X_i, where sigma
// preserves or swaps the blocks {0,1,2}, {3,4,5} and the cube-root-of-unity scalars
// satisfy s0 s1 s2 = s3 s4 s5. Elements are stored modulo the global mu_3 factor.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "picardcy/cyclo.hpp"

namespace picardcy {

/// zeta^k, stored as k mod 3.
class Mu3 {
 public:
  constexpr Mu3() = default;
  constexpr explicit Mu3(int k) : k_(static_cast<std::uint8_t>(((k % 3) + 3) % 3)) {}

  constexpr int exponent() const { return k_; }
  CycRat value() const { return CycRat::zeta_pow(k_); }

  friend constexpr Mu3 operator*(Mu3 x, Mu3 y) { return Mu3(x.k_ + y.k_); }
  friend constexpr Mu3 operator/(Mu3 x, Mu3 y) { return Mu3(x.k_ - y.k_); }
  friend constexpr bool operator==(Mu3, Mu3) = default;

 private:
  std::uint8_t k_ = 0;
};

using Permutation6 = std::array<int, 6>;

class MonomialAut {
 public:
  /// Identity.
  MonomialAut();
  /// Throws std::invalid_argument if sigma is not a block-respecting permutation or the
  /// scalars violate the torus condition. The scalars are renormalized so that s0 = 1.
  MonomialAut(Permutation6 sigma, std::array<Mu3, 6> scalars);

  static MonomialAut permutation(Permutation6 sigma);
  static MonomialAut transposition(int i, int j);
  /// X0 <-> X3, X1 <-> X4, X2 <-> X5.
  static MonomialAut block_swap();
  /// Diagonal zeta^{k_i}.
  static MonomialAut diagonal(const std::array<int, 6>& exponents);

  const Permutation6& sigma() const { return sigma_; }
  const std::array<Mu3, 6>& scalars() const { return scalars_; }

  bool swaps_blocks() const { return sigma_[0] >= 3; }
  bool is_torus() const;
  /// Sign of sigma as a permutation of six letters.
  int sign() const;

  /// 6x6 matrix M with (M x)_{sigma(i)} = s_{sigma(i)} x_i, row-major.
  std::array<CycRat, 36> matrix() const;
  /// Applies the linear lift to a coordinate vector.
  std::array<CycRat, 6> apply(const std::array<CycRat, 6>& x) const;

  MonomialAut inverse() const;
  /// Dense code for hashing and ordering.
  std::uint32_t key() const;
  std::string to_string() const;

  friend bool operator==(const MonomialAut&, const MonomialAut&) = default;

 private:
  void normalize();

  Permutation6 sigma_;
  std::array<Mu3, 6> scalars_;
};

/// g after h, i.e. x -> g(h(x)).
MonomialAut compose(const MonomialAut& g, const MonomialAut& h);

}  // namespace picardcy
