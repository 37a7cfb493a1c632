// The residue ring E/3E, reduction of lattice matrices mod 3 and a breadth-first
// closure engine for finite matrix groups over it.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "picardcy/hermitian.hpp"

namespace picardcy {

/// Class of a + b*zeta modulo 3E, with a, b in {0,1,2}.
class Mod3Residue {
 public:
  constexpr Mod3Residue() = default;
  constexpr Mod3Residue(int a, int b) : a_(static_cast<std::uint8_t>(((a % 3) + 3) % 3)),
                                        b_(static_cast<std::uint8_t>(((b % 3) + 3) % 3)) {}

  constexpr int a() const { return a_; }
  constexpr int b() const { return b_; }
  /// Index 3a + b in 0..8.
  constexpr int index() const { return 3 * a_ + b_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Units are exactly the classes not divisible by the prime 1 - zeta, i.e. a + b != 0 mod 3.
  constexpr bool is_unit() const { return (a_ + b_) % 3 != 0; }

  friend constexpr Mod3Residue operator+(Mod3Residue x, Mod3Residue y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr Mod3Residue operator-(Mod3Residue x, Mod3Residue y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend constexpr Mod3Residue operator-(Mod3Residue x) { return {-x.a_, -x.b_}; }
  friend constexpr Mod3Residue operator*(Mod3Residue x, Mod3Residue y) {
    int bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }
  friend constexpr bool operator==(Mod3Residue, Mod3Residue) = default;

 private:
  std::uint8_t a_ = 0;
  std::uint8_t b_ = 0;
};

constexpr Mod3Residue conj(Mod3Residue x) { return {x.a() - x.b(), -x.b()}; }
Mod3Residue reduce_mod3(const EisensteinInt& x);

class ResidueMatrix {
 public:
  ResidueMatrix() = default;
  explicit ResidueMatrix(std::array<Mod3Residue, 16> e) : m_(e) {}

  static ResidueMatrix identity() { return scalar({1, 0}); }
  static ResidueMatrix scalar(Mod3Residue u);

  Mod3Residue operator()(int r, int c) const { return m_[static_cast<std::size_t>(4 * r + c)]; }
  Mod3Residue& operator()(int r, int c) { return m_[static_cast<std::size_t>(4 * r + c)]; }

  Mod3Residue determinant() const;
  bool is_invertible() const { return determinant().is_unit(); }
  /// Set-key: the row-major tuple of (a,b) digit pairs, packed base 9.
  std::uint64_t key() const;
  /// Nonzero only on the diagonal with all diagonal entries equal.
  bool is_scalar() const;
  /// Preserves the reduced hermitian form: conj(M)^T J M = J over E/3E.
  bool preserves_form() const;
  /// Sixteen space-separated digit pairs "ab", row-major.
  std::string to_line() const;

  friend ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y);
  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

 private:
  std::array<Mod3Residue, 16> m_{};
};

/// Entrywise reduction. Throws std::domain_error if an entry is not in E.
ResidueMatrix reduce_mod3(const HermMatrix& m);

/// A finite group given by generators, with its elements in breadth-first order.
class FiniteMatrixGroup {
 public:
  const std::vector<ResidueMatrix>& generators() const { return generators_; }
  const std::vector<ResidueMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const ResidueMatrix& m) const { return index_.contains(m.key()); }

 private:
  friend FiniteMatrixGroup closure(const std::vector<ResidueMatrix>& generators);

  std::vector<ResidueMatrix> generators_;
  std::vector<ResidueMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Breadth-first closure under right multiplication by generators, starting at the
/// identity. The element order depends only on the generator list.
/// Throws std::domain_error on a non-invertible generator.
FiniteMatrixGroup closure(const std::vector<ResidueMatrix>& generators);

/// Elements of the form u * identity, in group order.
std::vector<ResidueMatrix> scalar_subgroup(const FiniteMatrixGroup& g);

/// order / |scalar subgroup|: scalars act trivially on the ball.
std::size_t covering_degree(const FiniteMatrixGroup& g);

/// Labels of the six mirrors whose triflections, together with G3[3], generate G'.
inline constexpr std::array<int, 6> kGPrimeMirrors = {1, 2, 7, 8, 9, 10};

/// Mod-3 images of the six generating reflections with the given eta.
std::vector<ResidueMatrix> gprime_generators(const CycRat& eta = CycRat::zeta());

/// closure(gprime_generators(eta)).
FiniteMatrixGroup gprime_image(const CycRat& eta = CycRat::zeta());

/// One matrix per line in to_line() form, preceded by a header comment.
std::string format_group(const FiniteMatrixGroup& g);

}  // namespace picardcy
