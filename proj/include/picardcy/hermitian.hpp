// The hermitian space V = C^4 of signature (1,3), restricted to Q(zeta)-coordinates:
//
//   <a,b> = conj(a1) b2 + conj(a2) b1 - conj(a3) b3 - conj(a4) b4
//
// together with unitary reflections along mirrors and the 15-entry short-mirror table.

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "picardcy/cyclo.hpp"

namespace picardcy {

using HermVector = std::array<CycRat, 4>;
using LatticeVector = std::array<EisensteinInt, 4>;

HermVector to_herm(const LatticeVector& v);

/// 4x4 matrix over Q(zeta) acting on column vectors.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(std::array<CycRat, 16> entries) : m_(std::move(entries)) {}

  static HermMatrix identity();
  static HermMatrix scalar(const CycRat& c);
  static HermMatrix diagonal(const std::array<CycRat, 4>& d);

  const CycRat& operator()(int r, int c) const { return m_[static_cast<std::size_t>(4 * r + c)]; }
  CycRat& operator()(int r, int c) { return m_[static_cast<std::size_t>(4 * r + c)]; }

  HermVector apply(const HermVector& v) const;
  HermMatrix pow(unsigned e) const;
  CycRat determinant() const;
  /// True iff every entry lies in Z[zeta].
  bool is_integral() const;

  friend HermMatrix operator*(const HermMatrix& x, const HermMatrix& y);
  friend bool operator==(const HermMatrix& x, const HermMatrix& y) { return x.m_ == y.m_; }

 private:
  std::array<CycRat, 16> m_{};
};

/// Conjugate-linear in the first argument.
CycRat herm_form(const HermVector& a, const HermVector& b);

/// a -> a - (1 - eta) <b,a>/<b,b> b. Throws std::domain_error if <b,b> = 0 or if eta
/// is not a sixth root of unity different from 1.
HermMatrix reflection(const HermVector& b, const CycRat& eta);
/// Reflection with eta = zeta.
HermMatrix triflection(const HermVector& b);

/// <M e_i, M e_j> = <e_i, e_j> for all 16 basis pairs, exactly.
bool is_unitary(const HermMatrix& m);

/// Short-mirror representatives, labels 1..15.
class MirrorTable {
 public:
  static constexpr int kSize = 15;

  explicit MirrorTable(std::array<LatticeVector, kSize> entries) : entries_(std::move(entries)) {}

  /// Throws std::out_of_range for labels outside 1..15.
  const LatticeVector& at(int label) const;
  HermVector vector(int label) const { return to_herm(at(label)); }

  friend bool operator==(const MirrorTable&, const MirrorTable&) = default;

 private:
  std::array<LatticeVector, kSize> entries_;
};

/// The compiled-in table.
const MirrorTable& mirror_table();

// Text form: comment lines start with '#'; data lines are "<label> <t1> <t2> <t3> <t4>"
// with tokens as produced by to_token().
std::string format_mirror_table(const MirrorTable& t);
/// Throws std::invalid_argument on malformed input or a label set other than 1..15.
MirrorTable parse_mirror_table(std::string_view text);

}  // namespace picardcy
