// Exact arithmetic in the Eisenstein integers Z[zeta] and the field Q(zeta),
// zeta a primitive cube root of unity (zeta^2 = -1 - zeta).

#pragma once

#include <array>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace picardcy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// a + b*zeta with integer a, b.
class EisensteinInt {
 public:
  EisensteinInt() = default;
  EisensteinInt(long long a) : a_(a) {}
  EisensteinInt(BigInt a, BigInt b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  static EisensteinInt zeta() { return {0, 1}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend EisensteinInt operator-(const EisensteinInt& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

 private:
  BigInt a_{0};
  BigInt b_{0};
};

EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt conj(const EisensteinInt& x);
/// x * conj(x) = a^2 - ab + b^2.
BigInt eis_norm(const EisensteinInt& x);

/// The six units as (-zeta)^k for k = 0..5: 1, -zeta, zeta^2, -1, zeta, -zeta^2.
std::array<EisensteinInt, 6> units();

/// p + q*zeta with rational p, q. Components are kept in lowest terms by cpp_rational,
/// so equality is structural.
class CycRat {
 public:
  CycRat() = default;
  CycRat(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}
  CycRat(int p) : p_(p) {}
  CycRat(const EisensteinInt& x) : p_(x.a()), q_(x.b()) {}

  static CycRat zeta() { return {0, 1}; }
  /// zeta^k for any integer k.
  static CycRat zeta_pow(long k);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  /// True iff both components are integers.
  bool is_integral() const;
  /// Throws std::domain_error unless is_integral().
  EisensteinInt to_eisenstein() const;

  /// Throws std::domain_error on zero.
  CycRat inverse() const;
  CycRat pow(long e) const;

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  CycRat& operator/=(const CycRat& o) { return *this *= o.inverse(); }

  friend CycRat operator+(CycRat x, const CycRat& y) { return x += y; }
  friend CycRat operator-(CycRat x, const CycRat& y) { return x -= y; }
  friend CycRat operator*(CycRat x, const CycRat& y) { return x *= y; }
  friend CycRat operator/(CycRat x, const CycRat& y) { return x /= y; }
  friend CycRat operator-(const CycRat& x) { return {-x.p_, -x.q_}; }
  friend bool operator==(const CycRat& x, const CycRat& y) { return x.p_ == y.p_ && x.q_ == y.q_; }
  /// Lexicographic on (p, q); only meaningful as a canonical sort order.
  friend bool operator<(const CycRat& x, const CycRat& y);

 private:
  Rational p_{0};
  Rational q_{0};
};

CycRat conj(const CycRat& x);
/// x * conj(x), a nonnegative rational.
Rational norm(const CycRat& x);

std::string to_string(const EisensteinInt& x);
std::string to_string(const CycRat& x);
std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);
std::ostream& operator<<(std::ostream& os, const CycRat& x);

/// Token "a+b*z" (or "a-b*z"), the on-disk form of an Eisenstein integer.
std::string to_token(const EisensteinInt& x);
/// Inverse of to_token. Throws std::invalid_argument on malformed input.
EisensteinInt parse_token(const std::string& s);

}  // namespace picardcy
