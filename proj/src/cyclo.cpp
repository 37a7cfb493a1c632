#include "picardcy/cyclo.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace picardcy {

// (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
  BigInt bd = b_ * o.b_;
  BigInt na = a_ * o.a_ - bd;
  BigInt nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y) { return x * y; }

// conj(z) = z^2 = -1 - z
EisensteinInt conj(const EisensteinInt& x) { return {x.a() - x.b(), -x.b()}; }

BigInt eis_norm(const EisensteinInt& x) { return x.a() * x.a() - x.a() * x.b() + x.b() * x.b(); }

std::array<EisensteinInt, 6> units() {
  std::array<EisensteinInt, 6> out;
  EisensteinInt g = -EisensteinInt::zeta();
  EisensteinInt acc{1};
  for (auto& u : out) {
    u = acc;
    acc *= g;
  }
  return out;
}

CycRat CycRat::zeta_pow(long k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {-1, -1};
  }
}

bool CycRat::is_integral() const {
  return denominator(p_) == 1 && denominator(q_) == 1;
}

EisensteinInt CycRat::to_eisenstein() const {
  if (!is_integral()) throw std::domain_error("CycRat has a nontrivial denominator: " + to_string(*this));
  return {numerator(p_), numerator(q_)};
}

CycRat& CycRat::operator+=(const CycRat& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

CycRat& CycRat::operator*=(const CycRat& o) {
  Rational qs = q_ * o.q_;
  Rational np = p_ * o.p_ - qs;
  Rational nq = p_ * o.q_ + q_ * o.p_ - qs;
  p_ = std::move(np);
  q_ = std::move(nq);
  return *this;
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycRat: inverse of zero");
  Rational n = norm(*this);
  CycRat c = conj(*this);
  return {c.p_ / n, c.q_ / n};
}

CycRat CycRat::pow(long e) const {
  CycRat base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycRat acc{1};
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

bool operator<(const CycRat& x, const CycRat& y) {
  if (x.p_ != y.p_) return x.p_ < y.p_;
  return x.q_ < y.q_;
}

CycRat conj(const CycRat& x) { return {x.p() - x.q(), -x.q()}; }

Rational norm(const CycRat& x) { return x.p() * x.p() - x.p() * x.q() + x.q() * x.q(); }

namespace {

template <class T>
std::string format_pair(const T& a, const T& b) {
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else if (a == 0) {
    os << b << "*z";
  } else {
    os << a << (b < 0 ? "-" : "+") << abs(b) << "*z";
  }
  return os.str();
}

}  // namespace

std::string to_string(const EisensteinInt& x) { return format_pair(x.a(), x.b()); }
std::string to_string(const CycRat& x) { return format_pair(x.p(), x.q()); }

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const CycRat& x) { return os << to_string(x); }

std::string to_token(const EisensteinInt& x) {
  std::ostringstream os;
  os << x.a() << (x.b() < 0 ? "-" : "+") << abs(x.b()) << "*z";
  return os.str();
}

EisensteinInt parse_token(const std::string& s) {
  static const std::regex re(R"(^(-?[0-9]+)([+-])([0-9]+)\*z$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed Eisenstein token: '" + s + "'");
  BigInt a(m[1].str());
  BigInt b(m[3].str());
  if (m[2].str() == "-") b = -b;
  return {a, b};
}

}  // namespace picardcy
