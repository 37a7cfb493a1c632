// Sparse multivariate polynomials over an exact coefficient ring.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace picardcy {

using Exponent = std::vector<int>;

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// lexicographically decreasing order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<Exponent, Coeff>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponent e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Coeff(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == Coeff(0))) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator-(const Polynomial& x) { return Polynomial(x.nvars_) - x; }

  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    x.check_arity(y);
    Polynomial out(x.nvars_);
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) {
        Exponent e(ex);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += ey[i];
        out.add_term(e, cx * cy);
      }
    return out;
  }
  friend Polynomial operator*(const Coeff& k, const Polynomial& x) {
    Polynomial out(x.nvars_);
    for (const auto& [e, c] : x.terms_) out.add_term(e, k * c);
    return out;
  }

  Polynomial pow(unsigned n) const {
    Polynomial acc = constant(nvars_, Coeff(1));
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  /// Substitute images[i] for variable i. All images must share one arity.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("Polynomial::substitute: wrong number of images");
    std::size_t target = images.empty() ? 0 : images.front().nvars();
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
      out += term;
    }
    return out;
  }

  template <class Point>
  Coeff evaluate(const Point& x) const {
    Coeff acc(0);
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * x[i];
      acc = acc + t;
    }
    return acc;
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(i) == 0) continue;
      Exponent d(e);
      d[i] -= 1;
      out.add_term(d, Coeff(e[i]) * c);
    }
    return out;
  }

  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

}  // namespace picardcy
