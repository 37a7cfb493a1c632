// Dimension bookkeeping: the printed dimension tables for modular forms on G3[3],
// the Hilbert function of the complete intersection of two cubics in P^5, its Hilbert
// polynomial and the leading-coefficient ratio.

#pragma once

#include <array>

#include "picardcy/cyclo.hpp"

namespace picardcy {

/// c0 + c1 k + c2 k^2 + c3 k^3 with rational coefficients.
struct Cubic {
  std::array<Rational, 4> coeffs;

  Rational operator()(const Rational& k) const;
  const Rational& leading() const { return coeffs[3]; }
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

/// -1377 + (8019/2) k - 2187 k^2 + (729/2) k^3, valid for k > 4.
const Cubic& dim_g33_cubic();

/// dim [G3[3], k]. Table for k <= 4, cubic beyond. Throws std::domain_error for k < 0
/// or if the cubic fails to be a nonnegative integer.
BigInt dim_g33(long k);

/// dim [G3[3],k] - dim [G3[3],k]_0. Throws std::domain_error for k < 1.
BigInt eisenstein_part(long k);

/// Coefficient of t^k in (1 - t^3)^2 / (1 - t)^6. Zero for k < 0.
BigInt ci_dim(long k);

/// Independent oracle for ci_dim: monomials of degree k in six variables minus the exact
/// rational rank of span{m F, m G : deg m = k - 3}. Throws std::domain_error outside 0..12.
BigInt ci_dim_oracle(long k);

/// The cubic agreeing with ci_dim(k) for k >= 1. Fitted through k = 9..12 and checked
/// on k = 1..12; throws std::logic_error if the check fails.
Cubic hilbert_polynomial_ci();

/// leading(dim_g33_cubic) / leading(hilbert_polynomial_ci). Throws std::logic_error if the
/// ratio is not an integer.
BigInt covering_degree_from_leading();

}  // namespace picardcy
