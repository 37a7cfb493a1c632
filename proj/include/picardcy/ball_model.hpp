// Floating-point model of the complex ball in P(V) and the canonical automorphy factor.
//
// Chart: e = (0,1,0,0) and W = {a2 = 0}. A point (w1, w3, w4) stands for the positive
// line through e + z, z = (w1, 0, w3, w4), i.e. 2 Re(w1) - |w3|^2 - |w4|^2 > 0.
// For g in U(V), g(e + z) = j(g,z) (e + g<z>).

#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "picardcy/hermitian.hpp"

namespace picardcy {

using Complex = std::complex<double>;
using CVector = std::array<Complex, 4>;
using CMatrix = std::array<Complex, 16>;

/// zeta as (-1 + i sqrt 3)/2.
Complex embed(const CycRat& x);
CMatrix embed(const HermMatrix& m);

CMatrix cmat_identity();
CMatrix cmat_mul(const CMatrix& a, const CMatrix& b);
CVector cmat_apply(const CMatrix& m, const CVector& v);
Complex cmat_det(const CMatrix& m);

/// Same form as herm_form, in double precision.
Complex herm_form(const CVector& a, const CVector& b);

struct BallPoint {
  Complex w1, w3, w4;

  CVector lift() const { return {w1, Complex(1.0), w3, w4}; }
  /// 2 Re(w1) - |w3|^2 - |w4|^2, the norm of the lift.
  double positivity() const;
};

struct ActResult {
  Complex j;
  BallPoint gz;
};

/// Throws std::domain_error if |j| < 1e-12 or if the image is not a positive line.
ActResult act(const CMatrix& g, const BallPoint& z);

/// Determinant of the complex derivative of z -> g<z>, by central differences with step
/// `step` along the real direction of each chart coordinate.
Complex jacobian_numeric(const CMatrix& g, const BallPoint& z, double step = 1e-5);

/// |J - det(g) j(g,z)^-4| / |J| with J = jacobian_numeric(g, z).
double jacobian_lemma_check(const CMatrix& g, const BallPoint& z);

/// Deterministic point with Re w1 in [0.5, 2], |w3|, |w4| <= 0.5 and positivity >= 0.1.
BallPoint sample_ball_point(std::uint64_t seed);

/// Product of `factors` random table triflections (random mirror, eta in {zeta, zeta^2}),
/// embedded in double precision. Deterministic in `seed`.
CMatrix random_triflection_product(std::uint64_t seed, int factors);

}  // namespace picardcy
