// The threefold X in P^5 cut out by
//
//   F = X0 X1 X2 - X3 X4 X5,   G = X0^3 + X1^3 + X2^3 - X3^3 - X4^3 - X5^3.
//
// Exact evaluation over Q(zeta), the singular locus and node certification.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "picardcy/cyclo.hpp"
#include "picardcy/monomial_aut.hpp"
#include "picardcy/polynomial.hpp"

namespace picardcy {

using Coords6 = std::array<CycRat, 6>;
using CycPoly = Polynomial<CycRat>;

/// A point of P^5 with coordinates in Q(zeta), scaled so that the first nonzero
/// coordinate is 1.
class ProjPoint {
 public:
  /// Throws std::domain_error if all coordinates vanish.
  explicit ProjPoint(Coords6 coords);

  const Coords6& coords() const { return c_; }
  const CycRat& operator[](std::size_t i) const { return c_[i]; }
  std::size_t nonzero_count() const;

  /// Space-separated tokens "0", "1", "z", "z2" when every coordinate is in {0} u mu_3,
  /// otherwise the generic p+q*z form for the offending coordinates.
  std::string to_line() const;

  friend bool operator==(const ProjPoint& x, const ProjPoint& y) { return x.c_ == y.c_; }
  friend bool operator<(const ProjPoint& x, const ProjPoint& y) { return x.c_ < y.c_; }

 private:
  Coords6 c_;
};

/// The fixed pair (F, G).
struct CubicPair {
  static const CycPoly& f();
  static const CycPoly& g();
};

struct EvalResult {
  CycRat f;
  CycRat g;
  Coords6 grad_f;
  Coords6 grad_g;
};

EvalResult eval_and_gradient(const ProjPoint& p);

/// All fifteen 2x2 minors of the Jacobian (grad F; grad G) vanish.
bool jacobian_rank_at_most_one(const EvalResult& e);

/// Substituting X -> (-B6, B8, B13, B7, B9, -B12) maps F and G to minus the two
/// relations B6B8B13 - B7B9B12 and B6^3+B7^3-B8^3+B9^3-B12^3-B13^3.
bool substitution_identity_check();

/// The singular points, found by exhaustive search over canonical points with
/// coordinates in {0} u mu_3, sorted. Throws std::logic_error unless there are 108.
std::vector<ProjPoint> singular_points();

inline constexpr std::size_t kExpectedNodes = 108;

/// Details of the tangent-cone test at a singular point.
struct NodeCertificate {
  CycRat alpha;   ///< coefficient of F in the combination with vanishing gradient
  CycRat beta;    ///< coefficient of G
  int cone_rank;  ///< rank of the Hessian on the tangent space of the smooth member
};

/// Throws std::domain_error if p is not singular on X or if both gradients vanish.
NodeCertificate node_certificate(const ProjPoint& p);
/// node_certificate(p).cone_rank == 4.
bool is_node(const ProjPoint& p);

/// (lambda_F, lambda_G) with F o g = lambda_F F and G o g = lambda_G G, both sixth roots of
/// unity. Throws std::domain_error if g does not stabilize the pair.
std::pair<CycRat, CycRat> h_stabilizes_ideal(const MonomialAut& g);

/// Image of p under the linear lift of g.
ProjPoint apply(const MonomialAut& g, const ProjPoint& p);

/// Floating-point screen: random points of X (away from the enumerated singular locus
/// with probability one) checked for Jacobian rank 2, i.e. smallest singular value of the
/// normalized 2x6 Jacobian above `tol`. Returns the number of samples that fail.
std::size_t smoothness_screen(std::size_t samples, std::uint64_t seed, double tol);

}  // namespace picardcy
