#include "picardcy/variety.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace picardcy {

namespace {

constexpr std::size_t kVars = 6;

CycPoly var(std::size_t i) { return CycPoly::variable(kVars, i); }

std::vector<CycPoly> gradient_of(const CycPoly& q) {
  std::vector<CycPoly> out;
  for (std::size_t i = 0; i < kVars; ++i) out.push_back(q.derivative(i));
  return out;
}

// Row-major second partials d_i d_j q.
std::vector<CycPoly> hessian_of(const CycPoly& q) {
  std::vector<CycPoly> out;
  for (std::size_t i = 0; i < kVars; ++i) {
    CycPoly di = q.derivative(i);
    for (std::size_t j = 0; j < kVars; ++j) out.push_back(di.derivative(j));
  }
  return out;
}

bool all_zero(const Coords6& v) {
  return std::all_of(v.begin(), v.end(), [](const CycRat& x) { return x.is_zero(); });
}

// Exact rank of a square matrix over Q(zeta).
int rank_of(std::vector<std::vector<CycRat>> rows) {
  int r = 0;
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows.front().size() : 0;
  for (std::size_t c = 0; c < m && static_cast<std::size_t>(r) < n; ++c) {
    auto pr = static_cast<std::size_t>(r);
    std::size_t piv = pr;
    while (piv < n && rows[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[pr]);
    CycRat inv = rows[pr][c].inverse();
    for (std::size_t i = pr + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      CycRat f = rows[i][c] * inv;
      for (std::size_t j = c; j < m; ++j) rows[i][j] -= f * rows[pr][j];
    }
    ++r;
  }
  return r;
}

std::string mu3_token(const CycRat& x) {
  if (x.is_zero()) return "0";
  if (x == CycRat(1)) return "1";
  if (x == CycRat::zeta()) return "z";
  if (x == CycRat::zeta_pow(2)) return "z2";
  return to_string(x);
}

}  // namespace

ProjPoint::ProjPoint(Coords6 coords) : c_(std::move(coords)) {
  auto it = std::find_if(c_.begin(), c_.end(), [](const CycRat& x) { return !x.is_zero(); });
  if (it == c_.end()) throw std::domain_error("ProjPoint: all coordinates vanish");
  CycRat inv = it->inverse();
  for (auto& x : c_) x *= inv;
}

std::size_t ProjPoint::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const CycRat& x) { return !x.is_zero(); }));
}

std::string ProjPoint::to_line() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ' ';
    s += mu3_token(c_[i]);
  }
  return s;
}

const CycPoly& CubicPair::f() {
  static const CycPoly p = var(0) * var(1) * var(2) - var(3) * var(4) * var(5);
  return p;
}

const CycPoly& CubicPair::g() {
  static const CycPoly p =
      var(0).pow(3) + var(1).pow(3) + var(2).pow(3) - var(3).pow(3) - var(4).pow(3) - var(5).pow(3);
  return p;
}

EvalResult eval_and_gradient(const ProjPoint& p) {
  const auto& x = p.coords();
  EvalResult r{CubicPair::f().evaluate(x), CubicPair::g().evaluate(x), {}, {}};
  static const std::vector<CycPoly> gf = gradient_of(CubicPair::f());
  static const std::vector<CycPoly> gg = gradient_of(CubicPair::g());
  for (std::size_t i = 0; i < kVars; ++i) {
    r.grad_f[i] = gf[i].evaluate(x);
    r.grad_g[i] = gg[i].evaluate(x);
  }
  return r;
}

bool jacobian_rank_at_most_one(const EvalResult& e) {
  for (std::size_t i = 0; i < kVars; ++i)
    for (std::size_t j = i + 1; j < kVars; ++j)
      if (!(e.grad_f[i] * e.grad_g[j] - e.grad_f[j] * e.grad_g[i]).is_zero()) return false;
  return true;
}

bool substitution_identity_check() {
  // Target ring variables, in order: B6, B7, B8, B9, B12, B13.
  using IP = Polynomial<BigInt>;
  constexpr std::size_t n = 6;
  auto b = [](std::size_t i) { return IP::variable(n, i); };
  const IP b6 = b(0), b7 = b(1), b8 = b(2), b9 = b(3), b12 = b(4), b13 = b(5);

  std::vector<IP> images = {-b6, b8, b13, b7, b9, -b12};
  auto x = [](std::size_t i) { return IP::variable(n, i); };
  const IP f = x(0) * x(1) * x(2) - x(3) * x(4) * x(5);
  const IP g = x(0).pow(3) + x(1).pow(3) + x(2).pow(3) - x(3).pow(3) - x(4).pow(3) - x(5).pow(3);

  const IP rel1 = b6 * b8 * b13 - b7 * b9 * b12;
  const IP rel2 = b6.pow(3) + b7.pow(3) - b8.pow(3) + b9.pow(3) - b12.pow(3) - b13.pow(3);

  auto up_to_sign = [](const IP& p, const IP& q) { return p == q || p == -q; };
  return up_to_sign(f.substitute(images), rel1) && up_to_sign(g.substitute(images), rel2);
}

std::vector<ProjPoint> singular_points() {
  const std::array<CycRat, 4> values = {CycRat(0), CycRat(1), CycRat::zeta(), CycRat::zeta_pow(2)};
  std::vector<ProjPoint> out;
  // Canonical points only: the first nonzero coordinate is 1.
  std::array<int, 6> digit{};
  for (int code = 0; code < 4096; ++code) {
    int c = code;
    for (auto& d : digit) {
      d = c % 4;
      c /= 4;
    }
    auto first = std::find_if(digit.begin(), digit.end(), [](int d) { return d != 0; });
    if (first == digit.end() || *first != 1) continue;
    Coords6 coords;
    for (std::size_t i = 0; i < kVars; ++i) coords[i] = values[static_cast<std::size_t>(digit[i])];
    ProjPoint p(coords);
    EvalResult e = eval_and_gradient(p);
    if (e.f.is_zero() && e.g.is_zero() && jacobian_rank_at_most_one(e)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  if (out.size() != kExpectedNodes)
    throw std::logic_error("singular_points: found " + std::to_string(out.size()) + " points, expected 108");
  return out;
}

NodeCertificate node_certificate(const ProjPoint& p) {
  EvalResult e = eval_and_gradient(p);
  if (!e.f.is_zero() || !e.g.is_zero() || !jacobian_rank_at_most_one(e))
    throw std::domain_error("node_certificate: point is not singular on X: " + p.to_line());

  const bool f_zero = all_zero(e.grad_f);
  const bool g_zero = all_zero(e.grad_g);
  if (f_zero && g_zero)
    throw std::domain_error("node_certificate: both gradients vanish, degenerate combination not unique at " + p.to_line());

  // alpha grad F + beta grad G = 0; `normal` is the nonzero gradient of the smooth member.
  CycRat alpha, beta;
  Coords6 normal;
  if (f_zero) {
    alpha = CycRat(1);
    beta = CycRat(0);
    normal = e.grad_g;
  } else if (g_zero) {
    alpha = CycRat(0);
    beta = CycRat(1);
    normal = e.grad_f;
  } else {
    std::size_t k = 0;
    while (e.grad_g[k].is_zero()) ++k;
    alpha = CycRat(1);
    beta = -(e.grad_f[k] / e.grad_g[k]);
    normal = e.grad_g;
  }

  const CycPoly q = alpha * CubicPair::f() + beta * CubicPair::g();
  const auto hess_polys = hessian_of(q);
  std::array<CycRat, 36> hess;
  for (std::size_t i = 0; i < 36; ++i) hess[i] = hess_polys[i].evaluate(p.coords());

  // Euler: H p = 2 grad Q(p) = 0, so p spans part of the radical.
  for (std::size_t i = 0; i < kVars; ++i) {
    CycRat acc;
    for (std::size_t j = 0; j < kVars; ++j) acc += hess[kVars * i + j] * p[j];
    if (!acc.is_zero()) throw std::logic_error("node_certificate: Euler direction is not in the Hessian radical");
  }

  // Basis of {v : normal . v = 0}.
  std::size_t piv = 0;
  while (normal[piv].is_zero()) ++piv;
  std::vector<Coords6> basis;
  for (std::size_t j = 0; j < kVars; ++j) {
    if (j == piv) continue;
    Coords6 v{};
    v[j] = CycRat(1);
    v[piv] = -(normal[j] / normal[piv]);
    basis.push_back(v);
  }

  // Restricted form; its rank equals the rank on the quotient by the Euler direction.
  std::vector<std::vector<CycRat>> gram(basis.size(), std::vector<CycRat>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      CycRat acc;
      for (std::size_t i = 0; i < kVars; ++i) {
        if (basis[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < kVars; ++j)
          if (!basis[b][j].is_zero()) acc += basis[a][i] * hess[kVars * i + j] * basis[b][j];
      }
      gram[a][b] = acc;
    }
  return {alpha, beta, rank_of(std::move(gram))};
}

bool is_node(const ProjPoint& p) { return node_certificate(p).cone_rank == 4; }

std::pair<CycRat, CycRat> h_stabilizes_ideal(const MonomialAut& g) {
  // Pull back: (F o g)(x) = F(M x), with (M x)_k a monomial linear form.
  const auto m = g.matrix();
  std::vector<CycPoly> images;
  for (std::size_t k = 0; k < kVars; ++k) {
    CycPoly row(kVars);
    for (std::size_t i = 0; i < kVars; ++i)
      if (!m[kVars * k + i].is_zero()) row += m[kVars * k + i] * var(i);
    images.push_back(row);
  }
  auto scale_of = [&images](const CycPoly& p, const char* name) {
    CycPoly pulled = p.substitute(images);
    const auto& [e, c] = *p.terms().begin();
    CycRat lambda = pulled.coefficient(e) / c;
    if (!(pulled == lambda * p) || !(lambda.pow(6) == CycRat(1)))
      throw std::domain_error(std::string("h_stabilizes_ideal: ") + name + " is not mapped to a sixth-root multiple of itself");
    return lambda;
  };
  return {scale_of(CubicPair::f(), "F"), scale_of(CubicPair::g(), "G")};
}

ProjPoint apply(const MonomialAut& g, const ProjPoint& p) { return ProjPoint(g.apply(p.coords())); }

std::size_t smoothness_screen(std::size_t samples, std::uint64_t seed, double tol) {
  using C = std::complex<double>;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] { return C(normal(rng), normal(rng)); };
  std::size_t failures = 0;
  std::size_t accepted = 0;
  while (accepted < samples) {
    // Slice: pick x0..x3 freely, then solve x4 x5 = q, x4^3 + x5^3 = s for (x4, x5).
    std::array<C, 6> x{draw(), draw(), draw(), draw(), C{}, C{}};
    if (std::abs(x[3]) < 1e-3) continue;
    C q = x[0] * x[1] * x[2] / x[3];
    C s = x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2] - x[3] * x[3] * x[3];
    C u = (s + std::sqrt(s * s - 4.0 * q * q * q)) / 2.0;
    if (std::abs(u) < 1e-6) continue;
    x[4] = std::pow(u, 1.0 / 3.0);
    x[5] = q / x[4];
    double scale = 0;
    for (const auto& v : x) scale = std::max(scale, std::abs(v));
    for (auto& v : x) v /= scale;

    std::array<C, 6> gf{x[1] * x[2], x[0] * x[2], x[0] * x[1], -x[4] * x[5], -x[3] * x[5], -x[3] * x[4]};
    std::array<C, 6> gg{};
    for (std::size_t i = 0; i < 6; ++i) gg[i] = (i < 3 ? 3.0 : -3.0) * x[i] * x[i];
    double resid = std::abs(x[0] * x[1] * x[2] - x[3] * x[4] * x[5]) +
                   std::abs(x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2] - x[3] * x[3] * x[3] -
                            x[4] * x[4] * x[4] - x[5] * x[5] * x[5]);
    if (resid > 1e-9) continue;
    ++accepted;

    // Singular values of the 2x6 Jacobian from the 2x2 Gram matrix J J^H.
    double a = 0, d = 0;
    C b{};
    for (std::size_t i = 0; i < 6; ++i) {
      a += std::norm(gf[i]);
      d += std::norm(gg[i]);
      b += gf[i] * std::conj(gg[i]);
    }
    double tr = a + d;
    double det = a * d - std::norm(b);
    double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    double lmax = tr / 2 + disc;
    double lmin = det / lmax;
    if (!(lmax > 0) || std::sqrt(std::max(lmin, 0.0) / lmax) <= tol) ++failures;
  }
  return failures;
}

}  // namespace picardcy
