#include "picardcy/ball_model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace picardcy {

Complex embed(const CycRat& x) {
  const Complex zeta(-0.5, std::sqrt(3.0) / 2.0);
  return x.p().convert_to<double>() + x.q().convert_to<double>() * zeta;
}

CMatrix embed(const HermMatrix& m) {
  CMatrix out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = embed(m(r, c));
  return out;
}

CMatrix cmat_identity() {
  CMatrix m{};
  for (std::size_t i = 0; i < 4; ++i) m[5 * i] = 1.0;
  return m;
}

CMatrix cmat_mul(const CMatrix& a, const CMatrix& b) {
  CMatrix out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t k = 0; k < 4; ++k) out[4 * r + c] += a[4 * r + k] * b[4 * k + c];
  return out;
}

CVector cmat_apply(const CMatrix& m, const CVector& v) {
  CVector out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m[4 * r + c] * v[c];
  return out;
}

Complex cmat_det(const CMatrix& m) {
  CMatrix a = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a[4 * r + col]) > std::abs(a[4 * piv + col])) piv = r;
    if (a[4 * piv + col] == Complex(0.0)) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(a[4 * piv + c], a[4 * col + c]);
      det = -det;
    }
    det *= a[4 * col + col];
    for (std::size_t r = col + 1; r < 4; ++r) {
      Complex f = a[4 * r + col] / a[4 * col + col];
      for (std::size_t c = col; c < 4; ++c) a[4 * r + c] -= f * a[4 * col + c];
    }
  }
  return det;
}

Complex herm_form(const CVector& a, const CVector& b) {
  return std::conj(a[0]) * b[1] + std::conj(a[1]) * b[0] - std::conj(a[2]) * b[2] - std::conj(a[3]) * b[3];
}

double BallPoint::positivity() const { return 2.0 * w1.real() - std::norm(w3) - std::norm(w4); }

ActResult act(const CMatrix& g, const BallPoint& z) {
  CVector v = cmat_apply(g, z.lift());
  Complex j = v[1];
  if (std::abs(j) < 1e-12) throw std::domain_error("act: image leaves the chart (|j| < 1e-12)");
  BallPoint gz{v[0] / j, v[2] / j, v[3] / j};
  if (!(gz.positivity() > 0.0)) throw std::domain_error("act: image is not a positive line");
  return {j, gz};
}

Complex jacobian_numeric(const CMatrix& g, const BallPoint& z, double step) {
  auto coords = [](const BallPoint& p) { return std::array<Complex, 3>{p.w1, p.w3, p.w4}; };
  auto shifted = [&z](std::size_t k, double h) {
    BallPoint p = z;
    (k == 0 ? p.w1 : k == 1 ? p.w3 : p.w4) += h;
    return p;
  };
  // d[r][k] = d (g<z>)_r / d z_k
  std::array<std::array<Complex, 3>, 3> d{};
  for (std::size_t k = 0; k < 3; ++k) {
    auto plus = coords(act(g, shifted(k, step)).gz);
    auto minus = coords(act(g, shifted(k, -step)).gz);
    for (std::size_t r = 0; r < 3; ++r) d[r][k] = (plus[r] - minus[r]) / (2.0 * step);
  }
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

double jacobian_lemma_check(const CMatrix& g, const BallPoint& z) {
  constexpr int n = 3;
  Complex numeric = jacobian_numeric(g, z);
  Complex j = act(g, z).j;
  Complex closed = cmat_det(g) * std::pow(j, -(n + 1));
  return std::abs(numeric - closed) / std::abs(numeric);
}

BallPoint sample_ball_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re1(0.5, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> any(-2.0, 2.0);
  auto disk = [&] {
    for (;;) {
      Complex c(0.5 * unit(rng), 0.5 * unit(rng));
      if (std::abs(c) <= 0.5) return c;
    }
  };
  for (;;) {
    BallPoint p{Complex(re1(rng), any(rng)), disk(), disk()};
    if (p.positivity() >= 0.1) return p;
  }
}

CMatrix random_triflection_product(std::uint64_t seed, int factors) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> label(1, MirrorTable::kSize);
  std::uniform_int_distribution<int> power(1, 2);
  CMatrix g = cmat_identity();
  for (int i = 0; i < factors; ++i) {
    HermMatrix r = reflection(mirror_table().vector(label(rng)), CycRat::zeta_pow(power(rng)));
    g = cmat_mul(g, embed(r));
  }
  return g;
}

}  // namespace picardcy
