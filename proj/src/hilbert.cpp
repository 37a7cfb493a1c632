#include "picardcy/hilbert.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "picardcy/polynomial.hpp"

namespace picardcy {

Rational Cubic::operator()(const Rational& k) const {
  return coeffs[0] + k * (coeffs[1] + k * (coeffs[2] + k * coeffs[3]));
}

const Cubic& dim_g33_cubic() {
  static const Cubic c{{Rational(-1377), Rational(8019, 2), Rational(-2187), Rational(729, 2)}};
  return c;
}

BigInt dim_g33(long k) {
  static constexpr std::array<long, 5> table = {1, 15, 130, 750, 3115};
  if (k < 0) throw std::domain_error("dim_g33: negative weight " + std::to_string(k));
  if (k <= 4) return table[static_cast<std::size_t>(k)];
  Rational v = dim_g33_cubic()(Rational(k));
  if (denominator(v) != 1 || v < 0) throw std::domain_error("dim_g33: cubic is not a nonnegative integer at k=" + std::to_string(k));
  return numerator(v);
}

BigInt eisenstein_part(long k) {
  static constexpr std::array<long, 4> table = {15, 120, 405, 765};
  if (k < 1) throw std::domain_error("eisenstein_part: weight must be >= 1, got " + std::to_string(k));
  if (k <= 4) return table[static_cast<std::size_t>(k - 1)];
  return 810;
}

namespace {

BigInt binomial(long n, long r) {
  if (r < 0 || n < r) return 0;
  BigInt acc = 1;
  for (long i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

// Exact rank of a dense rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// Class of x^e in (Z/3)^6 / <(1,1,1,2,2,2)>. Both cubics are homogeneous for this grading.
int grading_class(const Exponent& e) {
  auto m3 = [](int v) { return ((v % 3) + 3) % 3; };
  return m3(e[0] - e[1]) + 3 * m3(e[0] - e[2]) + 9 * m3(e[3] - e[4]) + 27 * m3(e[3] - e[5]) + 81 * m3(e[0] + e[3]);
}

}  // namespace

BigInt ci_dim(long k) {
  if (k < 0) return 0;
  // (1 - t^3)^2 = 1 - 2t^3 + t^6;  1/(1-t)^6 = sum C(j+5, 5) t^j
  static constexpr std::array<std::pair<long, long>, 3> numer = {{{0, 1}, {3, -2}, {6, 1}}};
  BigInt acc = 0;
  for (auto [shift, coeff] : numer)
    if (k >= shift) acc += coeff * binomial(k - shift + 5, 5);
  return acc;
}

BigInt ci_dim_oracle(long k) {
  if (k < 0 || k > 12) throw std::domain_error("ci_dim_oracle: k must lie in 0..12, got " + std::to_string(k));
  constexpr std::size_t n = 6;
  using P = Polynomial<Rational>;
  auto x = [](std::size_t i) { return P::variable(n, i); };
  const P f = x(0) * x(1) * x(2) - x(3) * x(4) * x(5);
  const P g = x(0).pow(3) + x(1).pow(3) + x(2).pow(3) - x(3).pow(3) - x(4).pow(3) - x(5).pow(3);

  const auto cols = monomials_of_degree(n, static_cast<int>(k));
  std::map<Exponent, std::size_t> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

  // Relation rows grouped by grading class; the span splits as a direct sum over classes.
  std::unordered_map<int, std::vector<P>> blocks;
  for (const auto& m : monomials_of_degree(n, static_cast<int>(k) - 3)) {
    P mono(n);
    mono.add_term(m, Rational(1));
    for (const P* rel : {&f, &g}) {
      P row = mono * *rel;
      int cls = grading_class(row.terms().begin()->first);
      for (const auto& [e, c] : row.terms())
        if (grading_class(e) != cls) throw std::logic_error("ci_dim_oracle: relation row is not graded");
      blocks[cls].push_back(std::move(row));
    }
  }

  std::size_t total_rank = 0;
  for (const auto& [cls, rows] : blocks) {
    std::map<std::size_t, std::size_t> local;
    for (const auto& r : rows)
      for (const auto& term : r.terms()) local.emplace(col_index.at(term.first), 0);
    std::size_t j = 0;
    for (auto& [global, idx] : local) idx = j++;
    std::vector<std::vector<Rational>> dense(rows.size(), std::vector<Rational>(local.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [e, c] : rows[i].terms()) dense[i][local.at(col_index.at(e))] = c;
    total_rank += rank(std::move(dense));
  }
  return BigInt(cols.size()) - BigInt(total_rank);
}

Cubic hilbert_polynomial_ci() {
  // Lagrange interpolation through k = 9..12, expanded into the monomial basis.
  constexpr std::array<long, 4> nodes = {9, 10, 11, 12};
  Cubic out{};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    // basis polynomial prod_{j != i} (k - k_j) / (k_i - k_j), built up coefficientwise
    std::array<Rational, 4> basis{Rational(1), 0, 0, 0};
    Rational denom = 1;
    std::size_t deg = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      for (std::size_t d = deg + 1; d > 0; --d) basis[d] = basis[d - 1] - Rational(nodes[j]) * basis[d];
      basis[0] *= -Rational(nodes[j]);
      ++deg;
      denom *= Rational(nodes[i] - nodes[j]);
    }
    Rational scale = Rational(ci_dim(nodes[i])) / denom;
    for (std::size_t d = 0; d < 4; ++d) out.coeffs[d] += scale * basis[d];
  }
  for (long k = 1; k <= 12; ++k)
    if (out(Rational(k)) != Rational(ci_dim(k)))
      throw std::logic_error("hilbert_polynomial_ci: fitted cubic disagrees with ci_dim at k=" + std::to_string(k));
  return out;
}

BigInt covering_degree_from_leading() {
  Rational ratio = dim_g33_cubic().leading() / hilbert_polynomial_ci().leading();
  if (denominator(ratio) != 1) throw std::logic_error("covering_degree_from_leading: ratio is not an integer");
  return numerator(ratio);
}

}  // namespace picardcy
