#include "picardcy/hermitian.hpp"

#include <sstream>
#include <stdexcept>

namespace picardcy {

HermVector to_herm(const LatticeVector& v) { return {CycRat(v[0]), CycRat(v[1]), CycRat(v[2]), CycRat(v[3])}; }

HermMatrix HermMatrix::identity() { return scalar(CycRat(1)); }

HermMatrix HermMatrix::scalar(const CycRat& c) { return diagonal({c, c, c, c}); }

HermMatrix HermMatrix::diagonal(const std::array<CycRat, 4>& d) {
  HermMatrix m;
  for (int i = 0; i < 4; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

HermVector HermMatrix::apply(const HermVector& v) const {
  HermVector out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

HermMatrix operator*(const HermMatrix& x, const HermMatrix& y) {
  HermMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CycRat acc;
      for (int k = 0; k < 4; ++k) acc += x(r, k) * y(k, c);
      out(r, c) = std::move(acc);
    }
  return out;
}

HermMatrix HermMatrix::pow(unsigned e) const {
  HermMatrix acc = identity();
  HermMatrix base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycRat HermMatrix::determinant() const {
  // Gaussian elimination over the field.
  std::array<CycRat, 16> a = m_;
  auto at = [&a](int r, int c) -> CycRat& { return a[static_cast<std::size_t>(4 * r + c)]; };
  CycRat det{1};
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && at(piv, col).is_zero()) ++piv;
    if (piv == 4) return CycRat{};
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(at(piv, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    CycRat inv = at(col, col).inverse();
    for (int r = col + 1; r < 4; ++r) {
      if (at(r, col).is_zero()) continue;
      CycRat f = at(r, col) * inv;
      for (int c = col; c < 4; ++c) at(r, c) -= f * at(col, c);
    }
  }
  return det;
}

bool HermMatrix::is_integral() const {
  for (const auto& x : m_)
    if (!x.is_integral()) return false;
  return true;
}

CycRat herm_form(const HermVector& a, const HermVector& b) {
  return conj(a[0]) * b[1] + conj(a[1]) * b[0] - conj(a[2]) * b[2] - conj(a[3]) * b[3];
}

HermMatrix reflection(const HermVector& b, const CycRat& eta) {
  CycRat bb = herm_form(b, b);
  if (bb.is_zero()) throw std::domain_error("reflection: isotropic mirror vector");
  if (eta == CycRat(1) || !(eta.pow(6) == CycRat(1)))
    throw std::domain_error("reflection: eta must be a sixth root of unity other than 1");
  CycRat factor = (CycRat(1) - eta) / bb;
  HermMatrix m;
  for (int c = 0; c < 4; ++c) {
    HermVector e{};
    e[static_cast<std::size_t>(c)] = CycRat(1);
    CycRat s = factor * herm_form(b, e);
    for (int r = 0; r < 4; ++r) m(r, c) = e[static_cast<std::size_t>(r)] - s * b[static_cast<std::size_t>(r)];
  }
  return m;
}

HermMatrix triflection(const HermVector& b) { return reflection(b, CycRat::zeta()); }

bool is_unitary(const HermMatrix& m) {
  std::array<HermVector, 4> cols{};
  std::array<HermVector, 4> basis{};
  for (std::size_t j = 0; j < 4; ++j) {
    basis[j][j] = CycRat(1);
    cols[j] = m.apply(basis[j]);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(herm_form(cols[i], cols[j]) == herm_form(basis[i], basis[j]))) return false;
  return true;
}

const LatticeVector& MirrorTable::at(int label) const {
  if (label < 1 || label > kSize) throw std::out_of_range("mirror label out of range: " + std::to_string(label));
  return entries_[static_cast<std::size_t>(label - 1)];
}

const MirrorTable& mirror_table() {
  using E = EisensteinInt;
  static const E z = E::zeta();
  static const MirrorTable table({{
      {0, 0, 1, 0},
      {0, 0, 0, 1},
      {1, 0, 1, 0},
      {1, 0, -1, 0},
      {1, 0, 0, 1},
      {1, 0, 0, -1},
      {0, 1, 1, 0},
      {0, 1, -1, 0},
      {0, 1, 0, 1},
      {0, 1, 0, -1},
      {z, -1, 1, 1},
      {z, -1, 1, -1},
      {z, -1, -1, 1},
      {z, -1, -1, -1},
      {z, 1, 0, 0},
  }});
  return table;
}

std::string format_mirror_table(const MirrorTable& t) {
  std::ostringstream os;
  os << "# short-mirror representatives, format v1\n";
  os << "# label  four coordinates as a+b*z with z^2 = -1-z\n";
  for (int label = 1; label <= MirrorTable::kSize; ++label) {
    os << label;
    for (const auto& x : t.at(label)) os << ' ' << to_token(x);
    os << '\n';
  }
  return os.str();
}

MirrorTable parse_mirror_table(std::string_view text) {
  std::array<LatticeVector, MirrorTable::kSize> entries{};
  std::array<bool, MirrorTable::kSize> seen{};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int label = 0;
    if (!(ls >> label) || label < 1 || label > MirrorTable::kSize)
      throw std::invalid_argument("mirror table: bad label in line '" + line + "'");
    auto idx = static_cast<std::size_t>(label - 1);
    if (seen[idx]) throw std::invalid_argument("mirror table: duplicate label " + std::to_string(label));
    for (auto& coord : entries[idx]) {
      std::string tok;
      if (!(ls >> tok)) throw std::invalid_argument("mirror table: short line '" + line + "'");
      coord = parse_token(tok);
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("mirror table: trailing data in line '" + line + "'");
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw std::invalid_argument("mirror table: missing label " + std::to_string(i + 1));
  return MirrorTable(entries);
}

}  // namespace picardcy
