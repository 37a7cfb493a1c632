#include "picardcy/resgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace picardcy {

Mod3Residue reduce_mod3(const EisensteinInt& x) {
  BigInt a = x.a() % 3;
  BigInt b = x.b() % 3;
  return {a.convert_to<int>(), b.convert_to<int>()};
}

ResidueMatrix ResidueMatrix::scalar(Mod3Residue u) {
  ResidueMatrix m;
  for (int i = 0; i < 4; ++i) m(i, i) = u;
  return m;
}

ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y) {
  ResidueMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Mod3Residue acc;
      for (int k = 0; k < 4; ++k) acc = acc + x(r, k) * y(k, c);
      out(r, c) = acc;
    }
  return out;
}

// Laplace expansion; the ring is not a field so no pivoting.
Mod3Residue ResidueMatrix::determinant() const {
  auto det3 = [this](int skip_col) {
    std::array<int, 3> cols{};
    int n = 0;
    for (int c = 0; c < 4; ++c)
      if (c != skip_col) cols[static_cast<std::size_t>(n++)] = c;
    auto e = [&](int r, int i) { return (*this)(r, cols[static_cast<std::size_t>(i)]); };
    return e(1, 0) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1)) - e(1, 1) * (e(2, 0) * e(3, 2) - e(2, 2) * e(3, 0)) +
           e(1, 2) * (e(2, 0) * e(3, 1) - e(2, 1) * e(3, 0));
  };
  Mod3Residue det;
  for (int c = 0; c < 4; ++c) {
    Mod3Residue term = (*this)(0, c) * det3(c);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::uint64_t ResidueMatrix::key() const {
  std::uint64_t k = 0;
  for (auto x : m_) k = 9 * k + static_cast<std::uint64_t>(x.index());
  return k;
}

bool ResidueMatrix::is_scalar() const {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
      if (r == c && !((*this)(r, c) == (*this)(0, 0))) return false;
    }
  return true;
}

bool ResidueMatrix::preserves_form() const {
  static constexpr std::array<int, 16> gram = {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mod3Residue acc;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          int g = gram[static_cast<std::size_t>(4 * k + l)];
          if (g == 0) continue;
          acc = acc + Mod3Residue(g, 0) * conj((*this)(k, i)) * (*this)(l, j);
        }
      if (!(acc == Mod3Residue(gram[static_cast<std::size_t>(4 * i + j)], 0))) return false;
    }
  return true;
}

std::string ResidueMatrix::to_line() const {
  std::string s;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + m_[i].a());
    s += static_cast<char>('0' + m_[i].b());
  }
  return s;
}

ResidueMatrix reduce_mod3(const HermMatrix& m) {
  ResidueMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = reduce_mod3(m(r, c).to_eisenstein());
  return out;
}

FiniteMatrixGroup closure(const std::vector<ResidueMatrix>& generators) {
  for (const auto& g : generators)
    if (!g.is_invertible()) throw std::domain_error("closure: non-invertible generator " + g.to_line());
  FiniteMatrixGroup grp;
  grp.generators_ = generators;
  auto insert = [&grp](const ResidueMatrix& m) {
    auto [it, fresh] = grp.index_.emplace(m.key(), grp.elements_.size());
    if (fresh) grp.elements_.push_back(m);
    return fresh;
  };
  insert(ResidueMatrix::identity());
  // Elements are appended in discovery order, so the vector doubles as the BFS queue.
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (const auto& g : generators) {
      ResidueMatrix next = grp.elements_[head] * g;
      insert(next);
    }
  }
  return grp;
}

std::vector<ResidueMatrix> scalar_subgroup(const FiniteMatrixGroup& g) {
  std::vector<ResidueMatrix> out;
  for (const auto& m : g.elements())
    if (m.is_scalar()) out.push_back(m);
  return out;
}

std::size_t covering_degree(const FiniteMatrixGroup& g) { return g.order() / scalar_subgroup(g).size(); }

std::vector<ResidueMatrix> gprime_generators(const CycRat& eta) {
  std::vector<ResidueMatrix> gens;
  for (int label : kGPrimeMirrors) gens.push_back(reduce_mod3(reflection(mirror_table().vector(label), eta)));
  return gens;
}

FiniteMatrixGroup gprime_image(const CycRat& eta) { return closure(gprime_generators(eta)); }

std::string format_group(const FiniteMatrixGroup& g) {
  std::ostringstream os;
  os << "# order " << g.order() << "; one 4x4 matrix over E/3E per line, row-major digit pairs ab = a+b*z\n";
  for (const auto& m : g.elements()) os << m.to_line() << '\n';
  return os.str();
}

}  // namespace picardcy
