#include "picardcy/monomial_aut.hpp"

#include <sstream>
#include <stdexcept>

namespace picardcy {

namespace {

constexpr Permutation6 kIdentityPerm = {0, 1, 2, 3, 4, 5};

bool block_respecting(const Permutation6& s) {
  std::array<bool, 6> hit{};
  for (int v : s) {
    if (v < 0 || v > 5 || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  int first = s[0] / 3;
  for (std::size_t i = 0; i < 6; ++i)
    if (s[i] / 3 != (i < 3 ? first : 1 - first)) return false;
  return true;
}

}  // namespace

MonomialAut::MonomialAut() : sigma_(kIdentityPerm), scalars_{} {}

MonomialAut::MonomialAut(Permutation6 sigma, std::array<Mu3, 6> scalars) : sigma_(sigma), scalars_(scalars) {
  if (!block_respecting(sigma_)) throw std::invalid_argument("MonomialAut: permutation does not respect the blocks");
  if (!(scalars_[0] * scalars_[1] * scalars_[2] == scalars_[3] * scalars_[4] * scalars_[5]))
    throw std::invalid_argument("MonomialAut: scalars violate s0 s1 s2 = s3 s4 s5");
  normalize();
}

MonomialAut MonomialAut::permutation(Permutation6 sigma) { return {sigma, {}}; }

MonomialAut MonomialAut::transposition(int i, int j) {
  Permutation6 s = kIdentityPerm;
  std::swap(s.at(static_cast<std::size_t>(i)), s.at(static_cast<std::size_t>(j)));
  return permutation(s);
}

MonomialAut MonomialAut::block_swap() { return permutation({3, 4, 5, 0, 1, 2}); }

MonomialAut MonomialAut::diagonal(const std::array<int, 6>& exponents) {
  std::array<Mu3, 6> s;
  for (std::size_t i = 0; i < 6; ++i) s[i] = Mu3(exponents[i]);
  return {kIdentityPerm, s};
}

void MonomialAut::normalize() {
  Mu3 base = scalars_[0];
  for (auto& s : scalars_) s = s / base;
}

bool MonomialAut::is_torus() const { return sigma_ == kIdentityPerm; }

int MonomialAut::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (sigma_[i] > sigma_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::array<CycRat, 36> MonomialAut::matrix() const {
  std::array<CycRat, 36> m{};
  for (std::size_t i = 0; i < 6; ++i) {
    auto row = static_cast<std::size_t>(sigma_[i]);
    m[6 * row + i] = scalars_[row].value();
  }
  return m;
}

std::array<CycRat, 6> MonomialAut::apply(const std::array<CycRat, 6>& x) const {
  std::array<CycRat, 6> y{};
  for (std::size_t i = 0; i < 6; ++i) {
    auto row = static_cast<std::size_t>(sigma_[i]);
    y[row] = scalars_[row].value() * x[i];
  }
  return y;
}

MonomialAut MonomialAut::inverse() const {
  Permutation6 inv{};
  std::array<Mu3, 6> s{};
  for (std::size_t i = 0; i < 6; ++i) {
    auto k = static_cast<std::size_t>(sigma_[i]);
    inv[k] = static_cast<int>(i);
    // x_i = s_k^{-1} y_k
    s[i] = Mu3(0) / scalars_[k];
  }
  return {inv, s};
}

std::uint32_t MonomialAut::key() const {
  std::uint32_t k = 0;
  for (int v : sigma_) k = 6 * k + static_cast<std::uint32_t>(v);
  for (auto s : scalars_) k = 3 * k + static_cast<std::uint32_t>(s.exponent());
  return k;
}

std::string MonomialAut::to_string() const {
  std::ostringstream os;
  os << "sigma=(";
  for (std::size_t i = 0; i < 6; ++i) os << (i ? " " : "") << sigma_[i];
  os << ") zeta^(";
  for (std::size_t i = 0; i < 6; ++i) os << (i ? " " : "") << scalars_[i].exponent();
  os << ')';
  return os.str();
}

MonomialAut compose(const MonomialAut& g, const MonomialAut& h) {
  Permutation6 sigma{};
  std::array<Mu3, 6> s{};
  for (std::size_t j = 0; j < 6; ++j) {
    auto mid = static_cast<std::size_t>(h.sigma()[j]);
    auto out = static_cast<std::size_t>(g.sigma()[mid]);
    sigma[j] = static_cast<int>(out);
    s[out] = g.scalars()[out] * h.scalars()[mid];
  }
  return {sigma, s};
}

}  // namespace picardcy
