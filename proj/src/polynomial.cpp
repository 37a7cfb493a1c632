#include "picardcy/polynomial.hpp"

namespace picardcy {

namespace {

void fill(std::size_t pos, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    fill(pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0 || nvars == 0) return out;
  Exponent cur(nvars, 0);
  fill(0, degree, cur, out);
  return out;
}

}  // namespace picardcy
