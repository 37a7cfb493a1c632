#include "picardcy/divisor_ledger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace picardcy {

namespace {

std::size_t checked_index(int label, int n, const char* what) {
  if (label < 1 || label > n) throw std::out_of_range(std::string(what) + " label out of range: " + std::to_string(label));
  return static_cast<std::size_t>(label - 1);
}

}  // namespace

Divisor Divisor::from_labels(std::initializer_list<int> labels) {
  Divisor d;
  for (int l : labels) d[l] += 1;
  return d;
}

int Divisor::operator[](int label) const { return m_[checked_index(label, kMirrorCount, "mirror")]; }
int& Divisor::operator[](int label) { return m_[checked_index(label, kMirrorCount, "mirror")]; }

bool Divisor::is_effective() const {
  return std::all_of(m_.begin(), m_.end(), [](int x) { return x >= 0; });
}

std::vector<int> Divisor::support() const {
  std::vector<int> out;
  for (int l = 1; l <= kMirrorCount; ++l)
    if ((*this)[l] != 0) out.push_back(l);
  return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

Divisor operator*(int k, Divisor d) {
  for (auto& x : d.m_) x *= k;
  return d;
}

int LaurentWord::operator[](int label) const { return e_[checked_index(label, kBFormCount, "form")]; }
int& LaurentWord::operator[](int label) { return e_[checked_index(label, kBFormCount, "form")]; }

int LaurentWord::weight() const {
  int w = 0;
  for (int x : e_) w += x;
  return w;
}

LaurentWord& LaurentWord::operator+=(const LaurentWord& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

LaurentWord operator*(int k, LaurentWord w) {
  for (auto& x : w.e_) x *= k;
  return w;
}

const FormTables& form_tables() {
  static const FormTables t{
      {{
          {1, 2, 15},
          {2, 4, 8},
          {2, 3, 7},
          {1, 6, 10},
          {1, 5, 9},
          {12, 13, 15},
          {11, 14, 15},
          {4, 6, 11},
          {4, 5, 12},
          {8, 10, 14},
          {8, 9, 13},
          {3, 6, 13},
          {3, 5, 14},
          {7, 10, 12},
          {7, 9, 11},
      }},
      {{
          {{2, 4, 15}, 8},
          {{2, 13, 15}, 3},
          {{3, 6, 10}, 14},
          {{3, 5, 8}, 15},
          {{8, 13, 14}, 9},
          {{5, 7, 14}, 15},
          {{2, 6, 15}, 11},
          {{1, 8, 11}, 2},
          {{6, 13, 15}, 7},
          {{2, 4, 6}, 1},
      }},
  };
  return t;
}

Divisor b_divisor(int i) {
  const auto& m = form_tables().b_mirrors[checked_index(i, kBFormCount, "B-form")];
  return Divisor::from_labels({m[0], m[1], m[2]});
}

LaurentWord c_word(int i) {
  const auto& def = form_tables().c_defs[checked_index(i, kCFormCount, "C-form")];
  LaurentWord w;
  for (int n : def.num) w[n] += 1;
  w[def.den] -= 1;
  return w;
}

Divisor divisor_of(const LaurentWord& w) {
  Divisor d;
  for (int i = 1; i <= kBFormCount; ++i)
    if (w[i] != 0) d += w[i] * b_divisor(i);
  return d;
}

std::vector<EffectivityRecord> effectivity_report() {
  std::vector<EffectivityRecord> out;
  for (int i = 1; i <= kCFormCount; ++i) {
    Divisor d = divisor_of(c_word(i));
    out.push_back({i, d.is_effective(), d.support().size(), d});
  }
  return out;
}

bool trivial_multiplier_support_check() {
  Divisor c1 = divisor_of(c_word(1));
  for (int b : kTrivialMultiplierForms)
    for (int m : b_divisor(b).support())
      if (c1[m] != 0) return false;
  return true;
}

bool cy_weight_check() {
  constexpr int ball_dimension = 3;
  return (2 * c_word(1)).weight() == ball_dimension + 1;
}

std::string format_form_tables(const FormTables& t) {
  std::ostringstream os;
  os << "# zero divisors of B1..B15 (mirror labels) and C_i = B_n1 B_n2 B_n3 / B_d, format v1\n";
  for (std::size_t i = 0; i < t.b_mirrors.size(); ++i) {
    const auto& m = t.b_mirrors[i];
    os << "B " << i + 1 << ' ' << m[0] << ' ' << m[1] << ' ' << m[2] << '\n';
  }
  for (std::size_t i = 0; i < t.c_defs.size(); ++i) {
    const auto& c = t.c_defs[i];
    os << "C " << i + 1 << ' ' << c.num[0] << ' ' << c.num[1] << ' ' << c.num[2] << ' ' << c.den << '\n';
  }
  return os.str();
}

FormTables parse_form_tables(std::string_view text) {
  FormTables t{};
  std::array<bool, kBFormCount> seen_b{};
  std::array<bool, kCFormCount> seen_c{};
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [&line](const std::string& why) { throw std::invalid_argument("form tables: " + why + " in line '" + line + "'"); };
  auto read_label = [&](std::istringstream& ls, int hi) {
    int v = 0;
    if (!(ls >> v)) fail("missing integer");
    if (v < 1 || v > hi) fail("label out of range");
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "B") {
      auto i = static_cast<std::size_t>(read_label(ls, kBFormCount) - 1);
      if (seen_b[i]) fail("duplicate entry");
      for (auto& m : t.b_mirrors[i]) m = read_label(ls, kMirrorCount);
      seen_b[i] = true;
    } else if (kind == "C") {
      auto i = static_cast<std::size_t>(read_label(ls, kCFormCount) - 1);
      if (seen_c[i]) fail("duplicate entry");
      for (auto& n : t.c_defs[i].num) n = read_label(ls, kBFormCount);
      t.c_defs[i].den = read_label(ls, kBFormCount);
      seen_c[i] = true;
    } else {
      fail("unknown record kind");
    }
    std::string extra;
    if (ls >> extra) fail("trailing data");
  }
  if (!std::all_of(seen_b.begin(), seen_b.end(), [](bool b) { return b; }) ||
      !std::all_of(seen_c.begin(), seen_c.end(), [](bool b) { return b; }))
    throw std::invalid_argument("form tables: incomplete B or C table");
  return t;
}

}  // namespace picardcy
