// Formal divisor arithmetic on the 15 short-mirror classes: zero divisors of the
// weight-1 forms B1..B15 and the Laurent-monomial cusp forms C1..C10.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace picardcy {

inline constexpr int kMirrorCount = 15;
inline constexpr int kBFormCount = 15;
inline constexpr int kCFormCount = 10;

/// Integer multiplicities indexed by mirror labels 1..15.
class Divisor {
 public:
  Divisor() = default;
  static Divisor from_labels(std::initializer_list<int> labels);

  int operator[](int label) const;
  int& operator[](int label);

  bool is_effective() const;
  /// Labels with nonzero multiplicity, ascending.
  std::vector<int> support() const;

  Divisor& operator+=(const Divisor& o);
  friend Divisor operator+(Divisor x, const Divisor& y) { return x += y; }
  friend Divisor operator*(int k, Divisor d);
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::array<int, kMirrorCount> m_{};
};

/// Exponents indexed by form labels B1..B15.
class LaurentWord {
 public:
  LaurentWord() = default;

  int operator[](int label) const;
  int& operator[](int label);
  /// Each B has weight 1.
  int weight() const;

  LaurentWord& operator+=(const LaurentWord& o);
  friend LaurentWord operator+(LaurentWord x, const LaurentWord& y) { return x += y; }
  friend LaurentWord operator*(int k, LaurentWord w);
  friend bool operator==(const LaurentWord&, const LaurentWord&) = default;

 private:
  std::array<int, kBFormCount> e_{};
};

/// Mirror triples of B1..B15 and the definitions C_i = B_n1 B_n2 B_n3 / B_d.
struct FormTables {
  std::array<std::array<int, 3>, kBFormCount> b_mirrors;
  struct CDef {
    std::array<int, 3> num;
    int den;
    friend bool operator==(const CDef&, const CDef&) = default;
  };
  std::array<CDef, kCFormCount> c_defs;

  friend bool operator==(const FormTables&, const FormTables&) = default;
};

const FormTables& form_tables();

/// Throws std::out_of_range unless 1 <= i <= 15.
Divisor b_divisor(int i);
/// Throws std::out_of_range unless 1 <= i <= 10.
LaurentWord c_word(int i);
Divisor divisor_of(const LaurentWord& w);

struct EffectivityRecord {
  int c_label;
  bool effective;
  std::size_t support_size;
  Divisor divisor;
};

std::vector<EffectivityRecord> effectivity_report();

/// Forms whose divisors must avoid the C1 support.
inline constexpr std::array<int, 6> kTrivialMultiplierForms = {6, 7, 8, 9, 12, 13};

/// Supports of B6, B7, B8, B9, B12, B13 are disjoint from the support of divisor_of(C1).
bool trivial_multiplier_support_check();

/// weight(C1^2) equals n + 1 for the ball dimension n = 3.
bool cy_weight_check();

// Text form: '#' comments, "B <i> <m1> <m2> <m3>" and "C <i> <num1> <num2> <num3> <den>".
std::string format_form_tables(const FormTables& t);
/// Throws std::invalid_argument on malformed or incomplete input.
FormTables parse_form_tables(std::string_view text);

}  // namespace picardcy
