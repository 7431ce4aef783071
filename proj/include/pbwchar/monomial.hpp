#pragma once

// Ordered monomials  ... f_{-n}^{a_n} h_{-n}^{b_n} e_{-n}^{c_n} ... f_{-1}^{a_1} h_{-1}^{b_1} e_{-1}^{c_1}
// in the negative modes of affine sl2, with the ehf (level k) and ehf'
// (level 1) difference conditions.

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbwchar/series.hpp"

namespace pbwchar {

class OrderedMonomial {
 public:
  /// Exponents of (f, h, e) at mode -i, i.e. (a_i, b_i, c_i).
  using Triple = std::array<int, 3>;

  OrderedMonomial() = default;
  /// exps[i-1] = (a_i, b_i, c_i). Trailing zero triples are dropped.
  explicit OrderedMonomial(std::vector<Triple> exps);

  /// Support: largest i with a nonzero exponent, 0 for the empty monomial.
  int support() const { return static_cast<int>(exps_.size()); }
  int a(int i) const { return get(i, 0); }
  int b(int i) const { return get(i, 1); }
  int c(int i) const { return get(i, 2); }
  void set(int i, int slot, int value);

  /// Total exponent sum, the PBW degree.
  int degree() const;
  TriDegree tridegree() const;
  const std::vector<Triple>& exponents() const { return exps_; }

  bool operator==(const OrderedMonomial&) const = default;

 private:
  int get(int i, int slot) const {
    return (i >= 1 && i <= support()) ? exps_[i - 1][slot] : 0;
  }
  void trim();

  std::vector<Triple> exps_;
};

/// "f[-1]^1 e[-1]^1": factors by increasing mode index, f, h, e within a mode.
std::string to_string(const OrderedMonomial& m);

struct ConstraintProfile {
  enum class Variant { Ehf, EhfPrime };
  Variant variant = Variant::Ehf;
  int level = 1;

  static ConstraintProfile ehf(int k);
  static ConstraintProfile ehf_prime() { return {Variant::EhfPrime, 1}; }
};

bool is_admissible(const OrderedMonomial& m, const ConstraintProfile& p);

/// Every admissible monomial with q-degree <= q_max, ordered by increasing
/// q-degree and, within a q-degree, increasing under lex_compare.
std::vector<OrderedMonomial> enumerate(const ConstraintProfile& p, int q_max);

Series3 character_of(const ConstraintProfile& p, int q_max);

/// Monomial order used for standard monomials: higher total degree is
/// larger; otherwise the exponent sequence (c_1, b_1, a_1, c_2, b_2, a_2, ...)
/// is compared lexicographically and the smaller sequence wins.
std::strong_ordering lex_compare(const OrderedMonomial& m1, const OrderedMonomial& m2);

/// Same exponent sequence as lex_compare, but decided at the last position
/// where the two monomials differ (smaller exponent wins). Under this order
/// the standard monomials of the level-1 quotient B_1 are the ehf' monomials.
std::strong_ordering reverse_lex_compare(const OrderedMonomial& m1, const OrderedMonomial& m2);

enum class MonomialOrder { FirstDifference, LastDifference };

std::strong_ordering compare(const OrderedMonomial& m1, const OrderedMonomial& m2, MonomialOrder order);

class MonomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree-preserving bijection from ehf (level 1) to ehf' monomials.
OrderedMonomial phi_forward(const OrderedMonomial& m);
OrderedMonomial phi_inverse(const OrderedMonomial& m);

}  // namespace pbwchar
