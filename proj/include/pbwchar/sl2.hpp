#pragma once

// sl2 adjoint machinery: the lowering derivation on commutative polynomials
// in e, h, f, and an exact one-parameter family of sl2 subalgebras of 4x4
// matrices that degenerates to the span of three matrix units.

#include <array>
#include <map>
#include <vector>

#include "pbwchar/series.hpp"

namespace pbwchar {

/// Integer combination of commutative monomials e^i h^j f^k, keyed (i, j, k).
class AdjointPolynomial {
 public:
  using Exponents = std::array<int, 3>;
  using TermMap = std::map<Exponents, BigInt>;

  AdjointPolynomial() = default;
  static AdjointPolynomial monomial(int e, int h, int f, const BigInt& c = 1);
  static AdjointPolynomial e() { return monomial(1, 0, 0); }
  static AdjointPolynomial h() { return monomial(0, 1, 0); }
  static AdjointPolynomial f() { return monomial(0, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(const Exponents& x) const;
  void add_term(const Exponents& x, const BigInt& c);

  AdjointPolynomial& operator+=(const AdjointPolynomial& o);
  AdjointPolynomial& operator*=(const AdjointPolynomial& o);
  AdjointPolynomial& operator*=(const BigInt& c);

  /// Divides out the gcd of all coefficients and makes the first
  /// (lex-smallest exponent key) coefficient positive.
  AdjointPolynomial primitive() const;
  /// The (unique) total degree, or -1 for zero; throws if not homogeneous.
  int degree() const;

  bool operator==(const AdjointPolynomial&) const = default;

 private:
  TermMap terms_;
};

AdjointPolynomial operator+(AdjointPolynomial a, const AdjointPolynomial& b);
AdjointPolynomial operator*(AdjointPolynomial a, const AdjointPolynomial& b);
AdjointPolynomial operator*(const BigInt& c, AdjointPolynomial a);
AdjointPolynomial pow(const AdjointPolynomial& p, int n);

std::string to_string(const AdjointPolynomial& p);

/// The derivation ad(f): e -> -h, h -> 2f, f -> 0, extended by Leibniz.
AdjointPolynomial lower_relation(const AdjointPolynomial& p);

/// e^{k+1}, D e^{k+1}, ..., D^{2k+2} e^{k+1}, each made primitive.
std::vector<AdjointPolynomial> lowering_orbit(int k);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

Matrix4 zero_matrix();
Matrix4 unit_matrix(int row, int col);  // 1-based E_{row,col}
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix4 operator-(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(const Rational& c, const Matrix4& a);
Matrix4 commutator(const Matrix4& a, const Matrix4& b);
Rational max_abs_entry(const Matrix4& a);

struct DegenTriple {
  Rational s;
  Rational epsilon;  // 1 - s^2
  Matrix4 e;
  Matrix4 h;
  Matrix4 f;
};

/// The sl2 triple inside the subalgebra annihilating
/// s v3 + eps v1 and s^2 v4 + eps v2, identified through its upper-left
/// 2x2 block. Throws std::invalid_argument unless 0 < s <= 1.
DegenTriple degeneration_matrices(const Rational& s);

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, and rows 3, 4 vanish, traces vanish.
bool satisfies_sl2_relations(const DegenTriple& t);

struct DegenLimitRow {
  Rational s;
  Rational e_residual;  // max |(eps-1) e - E_{1,4}|
  Rational h_residual;  // max |(1-eps) h - E_{2,4}|
  Rational f_residual;  // max |s f + E_{2,3}|
};

struct DegenLimitReport {
  std::vector<DegenLimitRow> rows;
  bool monotone = true;  // every residual strictly decreases along the sequence
};

DegenLimitReport degeneration_limits(const std::vector<Rational>& s_sequence);

}  // namespace pbwchar
