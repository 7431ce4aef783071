#pragma once

// Exact truncated formal series in q, z, u with big-integer coefficients.
//
// A Series3 stores a sparse map from tri-degrees to nonzero coefficients.
// Every value carries its truncation bound q_max; binary operations refuse
// to mix bounds. q and u grades are non-negative, z grades are even.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pbwchar {

using BigInt = mpz_class;
using Rational = mpq_class;

struct TriDegree {
  int q = 0;
  int z = 0;
  int u = 0;

  auto operator<=>(const TriDegree&) const = default;
  TriDegree operator+(const TriDegree& o) const { return {q + o.q, z + o.z, u + o.u}; }
  TriDegree operator-(const TriDegree& o) const { return {q - o.q, z - o.z, u - o.u}; }
};

std::string to_string(const TriDegree& d);

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Series3 {
 public:
  using TermMap = std::map<TriDegree, BigInt>;

  explicit Series3(int q_max);

  static Series3 zero(int q_max) { return Series3(q_max); }
  static Series3 one(int q_max);
  /// c * q^q z^z u^u; dropped if q exceeds q_max.
  static Series3 monomial(int q_max, TriDegree d, const BigInt& c = 1);

  int q_max() const { return q_max_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(const TriDegree& d) const;

  /// Adds c at degree d (silently ignored past q_max). Throws on negative q
  /// or u, or odd z.
  void add_term(const TriDegree& d, const BigInt& c);

  Series3& operator+=(const Series3& o);
  Series3& operator-=(const Series3& o);
  Series3& operator*=(const Series3& o);

  /// Restriction to q <= m (m <= q_max).
  Series3 truncated(int m) const;
  /// Sum over u: evaluates the series at u = 1.
  Series3 at_u_equals_one() const;
  /// Substitutes z -> z^{-1}.
  Series3 z_reflected() const;

  bool operator==(const Series3& o) const = default;

 private:
  void check_same_bound(const Series3& o, const char* op) const;

  int q_max_;
  TermMap terms_;
};

Series3 operator+(Series3 a, const Series3& b);
Series3 operator-(Series3 a, const Series3& b);
Series3 operator*(const Series3& a, const Series3& b);

Series3 add(const Series3& a, const Series3& b);
Series3 mul(const Series3& a, const Series3& b);

/// Two-sided inverse up to q_max. Requires the q = 0 part to be exactly +1
/// or -1 at degree (0,0,0).
Series3 invert_unit(const Series3& a);

/// Marker for the infinite product (q)_infinity.
inline constexpr int kPochhammerInfinity = -1;

/// 1 / prod_{j=1}^{n} (1 - q^j); n = kPochhammerInfinity means j runs to q_max.
Series3 pochhammer_inverse(int n, int q_max);

/// First differing degree, or nullopt-like {false, ...} when equal.
struct SeriesDiff {
  bool differs = false;
  TriDegree at{};
  BigInt lhs;
  BigInt rhs;
};
SeriesDiff first_difference(const Series3& a, const Series3& b);

std::string to_string(const Series3& s);

// Univariate Laurent polynomial in q with big-integer coefficients. Used for
// Gaussian binomials and supernomial sums, whose summands carry negative
// exponents before being combined with a positive prefactor.
class LaurentPoly {
 public:
  using TermMap = std::map<int, BigInt>;

  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, const BigInt& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int e) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int e, const BigInt& c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly shifted(int by) const;

  /// Exact division; throws SeriesError if o does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& o) const;

  bool operator==(const LaurentPoly& o) const = default;

 private:
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

std::string to_string(const LaurentPoly& p);

/// Adds u^u z^z * p(q) * s(q) into out, where s is a u- and z-free Series3.
/// Asserts every resulting q exponent is non-negative.
void accumulate_product(Series3& out, const LaurentPoly& p, const Series3& s, int z, int u);

}  // namespace pbwchar
