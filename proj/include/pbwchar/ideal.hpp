#pragma once

// Brute-force graded dimensions of quotients of polynomial algebras by
// ideals generated from the Fourier coefficients of products of currents.
//
// A current of letter x on layer l is  x^{[l]}(z) = sum_{n >= l} x^{[l]}_n z^{n-l},
// where x^{[l]}_n stands for the mode x^{[l]}_{-n}. Layer-1 currents are the
// plain abelian currents e(z), h(z), f(z). Variables carry the weights
// q = n, u = l and z = +2l, 0, -2l for e, h, f.

#include <compare>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "pbwchar/monomial.hpp"
#include "pbwchar/series.hpp"

namespace pbwchar {

enum class Letter { E, H, F };

char letter_char(Letter x);

struct CurrentSymbol {
  Letter letter = Letter::E;
  int layer = 1;
  auto operator<=>(const CurrentSymbol&) const = default;
};

struct CurrentFactor {
  CurrentSymbol symbol;
  int derivative = 0;
};

/// coeff * product of currents.
struct RelationTerm {
  BigInt coeff = 1;
  std::vector<CurrentFactor> factors;
};

/// A series whose coefficients all lie in the ideal: an integer combination
/// of current products, homogeneous in (z, u).
struct RelationFamily {
  std::vector<RelationTerm> terms;
  std::string label;
};

struct RelationSpec {
  std::string name;
  int level = 1;
  std::vector<RelationFamily> families;

  int max_layer() const;
};

std::string to_string(const RelationFamily& f);

RelationSpec relations_A(int k);
RelationSpec relations_B(int k);
RelationSpec relations_C(int k);

/// A polynomial variable: the mode n of a current symbol.
struct Variable {
  int mode = 1;
  int layer = 1;
  Letter letter = Letter::E;
  auto operator<=>(const Variable&) const = default;
};

TriDegree weight(const Variable& v);

/// Commutative monomial: sorted multiset of variables.
using OracleMonomial = std::vector<Variable>;

TriDegree weight(const OracleMonomial& m);
std::string to_string(const OracleMonomial& m);

/// Layer-1 monomial in the (a_i, b_i, c_i) encoding.
OrderedMonomial to_ordered(const OracleMonomial& m);
OracleMonomial from_ordered(const OrderedMonomial& m);

/// The graded slice of the ideal at one tri-degree, as integer rows over the
/// monomial basis of that degree.
struct SliceMatrix {
  TriDegree degree;
  std::vector<OracleMonomial> columns;
  std::vector<std::vector<BigInt>> rows;
};

struct SliceDimension {
  TriDegree degree;
  int n_monomials = 0;
  int n_rows = 0;
  int rank = 0;
  int dim = 0;
};

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank of an integer matrix by fraction-free elimination.
int exact_rank(const std::vector<std::vector<BigInt>>& rows);

// Caches the monomial table and the relation coefficients for one spec up
// to a q-degree bound. Slices are independent, and const member functions
// may be called concurrently once the object is built.
class QuotientOracle {
 public:
  QuotientOracle(RelationSpec spec, int q_max);

  const RelationSpec& spec() const { return spec_; }
  int q_max() const { return q_max_; }

  /// All monomials of the polynomial algebra at degree d.
  const std::vector<OracleMonomial>& monomials(const TriDegree& d) const;
  std::vector<TriDegree> degrees() const;

  SliceMatrix expand_rows(const TriDegree& d) const;
  SliceDimension graded_dimension(const TriDegree& d) const;
  Series3 quotient_character() const;
  std::vector<SliceDimension> dimension_table() const;

  /// Monomials of degree d that are not leading monomials of the ideal slice
  /// under the given order, sorted increasingly. Layer-1 specs only.
  std::vector<OrderedMonomial> standard_monomials(
      const TriDegree& d, MonomialOrder order = MonomialOrder::FirstDifference) const;

 private:
  struct FamilyData {
    TriDegree weight_shift;  // (0, z, u) of the family; q handled per coefficient
    int min_q = 0;
    // q-degree -> coefficient polynomial (monomial -> integer)
    std::map<int, std::map<OracleMonomial, BigInt>> coefficients;
  };

  void build_monomials();
  void build_families();

  RelationSpec spec_;
  int q_max_;
  std::map<TriDegree, std::vector<OracleMonomial>> monomials_;
  std::vector<FamilyData> families_;
};

int graded_dimension(const RelationSpec& spec, const TriDegree& d);
Series3 quotient_character(const RelationSpec& spec, int q_max);
std::vector<OrderedMonomial> standard_monomials(const RelationSpec& spec, const TriDegree& d,
                                               MonomialOrder order = MonomialOrder::FirstDifference);

/// CSV with header q,z,u,n_monomials,n_rows,rank,dim sorted by (q, z, u).
void write_dimension_csv(std::ostream& os, const std::vector<SliceDimension>& table);

}  // namespace pbwchar
