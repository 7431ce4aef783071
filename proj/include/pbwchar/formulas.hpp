#pragma once

// Closed-form evaluators for the graded characters: fermionic sums, the
// bosonic theta product, the supernomial form, and the character of a
// lattice principal subspace given by its Gram matrix.

#include <vector>

#include "pbwchar/series.hpp"

namespace pbwchar {

/// Gaussian binomial [n, m]_q as an exact polynomial; zero outside 0 <= m <= n.
LaurentPoly gaussian_binomial(int n, int m);

/// S_{m,l}(q). Negative q exponents are kept. Throws if |l| > m or m < 0.
LaurentPoly supernomial(int m, int l);

Series3 fermionic_level1(int q_max);
Series3 fused_character_level1(int q_max);
Series3 fermionic_level_k(int k, int q_max);
/// u-free: all terms sit at u = 0.
Series3 bosonic_level1(int q_max);

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Gram matrix of lattice generators with a (z, u) weight per generator.
class GramMatrix {
 public:
  GramMatrix(std::vector<std::vector<int>> entries, std::vector<int> z_weights,
             std::vector<int> u_weights);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i][j]; }
  const std::vector<int>& z_weights() const { return z_weights_; }
  const std::vector<int>& u_weights() const { return u_weights_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// Leading principal minors, exact.
  std::vector<BigInt> leading_minors() const;
  bool is_positive_definite() const;

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<int> z_weights_;
  std::vector<int> u_weights_;
};

/// Gram matrix of the sums p_1+..+p_l, q_1+..+q_l, r_1+..+r_l (l = 1..k),
/// ordered e-layers, h-layers, f-layers.
GramMatrix gram_matrix_Qk(int k);

/// Sum over n >= 0 of u^{sum u_i n_i} z^{sum z_i n_i} q^{n M n / 2} / (q)_n.
/// Throws FormulaError unless M is positive-definite with even diagonal.
Series3 principal_char(const GramMatrix& gram, int q_max);

}  // namespace pbwchar
