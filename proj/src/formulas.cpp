#include "pbwchar/formulas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pbwchar {

namespace {

// Dense coefficient vector of 1/(q)_n up to q^len-1.
std::vector<BigInt> poch_inv_dense(int n, int len) {
  std::vector<BigInt> c(len, 0);
  if (len == 0) return c;
  c[0] = 1;
  for (int j = 1; j <= n && j < len; ++j)
    for (int i = j; i < len; ++i) c[i] += c[i - j];
  return c;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::vector<BigInt> out(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; i + j < out.size() && j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

class PochhammerCache {
 public:
  explicit PochhammerCache(int q_max) : len_(q_max + 1) {}
  const std::vector<BigInt>& get(int n) {
    n = std::min(n, len_);  // factors (1 - q^j) with j >= len are invisible
    while (static_cast<int>(cache_.size()) <= n) cache_.push_back(poch_inv_dense(cache_.size(), len_));
    return cache_[n];
  }
  // prod_i 1/(q)_{n_i}
  std::vector<BigInt> product(const std::vector<int>& ns) {
    std::vector<BigInt> acc(len_, 0);
    acc[0] = 1;
    for (int n : ns)
      if (n > 0) acc = convolve(acc, get(n));
    return acc;
  }

 private:
  int len_;
  std::vector<std::vector<BigInt>> cache_;
};

// Adds u^u z^z q^shift * dense(q) into out.
void add_shifted(Series3& out, const std::vector<BigInt>& dense, int shift, int z, int u) {
  for (int i = 0; shift + i <= out.q_max() && i < static_cast<int>(dense.size()); ++i)
    out.add_term({shift + i, z, u}, dense[i]);
}

LaurentPoly q_pochhammer(int n) {
  LaurentPoly p = LaurentPoly::constant(1);
  for (int j = 1; j <= n; ++j) p *= LaurentPoly::constant(1) - LaurentPoly::monomial(j);
  return p;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw FormulaError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// All n in Z_{>=0}^k with n A n / 2 <= bound, A_{ij} = 2 min(i, j).
std::vector<std::vector<int>> level_vectors(int k, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(k, 0);
  // n A n / 2 = sum_t (n_t + ... + n_k)^2; fill from the top layer down.
  std::function<void(int, int, int)> rec = [&](int t, int tail, int value) {
    if (t < 0) {
      out.push_back(n);
      return;
    }
    for (int v = 0;; ++v) {
      const int s = tail + v;
      if (value + s * s > bound) break;
      n[t] = v;
      rec(t - 1, s, value + s * s);
    }
    n[t] = 0;
  };
  rec(k - 1, 0, 0);
  return out;
}

}  // namespace

LaurentPoly gaussian_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) return {};
  return q_pochhammer(n).exact_div(q_pochhammer(m) * q_pochhammer(n - m));
}

LaurentPoly supernomial(int m, int l) {
  if (m < 0 || l < -m || l > m) {
    std::ostringstream os;
    os << "supernomial: need 0 <= |l| <= m, got m=" << m << ", l=" << l;
    throw FormulaError(os.str());
  }
  LaurentPoly s;
  for (int nu = 0; nu <= m; ++nu) {
    LaurentPoly b1 = gaussian_binomial(m, nu);
    LaurentPoly b2 = gaussian_binomial(nu, m - l - nu);
    if (b1.is_zero() || b2.is_zero()) continue;
    const int e = (nu + l - m) * (nu + l) + nu * (nu - m);
    s += (b1 * b2).shifted(e);
  }
  return s;
}

Series3 fermionic_level1(int q_max) {
  Series3 out(q_max);
  PochhammerCache poch(q_max);
  for (int np = 0; np * np <= q_max; ++np) {
    for (int n0 = 0; n0 * n0 <= q_max; ++n0) {
      for (int nm = 0; nm * nm <= q_max; ++nm) {
        const int e = np * np + n0 * n0 + nm * nm + np * n0 + n0 * nm;
        if (e > q_max) continue;
        add_shifted(out, poch.product({np, n0, nm}), e, 2 * (np - nm), np + n0 + nm);
      }
    }
  }
  return out;
}

Series3 fused_character_level1(int q_max) {
  Series3 out(q_max);
  for (int m = 0; m <= q_max; ++m) {
    const Series3 poch = pochhammer_inverse(m, q_max);
    for (int l = -m; l <= m; ++l) {
      LaurentPoly term = supernomial(m, l).shifted(m * m);
      if (term.is_zero()) continue;
      if (term.min_exponent() < 0)
        throw std::logic_error("fused_character_level1: negative q exponent after q^{m^2} prefactor");
      accumulate_product(out, term, poch, 2 * l, m);
    }
  }
  return out;
}

Series3 fermionic_level_k(int k, int q_max) {
  if (k < 1) throw FormulaError("fermionic_level_k: level must be >= 1");
  // Each diagonal block contributes at least |n|, so every vector with
  // n A n / 2 <= q_max is a candidate.
  const auto vecs = level_vectors(k, q_max);
  auto half_a = [&](const std::vector<int>& n) {
    int s = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s += n[i] * n[j] * std::min(i + 1, j + 1);
    return s;
  };
  auto cross_b = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s += x[i] * y[j] * std::max(0, (i + 1) + (j + 1) - k);
    return s;
  };
  auto weighted = [&](const std::vector<int>& n) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += (i + 1) * n[i];
    return s;
  };

  Series3 out(q_max);
  PochhammerCache poch(q_max);
  std::vector<int> quad(vecs.size());
  for (size_t i = 0; i < vecs.size(); ++i) quad[i] = half_a(vecs[i]);

  for (size_t ip = 0; ip < vecs.size(); ++ip) {
    for (size_t i0 = 0; i0 < vecs.size(); ++i0) {
      const int e_p0 = quad[ip] + quad[i0];
      if (e_p0 > q_max) continue;
      const int b_p0 = cross_b(vecs[ip], vecs[i0]);
      if (e_p0 + b_p0 > q_max) continue;
      for (size_t im = 0; im < vecs.size(); ++im) {
        const int e = e_p0 + b_p0 + quad[im] + cross_b(vecs[i0], vecs[im]);
        if (e > q_max) continue;
        std::vector<int> ns;
        for (const auto* v : {&vecs[ip], &vecs[i0], &vecs[im]}) ns.insert(ns.end(), v->begin(), v->end());
        const int wp = weighted(vecs[ip]);
        const int w0 = weighted(vecs[i0]);
        const int wm = weighted(vecs[im]);
        add_shifted(out, poch.product(ns), e, 2 * (wp - wm), wp + w0 + wm);
      }
    }
  }
  return out;
}

Series3 bosonic_level1(int q_max) {
  const Series3 poch = pochhammer_inverse(kPochhammerInfinity, q_max);
  LaurentPoly unit = LaurentPoly::constant(1);
  Series3 out(q_max);
  for (int n = 0; n * n <= q_max; ++n) {
    accumulate_product(out, unit.shifted(n * n), poch, 2 * n, 0);
    if (n != 0) accumulate_product(out, unit.shifted(n * n), poch, -2 * n, 0);
  }
  return out;
}

GramMatrix::GramMatrix(std::vector<std::vector<int>> entries, std::vector<int> z_weights,
                       std::vector<int> u_weights)
    : entries_(std::move(entries)), z_weights_(std::move(z_weights)), u_weights_(std::move(u_weights)) {
  const size_t n = entries_.size();
  if (z_weights_.size() != n || u_weights_.size() != n)
    throw FormulaError("GramMatrix: weight vectors must match the matrix size");
  for (size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw FormulaError("GramMatrix: matrix is not square");
    if (entries_[i][i] <= 0 || entries_[i][i] % 2 != 0)
      throw FormulaError("GramMatrix: diagonal entries must be positive and even");
    if (z_weights_[i] % 2 != 0) throw FormulaError("GramMatrix: z-weights must be even");
    if (u_weights_[i] <= 0) throw FormulaError("GramMatrix: u-weights must be positive");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (entries_[i][j] != entries_[j][i]) throw FormulaError("GramMatrix: matrix is not symmetric");
}

std::vector<BigInt> GramMatrix::leading_minors() const {
  std::vector<BigInt> minors;
  for (int j = 1; j <= size(); ++j) {
    std::vector<std::vector<Rational>> sub(j, std::vector<Rational>(j));
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) sub[r][c] = entries_[r][c];
    Rational d = determinant(std::move(sub));
    minors.push_back(d.get_num());  // integer matrix, so d is an integer
  }
  return minors;
}

bool GramMatrix::is_positive_definite() const {
  for (const auto& m : leading_minors())
    if (m <= 0) return false;
  return true;
}

GramMatrix gram_matrix_Qk(int k) {
  if (k < 1) throw FormulaError("gram_matrix_Qk: level must be >= 1");
  const int n = 3 * k;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::vector<int> z(n), u(n);
  auto e_idx = [&](int l) { return l - 1; };
  auto h_idx = [&](int l) { return k + l - 1; };
  auto f_idx = [&](int l) { return 2 * k + l - 1; };
  for (int i = 1; i <= k; ++i) {
    z[e_idx(i)] = 2 * i;
    z[h_idx(i)] = 0;
    z[f_idx(i)] = -2 * i;
    u[e_idx(i)] = u[h_idx(i)] = u[f_idx(i)] = i;
    for (int j = 1; j <= k; ++j) {
      const int a = 2 * std::min(i, j);
      const int b = std::max(0, i + j - k);
      m[e_idx(i)][e_idx(j)] = m[h_idx(i)][h_idx(j)] = m[f_idx(i)][f_idx(j)] = a;
      m[e_idx(i)][h_idx(j)] = m[h_idx(j)][e_idx(i)] = b;
      m[h_idx(i)][f_idx(j)] = m[f_idx(j)][h_idx(i)] = b;
    }
  }
  return GramMatrix(std::move(m), std::move(z), std::move(u));
}

Series3 principal_char(const GramMatrix& gram, int q_max) {
  if (!gram.is_positive_definite()) throw FormulaError("principal_char: Gram matrix is not positive-definite");
  const int n = gram.size();

  // schur[j]: the quadratic form on the first j coordinates obtained by
  // minimising the full form over the remaining (real) coordinates. It is a
  // lower bound for every completion of a fixed prefix.
  std::vector<std::vector<std::vector<Rational>>> schur(n + 1);
  for (int j = 1; j <= n; ++j) {
    const int r = n - j;
    std::vector<std::vector<Rational>> s(j, std::vector<Rational>(j));
    for (int a = 0; a < j; ++a)
      for (int b = 0; b < j; ++b) s[a][b] = gram(a, b);
    if (r > 0) {
      std::vector<std::vector<Rational>> rr(r, std::vector<Rational>(r));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) rr[a][b] = gram(j + a, j + b);
      const auto rr_inv = inverse(std::move(rr));
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < j; ++b) {
          Rational acc = 0;
          for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y) acc += gram(a, j + x) * rr_inv[x][y] * gram(j + y, b);
          s[a][b] -= acc;
        }
    }
    schur[j] = std::move(s);
  }
  auto bound_on_prefix = [&](const std::vector<int>& v, int j) {
    Rational acc = 0;
    for (int a = 0; a < j; ++a)
      for (int b = 0; b < j; ++b) acc += schur[j][a][b] * v[a] * v[b];
    return Rational(acc / 2);
  };

  Series3 out(q_max);
  PochhammerCache poch(q_max);
  std::vector<int> v(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      int twice = 0;
      int z = 0;
      int u = 0;
      for (int a = 0; a < n; ++a) {
        z += gram.z_weights()[a] * v[a];
        u += gram.u_weights()[a] * v[a];
        for (int b = 0; b < n; ++b) twice += gram(a, b) * v[a] * v[b];
      }
      if (twice / 2 <= q_max) add_shifted(out, poch.product(v), twice / 2, z, u);
      return;
    }
    // The bound is a convex quadratic in v[j]; walk up until it exceeds
    // q_max on its increasing branch.
    for (int x = 0;; ++x) {
      v[j] = x;
      const Rational cur = bound_on_prefix(v, j + 1);
      if (cur <= q_max) {
        rec(j + 1);
        continue;
      }
      v[j] = x + 1;
      const Rational next = bound_on_prefix(v, j + 1);
      if (next >= cur) break;
    }
    v[j] = 0;
  };
  rec(0);
  return out;
}

}  // namespace pbwchar
