#include "pbwchar/sl2.hpp"

#include <sstream>
#include <stdexcept>

namespace pbwchar {

AdjointPolynomial AdjointPolynomial::monomial(int e, int h, int f, const BigInt& c) {
  if (e < 0 || h < 0 || f < 0) throw std::invalid_argument("AdjointPolynomial: negative exponent");
  AdjointPolynomial p;
  p.add_term({e, h, f}, c);
  return p;
}

BigInt AdjointPolynomial::coeff(const Exponents& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void AdjointPolynomial::add_term(const Exponents& x, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AdjointPolynomial& AdjointPolynomial::operator+=(const AdjointPolynomial& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

AdjointPolynomial& AdjointPolynomial::operator*=(const AdjointPolynomial& o) {
  AdjointPolynomial out;
  for (const auto& [x, c] : terms_)
    for (const auto& [y, d] : o.terms_) out.add_term({x[0] + y[0], x[1] + y[1], x[2] + y[2]}, c * d);
  *this = std::move(out);
  return *this;
}

AdjointPolynomial& AdjointPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, v] : terms_) v *= c;
  return *this;
}

AdjointPolynomial AdjointPolynomial::primitive() const {
  if (terms_.empty()) return *this;
  BigInt g = 0;
  for (const auto& [x, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (terms_.begin()->second < 0) g = -g;
  AdjointPolynomial out;
  for (const auto& [x, c] : terms_) out.terms_.emplace(x, c / g);
  return out;
}

int AdjointPolynomial::degree() const {
  int d = -1;
  for (const auto& [x, c] : terms_) {
    const int t = x[0] + x[1] + x[2];
    if (d >= 0 && t != d) throw std::logic_error("AdjointPolynomial: not homogeneous");
    d = t;
  }
  return d;
}

AdjointPolynomial operator+(AdjointPolynomial a, const AdjointPolynomial& b) { return a += b; }
AdjointPolynomial operator*(AdjointPolynomial a, const AdjointPolynomial& b) { return a *= b; }
AdjointPolynomial operator*(const BigInt& c, AdjointPolynomial a) { return a *= c; }

AdjointPolynomial pow(const AdjointPolynomial& p, int n) {
  AdjointPolynomial out = AdjointPolynomial::monomial(0, 0, 0);
  for (int i = 0; i < n; ++i) out *= p;
  return out;
}

std::string to_string(const AdjointPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt mag = abs(c);
    const bool bare = (x[0] + x[1] + x[2]) > 0;
    if (mag != 1 || !bare) os << mag.get_str();
    static constexpr char kSym[3] = {'e', 'h', 'f'};
    for (int s = 0; s < 3; ++s) {
      if (x[s] == 0) continue;
      os << kSym[s];
      if (x[s] > 1) os << '^' << x[s];
    }
  }
  return os.str();
}

AdjointPolynomial lower_relation(const AdjointPolynomial& p) {
  AdjointPolynomial out;
  for (const auto& [x, c] : p.terms()) {
    const auto [ne, nh, nf] = x;
    // d(e^ne) = ne e^{ne-1} (-h)
    if (ne > 0) out.add_term({ne - 1, nh + 1, nf}, -c * ne);
    // d(h^nh) = nh h^{nh-1} (2f)
    if (nh > 0) out.add_term({ne, nh - 1, nf + 1}, 2 * c * nh);
  }
  return out;
}

std::vector<AdjointPolynomial> lowering_orbit(int k) {
  if (k < 1) throw std::invalid_argument("lowering_orbit: level must be >= 1");
  std::vector<AdjointPolynomial> orbit;
  AdjointPolynomial cur = AdjointPolynomial::monomial(k + 1, 0, 0);
  for (int step = 0; step < 2 * k + 3; ++step) {
    if (cur.is_zero()) throw std::logic_error("lowering_orbit: orbit vanished early");
    orbit.push_back(cur.primitive());
    cur = lower_relation(cur);
  }
  if (!cur.is_zero()) throw std::logic_error("lowering_orbit: D^{2k+3} e^{k+1} is nonzero");
  return orbit;
}

Matrix4 zero_matrix() {
  Matrix4 m;
  for (auto& row : m)
    for (auto& x : row) x = 0;
  return m;
}

Matrix4 unit_matrix(int row, int col) {
  if (row < 1 || row > 4 || col < 1 || col > 4) throw std::invalid_argument("unit_matrix: index out of range");
  Matrix4 m = zero_matrix();
  m[row - 1][col - 1] = 1;
  return m;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 m = zero_matrix();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 4; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 m = a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] += b[i][j];
  return m;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
  Matrix4 m = a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] -= b[i][j];
  return m;
}

Matrix4 operator*(const Rational& c, const Matrix4& a) {
  Matrix4 m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

Matrix4 commutator(const Matrix4& a, const Matrix4& b) { return a * b - b * a; }

Rational max_abs_entry(const Matrix4& a) {
  Rational best = 0;
  for (const auto& row : a)
    for (const auto& x : row) best = std::max(best, Rational(abs(x)));
  return best;
}

namespace {

// The general element of the subalgebra, parametrised by its upper-left
// block [[x, y], [z, -x]].
Matrix4 subalgebra_element(const Rational& x, const Rational& y, const Rational& z, const Rational& s,
                           const Rational& eps) {
  const Rational s2 = s * s;
  Matrix4 m = zero_matrix();
  m[0][0] = x;
  m[0][1] = y;
  m[0][2] = -x * eps / s;
  m[0][3] = -y * eps / s2;
  m[1][0] = z;
  m[1][1] = -x;
  m[1][2] = -z * eps / s;
  m[1][3] = x * eps / s2;
  return m;
}

}  // namespace

DegenTriple degeneration_matrices(const Rational& s) {
  if (s <= 0 || s > 1) throw std::invalid_argument("degeneration_matrices: need 0 < s <= 1");
  DegenTriple t;
  t.s = s;
  t.epsilon = 1 - s * s;
  t.e = subalgebra_element(0, 1, 0, s, t.epsilon);
  t.h = subalgebra_element(1, 0, 0, s, t.epsilon);
  t.f = subalgebra_element(0, 0, 1, s, t.epsilon);
  return t;
}

bool satisfies_sl2_relations(const DegenTriple& t) {
  for (const Matrix4* m : {&t.e, &t.h, &t.f}) {
    Rational trace = 0;
    for (int i = 0; i < 4; ++i) trace += (*m)[i][i];
    if (trace != 0) return false;
    for (int row = 2; row < 4; ++row)
      for (int col = 0; col < 4; ++col)
        if ((*m)[row][col] != 0) return false;
  }
  return commutator(t.h, t.e) == Rational(2) * t.e && commutator(t.h, t.f) == Rational(-2) * t.f &&
         commutator(t.e, t.f) == t.h;
}

DegenLimitReport degeneration_limits(const std::vector<Rational>& s_sequence) {
  DegenLimitReport report;
  const Matrix4 e_target = unit_matrix(1, 4);
  const Matrix4 h_target = unit_matrix(2, 4);
  const Matrix4 f_target = Rational(-1) * unit_matrix(2, 3);
  for (const auto& s : s_sequence) {
    const DegenTriple t = degeneration_matrices(s);
    DegenLimitRow row;
    row.s = s;
    row.e_residual = max_abs_entry(Rational(t.epsilon - 1) * t.e - e_target);
    row.h_residual = max_abs_entry(Rational(1 - t.epsilon) * t.h - h_target);
    row.f_residual = max_abs_entry(s * t.f - f_target);
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      if (!(row.e_residual < prev.e_residual && row.h_residual < prev.h_residual &&
            row.f_residual < prev.f_residual))
        report.monotone = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace pbwchar
