#include "pbwchar/series.hpp"

#include <sstream>

namespace pbwchar {

std::string to_string(const TriDegree& d) {
  std::ostringstream os;
  os << "(q=" << d.q << ", z=" << d.z << ", u=" << d.u << ")";
  return os.str();
}

Series3::Series3(int q_max) : q_max_(q_max) {
  if (q_max < 0) throw SeriesError("Series3: negative truncation bound");
}

Series3 Series3::one(int q_max) { return monomial(q_max, {0, 0, 0}, 1); }

Series3 Series3::monomial(int q_max, TriDegree d, const BigInt& c) {
  Series3 s(q_max);
  s.add_term(d, c);
  return s;
}

BigInt Series3::coeff(const TriDegree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Series3::add_term(const TriDegree& d, const BigInt& c) {
  if (d.q < 0 || d.u < 0) throw SeriesError("Series3: negative q or u grade at " + to_string(d));
  if (d.z % 2 != 0) throw SeriesError("Series3: odd z grade at " + to_string(d));
  if (d.q > q_max_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series3::check_same_bound(const Series3& o, const char* op) const {
  if (q_max_ != o.q_max_) {
    std::ostringstream os;
    os << "Series3::" << op << ": mismatched truncation bounds " << q_max_ << " vs " << o.q_max_;
    throw SeriesError(os.str());
  }
}

Series3& Series3::operator+=(const Series3& o) {
  check_same_bound(o, "add");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Series3& Series3::operator-=(const Series3& o) {
  check_same_bound(o, "sub");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Series3& Series3::operator*=(const Series3& o) {
  check_same_bound(o, "mul");
  Series3 out(q_max_);
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : o.terms_) {
      if (da.q + db.q > q_max_) break;  // o.terms_ is sorted by q first
      out.add_term(da + db, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Series3 Series3::truncated(int m) const {
  if (m > q_max_) throw SeriesError("Series3::truncated: bound exceeds q_max");
  Series3 out(m);
  for (const auto& [d, c] : terms_)
    if (d.q <= m) out.terms_.emplace(d, c);
  return out;
}

Series3 Series3::at_u_equals_one() const {
  Series3 out(q_max_);
  for (const auto& [d, c] : terms_) out.add_term({d.q, d.z, 0}, c);
  return out;
}

Series3 Series3::z_reflected() const {
  Series3 out(q_max_);
  for (const auto& [d, c] : terms_) out.add_term({d.q, -d.z, d.u}, c);
  return out;
}

Series3 operator+(Series3 a, const Series3& b) { return a += b; }
Series3 operator-(Series3 a, const Series3& b) { return a -= b; }
Series3 operator*(const Series3& a, const Series3& b) {
  Series3 out = a;
  out *= b;
  return out;
}

Series3 add(const Series3& a, const Series3& b) { return a + b; }
Series3 mul(const Series3& a, const Series3& b) { return a * b; }

Series3 invert_unit(const Series3& a) {
  BigInt c0;
  for (const auto& [d, c] : a.terms()) {
    if (d.q != 0) break;
    if (d.z != 0 || d.u != 0)
      throw SeriesError("invert_unit: constant term carries z or u content at " + to_string(d));
    c0 = c;
  }
  if (c0 != 1 && c0 != -1) throw SeriesError("invert_unit: constant term is not a unit");

  // a = c0 - t with t of positive q-order, so 1/a = c0 * sum_j (c0 t)^j.
  Series3 ct = Series3::monomial(a.q_max(), {0, 0, 0}, 1) - a * Series3::monomial(a.q_max(), {0, 0, 0}, c0);
  Series3 result = Series3::one(a.q_max());
  Series3 power = Series3::one(a.q_max());
  for (int j = 1; j <= a.q_max(); ++j) {
    power *= ct;
    if (power.is_zero()) break;
    result += power;
  }
  if (c0 == -1) result = result * Series3::monomial(a.q_max(), {0, 0, 0}, -1);
  return result;
}

Series3 pochhammer_inverse(int n, int q_max) {
  if (n < 0 && n != kPochhammerInfinity)
    throw SeriesError("pochhammer_inverse: negative length");
  const int top = (n == kPochhammerInfinity) ? q_max : n;
  // Multiply by 1/(1 - q^j) in place: c[i] += c[i - j].
  std::vector<BigInt> c(q_max + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= top && j <= q_max; ++j)
    for (int i = j; i <= q_max; ++i) c[i] += c[i - j];
  Series3 out(q_max);
  for (int i = 0; i <= q_max; ++i) out.add_term({i, 0, 0}, c[i]);
  return out;
}

SeriesDiff first_difference(const Series3& a, const Series3& b) {
  SeriesDiff diff;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      return {true, ia->first, ia->second, 0};
    }
    if (ia == a.terms().end() || ib->first < ia->first) {
      return {true, ib->first, 0, ib->second};
    }
    if (ia->second != ib->second) return {true, ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  if (a.q_max() != b.q_max()) {
    diff.differs = true;
    diff.at = {std::min(a.q_max(), b.q_max()) + 1, 0, 0};
  }
  return diff;
}

std::string to_string(const Series3& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (d.q) os << "*q^" << d.q;
    if (d.z) os << "*z^" << d.z;
    if (d.u) os << "*u^" << d.u;
  }
  return os.str();
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

BigInt LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw SeriesError("LaurentPoly: zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw SeriesError("LaurentPoly: zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
  if (o.is_zero()) throw SeriesError("LaurentPoly: division by zero");
  const int lead_e = o.max_exponent();
  const BigInt lead_c = o.coeff(lead_e);
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int lowest_quotient_e = is_zero() ? 0 : min_exponent() - o.min_exponent();
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - lead_e;
    if (e < lowest_quotient_e) break;
    const BigInt c = rem.coeff(rem.max_exponent());
    if (c % lead_c != 0) throw SeriesError("LaurentPoly: inexact division");
    LaurentPoly step = LaurentPoly::monomial(e, c / lead_c);
    quot += step;
    rem -= step * o;
  }
  if (!rem.is_zero()) throw SeriesError("LaurentPoly: inexact division");
  return quot;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e) os << "*q^" << e;
  }
  return os.str();
}

void accumulate_product(Series3& out, const LaurentPoly& p, const Series3& s, int z, int u) {
  for (const auto& [e, c] : p.terms()) {
    if (e > out.q_max()) break;
    for (const auto& [d, sc] : s.terms()) {
      if (d.z != 0 || d.u != 0) throw SeriesError("accumulate_product: factor must be u- and z-free");
      const int q = e + d.q;
      if (q < 0) throw SeriesError("accumulate_product: negative q exponent survives");
      if (q > out.q_max()) break;
      out.add_term({q, z, u}, c * sc);
    }
  }
}

}  // namespace pbwchar
