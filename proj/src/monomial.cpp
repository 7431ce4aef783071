#include "pbwchar/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace pbwchar {

namespace {

constexpr int kF = 0;
constexpr int kH = 1;
constexpr int kE = 2;

// Conditions (a)-(d) at index i for level k.
bool ehf_holds_at(const OrderedMonomial& m, int i, int k) {
  return m.a(i) + m.a(i + 1) + m.b(i + 1) <= k &&
         m.a(i) + m.b(i + 1) + m.c(i + 1) <= k &&
         m.a(i) + m.b(i) + m.c(i + 1) <= k &&
         m.b(i) + m.c(i) + m.c(i + 1) <= k;
}

// Conditions (a')-(d') at index i.
bool ehf_prime_triangles_hold_at(const OrderedMonomial& m, int i) {
  return m.a(i) + m.a(i + 1) + m.b(i + 1) <= 1 &&
         m.a(i) + m.b(i) + m.b(i + 1) <= 1 &&
         m.b(i) + m.b(i + 1) + m.c(i + 1) <= 1 &&
         m.b(i) + m.c(i) + m.c(i + 1) <= 1;
}

bool hexagon_holds_at(const OrderedMonomial& m, int i) {
  return m.b(i) + m.a(i + 1) + m.c(i + 2) <= 2;
}

bool holds_at(const OrderedMonomial& m, int i, const ConstraintProfile& p) {
  if (p.variant == ConstraintProfile::Variant::Ehf) return ehf_holds_at(m, i, p.level);
  return ehf_prime_triangles_hold_at(m, i) && hexagon_holds_at(m, i);
}

void check_profile(const ConstraintProfile& p) {
  if (p.level < 1) throw MonomialError("constraint profile: level must be >= 1");
  if (p.variant == ConstraintProfile::Variant::EhfPrime && p.level != 1)
    throw MonomialError("constraint profile: ehf' is defined at level 1 only");
}

struct Enumerator {
  const ConstraintProfile& profile;
  int q_max;
  std::vector<OrderedMonomial::Triple> exps;
  std::vector<OrderedMonomial> out;

  // Checks every condition whose indices are all <= i (1-based).
  bool prefix_ok(int i) const {
    OrderedMonomial m(exps);
    if (i >= 2 && !holds_pairwise(m, i - 1)) return false;
    if (profile.variant == ConstraintProfile::Variant::EhfPrime && i >= 3 &&
        !hexagon_holds_at(m, i - 2))
      return false;
    return true;
  }

  bool holds_pairwise(const OrderedMonomial& m, int i) const {
    if (profile.variant == ConstraintProfile::Variant::Ehf) return ehf_holds_at(m, i, profile.level);
    return ehf_prime_triangles_hold_at(m, i);
  }

  void run(int i, int budget) {
    if (i > budget) {
      OrderedMonomial m(exps);
      if (is_admissible(m, profile)) out.push_back(std::move(m));
      return;
    }
    const int cap = budget / i;
    for (int a = 0; a <= cap; ++a) {
      for (int b = 0; a + b <= cap; ++b) {
        for (int c = 0; a + b + c <= cap; ++c) {
          exps.push_back({a, b, c});
          if (prefix_ok(i)) run(i + 1, budget - i * (a + b + c));
          exps.pop_back();
        }
      }
    }
  }
};

}  // namespace

OrderedMonomial::OrderedMonomial(std::vector<Triple> exps) : exps_(std::move(exps)) {
  for (const auto& t : exps_)
    for (int v : t)
      if (v < 0) throw MonomialError("OrderedMonomial: negative exponent");
  trim();
}

void OrderedMonomial::trim() {
  while (!exps_.empty() && exps_.back() == Triple{0, 0, 0}) exps_.pop_back();
}

void OrderedMonomial::set(int i, int slot, int value) {
  if (i < 1 || slot < 0 || slot > 2 || value < 0)
    throw MonomialError("OrderedMonomial::set: bad index or exponent");
  if (i > support()) exps_.resize(i, Triple{0, 0, 0});
  exps_[i - 1][slot] = value;
  trim();
}

int OrderedMonomial::degree() const {
  int s = 0;
  for (const auto& t : exps_) s += t[0] + t[1] + t[2];
  return s;
}

TriDegree OrderedMonomial::tridegree() const {
  TriDegree d;
  for (int i = 1; i <= support(); ++i) {
    const auto& t = exps_[i - 1];
    const int n = t[kF] + t[kH] + t[kE];
    d.q += i * n;
    d.u += n;
    d.z += 2 * (t[kE] - t[kF]);
  }
  return d;
}

std::string to_string(const OrderedMonomial& m) {
  if (m.support() == 0) return "1";
  static constexpr char kLetters[3] = {'f', 'h', 'e'};
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m.support(); ++i) {
    for (int slot = 0; slot < 3; ++slot) {
      const int e = m.exponents()[i - 1][slot];
      if (e == 0) continue;
      if (!first) os << ' ';
      first = false;
      os << kLetters[slot] << "[-" << i << "]^" << e;
    }
  }
  return os.str();
}

ConstraintProfile ConstraintProfile::ehf(int k) {
  if (k < 1) throw MonomialError("constraint profile: level must be >= 1");
  return {Variant::Ehf, k};
}

bool is_admissible(const OrderedMonomial& m, const ConstraintProfile& p) {
  check_profile(p);
  for (int i = 1; i <= m.support() + 1; ++i)
    if (!holds_at(m, i, p)) return false;
  return true;
}

std::vector<OrderedMonomial> enumerate(const ConstraintProfile& p, int q_max) {
  check_profile(p);
  if (q_max < 0) throw MonomialError("enumerate: negative q_max");
  Enumerator en{p, q_max, {}, {}};
  en.run(1, q_max);
  std::sort(en.out.begin(), en.out.end(), [](const OrderedMonomial& x, const OrderedMonomial& y) {
    const int qx = x.tridegree().q;
    const int qy = y.tridegree().q;
    if (qx != qy) return qx < qy;
    return lex_compare(x, y) < 0;
  });
  return en.out;
}

Series3 character_of(const ConstraintProfile& p, int q_max) {
  Series3 s(q_max);
  for (const auto& m : enumerate(p, q_max)) s.add_term(m.tridegree(), 1);
  return s;
}

std::strong_ordering lex_compare(const OrderedMonomial& m1, const OrderedMonomial& m2) {
  if (auto cmp = m1.degree() <=> m2.degree(); cmp != 0) return cmp;
  const int n = std::max(m1.support(), m2.support());
  for (int i = 1; i <= n; ++i) {
    for (int slot : {kE, kH, kF}) {
      const int x = i <= m1.support() ? m1.exponents()[i - 1][slot] : 0;
      const int y = i <= m2.support() ? m2.exponents()[i - 1][slot] : 0;
      // Smaller exponent is the larger monomial.
      if (x != y) return y <=> x;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering reverse_lex_compare(const OrderedMonomial& m1, const OrderedMonomial& m2) {
  if (auto cmp = m1.degree() <=> m2.degree(); cmp != 0) return cmp;
  const int n = std::max(m1.support(), m2.support());
  for (int i = n; i >= 1; --i) {
    for (int slot : {kF, kH, kE}) {
      const int x = i <= m1.support() ? m1.exponents()[i - 1][slot] : 0;
      const int y = i <= m2.support() ? m2.exponents()[i - 1][slot] : 0;
      if (x != y) return y <=> x;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const OrderedMonomial& m1, const OrderedMonomial& m2, MonomialOrder order) {
  return order == MonomialOrder::FirstDifference ? lex_compare(m1, m2) : reverse_lex_compare(m1, m2);
}

OrderedMonomial phi_forward(const OrderedMonomial& m) {
  if (!is_admissible(m, ConstraintProfile::ehf(1)))
    throw MonomialError("phi_forward: input is not an ehf monomial at level 1");
  OrderedMonomial cur = m;
  for (;;) {
    int j = 0;
    for (int i = 1; i <= cur.support(); ++i) {
      if (cur.a(i) + cur.b(i) + cur.b(i + 1) >= 2 || cur.b(i) + cur.b(i + 1) + cur.c(i + 1) >= 2) {
        j = i;
        break;
      }
    }
    if (j == 0) break;
    if (cur.b(j) != 1 || cur.b(j + 1) != 1 || cur.a(j) != 0 || cur.c(j + 1) != 0)
      throw std::logic_error("phi_forward: violation does not have the h_{-j} h_{-j-1} shape");
    cur.set(j, kF, 1);
    cur.set(j + 1, kE, 1);
    cur.set(j, kH, 0);
    cur.set(j + 1, kH, 0);
  }
  if (!is_admissible(cur, ConstraintProfile::ehf_prime()))
    throw std::logic_error("phi_forward: result is not an ehf' monomial");
  return cur;
}

OrderedMonomial phi_inverse(const OrderedMonomial& m) {
  if (!is_admissible(m, ConstraintProfile::ehf_prime()))
    throw MonomialError("phi_inverse: input is not an ehf' monomial");
  OrderedMonomial cur = m;
  for (;;) {
    int j = 0;
    for (int i = 1; i <= cur.support(); ++i) {
      if (cur.a(i) + cur.b(i) + cur.c(i + 1) >= 2 || cur.a(i) + cur.b(i + 1) + cur.c(i + 1) >= 2) {
        j = i;
        break;
      }
    }
    if (j == 0) break;
    if (cur.a(j) != 1 || cur.c(j + 1) != 1 || cur.b(j) != 0 || cur.b(j + 1) != 0)
      throw std::logic_error("phi_inverse: violation does not have the f_{-j} e_{-j-1} shape");
    cur.set(j, kF, 0);
    cur.set(j + 1, kE, 0);
    cur.set(j, kH, 1);
    cur.set(j + 1, kH, 1);
  }
  if (!is_admissible(cur, ConstraintProfile::ehf(1)))
    throw std::logic_error("phi_inverse: result is not an ehf monomial");
  return cur;
}

}  // namespace pbwchar
