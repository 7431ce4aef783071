#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbwchar/sl2.hpp"

using namespace pbwchar;

namespace {

using P = AdjointPolynomial;

P random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 3), coeff(-4, 4), n(1, 4);
  P p;
  for (int i = n(rng); i > 0; --i) p.add_term({exp(rng), exp(rng), exp(rng)}, coeff(rng));
  return p;
}

bool proportional(const P& a, const P& b) { return a.primitive() == b.primitive() || a.primitive() == (BigInt(-1) * b).primitive(); }

}  // namespace

TEST_CASE("lowering derivation") {
  CHECK(lower_relation(P::e()) == BigInt(-1) * P::h());
  CHECK(lower_relation(P::h()) == BigInt(2) * P::f());
  CHECK(lower_relation(P::f()).is_zero());
  CHECK(lower_relation(pow(P::e(), 2)) == P::monomial(1, 1, 0, -2));
  CHECK(lower_relation(lower_relation(pow(P::e(), 2))) == P::monomial(0, 2, 0, 2) + P::monomial(1, 0, 1, -4));
  for (int k = 0; k <= 6; ++k) CHECK(lower_relation(pow(P::f(), k + 1)).is_zero());
}

TEST_CASE("D is a derivation") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const P p = random_poly(rng), q = random_poly(rng);
    CHECK(lower_relation(p * q) == lower_relation(p) * q + p * lower_relation(q));
    CHECK(lower_relation(p + q) == lower_relation(p) + lower_relation(q));
  }
}

TEST_CASE("lowering orbit") {
  const auto o1 = lowering_orbit(1);
  REQUIRE(o1.size() == 5);
  CHECK(o1[0] == pow(P::e(), 2));
  CHECK(proportional(o1[1], P::monomial(1, 1, 0)));
  CHECK(proportional(o1[2], P::monomial(1, 0, 1, 2) + P::monomial(0, 2, 0, -1)));
  CHECK(proportional(o1[3], P::monomial(0, 1, 1)));
  CHECK(proportional(o1[4], pow(P::f(), 2)));
  for (int k = 1; k <= 5; ++k) {
    const auto orbit = lowering_orbit(k);
    CHECK(orbit.size() == static_cast<size_t>(2 * k + 3));
    CHECK(orbit.front() == pow(P::e(), k + 1));
    CHECK(proportional(orbit.back(), pow(P::f(), k + 1)));
    for (const auto& p : orbit) {
      CHECK(p.degree() == k + 1);
      CHECK(p == p.primitive());
    }
    P cur = pow(P::e(), k + 1);
    for (int i = 0; i < 2 * k + 3; ++i) cur = lower_relation(cur);
    CHECK(cur.is_zero());
  }
  CHECK_THROWS(lowering_orbit(0));
}

TEST_CASE("degeneration matrices") {
  const auto t1 = degeneration_matrices(1);
  CHECK(t1.epsilon == 0);
  CHECK(t1.e == unit_matrix(1, 2));
  CHECK(t1.f == unit_matrix(2, 1));
  CHECK(t1.h == unit_matrix(1, 1) - unit_matrix(2, 2));

  const auto t = degeneration_matrices(Rational(1, 2));
  CHECK(t.epsilon == Rational(3, 4));
  CHECK(t.e[0][3] == -3);
  CHECK((Rational(t.epsilon - 1) * t.e)[0][3] == Rational(3, 4));

  for (const Rational s : {Rational(1), Rational(2, 3), Rational(1, 2), Rational(1, 3), Rational(1, 10)})
    CHECK(satisfies_sl2_relations(degeneration_matrices(s)));

  Matrix4 bad = t.e;
  bad[0][0] += 1;
  CHECK_FALSE(satisfies_sl2_relations({t.s, t.epsilon, bad, t.h, t.f}));

  CHECK_THROWS_AS(degeneration_matrices(0), std::invalid_argument);
  CHECK_THROWS_AS(degeneration_matrices(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(degeneration_matrices(-1), std::invalid_argument);
}

TEST_CASE("degeneration limits") {
  const auto report =
      degeneration_limits({Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)});
  CHECK(report.monotone);
  REQUIRE(report.rows.size() == 4);
  for (const auto& r : report.rows) {
    CHECK(r.e_residual <= 2 * r.s);
    CHECK(r.h_residual <= 2 * r.s);
    CHECK(r.f_residual <= 2 * r.s);
  }
  const auto tenth = degeneration_limits({Rational(1, 10)});
  CHECK(tenth.rows[0].e_residual <= Rational(2, 10));

  // at s = 1 the scale factors are -1, 1 and 1
  const auto t = degeneration_matrices(1);
  CHECK(Rational(t.epsilon - 1) * t.e == Rational(-1) * t.e);
  CHECK(Rational(1 - t.epsilon) * t.h == t.h);
  CHECK(t.s * t.f == t.f);

  CHECK_FALSE(degeneration_limits({Rational(1, 4), Rational(1, 2)}).monotone);
}

TEST_CASE("matrix helpers") {
  CHECK(commutator(unit_matrix(1, 2), unit_matrix(2, 1)) == unit_matrix(1, 1) - unit_matrix(2, 2));
  CHECK(max_abs_entry(Rational(-5, 2) * unit_matrix(3, 4)) == Rational(5, 2));
  CHECK(unit_matrix(1, 2) * unit_matrix(2, 3) == unit_matrix(1, 3));
  CHECK_THROWS(unit_matrix(0, 1));
}
