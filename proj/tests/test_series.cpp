#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbwchar/series.hpp"

using namespace pbwchar;

namespace {

Series3 q_poly(int q_max, std::initializer_list<int> coeffs) {
  Series3 s(q_max);
  int e = 0;
  for (int c : coeffs) s.add_term({e++, 0, 0}, c);
  return s;
}

// Partition counts p(n) by the standard recurrence over parts <= j.
std::vector<long> partition_counts(int n_max) {
  std::vector<long> p(n_max + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n_max; ++part)
    for (int n = part; n <= n_max; ++n) p[n] += p[n - part];
  return p;
}

Series3 random_series(std::mt19937& rng, int q_max) {
  std::uniform_int_distribution<int> coeff(-3, 3), q(0, q_max), zh(-2, 2), u(0, 3), n(0, 5);
  Series3 s(q_max);
  for (int i = n(rng); i > 0; --i) s.add_term({q(rng), 2 * zh(rng), u(rng)}, coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((q_poly(3, {1}) + q_poly(3, {-1})).is_zero());
  CHECK((q_poly(3, {1}) + q_poly(3, {1, 1}) - q_poly(3, {1})) == q_poly(3, {1, 1}));
  CHECK(add(q_poly(3, {1, 1}), q_poly(3, {0, 1})) == q_poly(3, {1, 2}));
  CHECK_THROWS_AS(add(Series3(2), Series3(3)), SeriesError);
}

TEST_CASE("multiplication") {
  CHECK(mul(q_poly(4, {1, 1}), q_poly(4, {1, -1})) == q_poly(4, {1, 0, -1}));
  const auto zq = Series3::monomial(4, {1, 2, 0});
  const auto zinvq = Series3::monomial(4, {1, -2, 0});
  CHECK(zq * zinvq == Series3::monomial(4, {2, 0, 0}));
  CHECK(invert_unit(q_poly(3, {1, -1})) * q_poly(3, {1, -1}) == Series3::one(3));
  // products beyond the bound are dropped
  CHECK(Series3::monomial(3, {2, 0, 0}) * Series3::monomial(3, {2, 0, 0}) == Series3(3));
  CHECK_THROWS_AS(mul(Series3(2), Series3(3)), SeriesError);
}

TEST_CASE("add_term validation") {
  Series3 s(3);
  CHECK_THROWS_AS(s.add_term({-1, 0, 0}, 1), SeriesError);
  CHECK_THROWS_AS(s.add_term({1, 1, 0}, 1), SeriesError);
  CHECK_THROWS_AS(s.add_term({1, 0, -1}, 1), SeriesError);
  s.add_term({4, 0, 0}, 1);
  CHECK(s.is_zero());
  s.add_term({1, 0, 0}, 2);
  s.add_term({1, 0, 0}, -2);
  CHECK(s.terms().empty());
}

TEST_CASE("invert_unit") {
  CHECK(invert_unit(q_poly(3, {1, -1})) == q_poly(3, {1, 1, 1, 1}));
  CHECK(invert_unit(q_poly(4, {1, -1, -1, 1})) == q_poly(4, {1, 1, 2, 2, 3}));
  CHECK(invert_unit(invert_unit(q_poly(3, {1, -1}))) == q_poly(3, {1, -1}));
  CHECK(invert_unit(q_poly(3, {-1})) == q_poly(3, {-1}));
  CHECK_THROWS_AS(invert_unit(q_poly(3, {2, 1})), SeriesError);
  CHECK_THROWS_AS(invert_unit(Series3(3)), SeriesError);
  Series3 bad(3);
  bad.add_term({0, 2, 0}, 1);
  CHECK_THROWS_AS(invert_unit(bad), SeriesError);
}

TEST_CASE("pochhammer_inverse") {
  CHECK(pochhammer_inverse(0, 5) == Series3::one(5));
  CHECK(pochhammer_inverse(1, 3) == q_poly(3, {1, 1, 1, 1}));
  CHECK(pochhammer_inverse(kPochhammerInfinity, 4) == q_poly(4, {1, 1, 2, 3, 5}));

  const int n_max = 20;
  const auto p = partition_counts(n_max);
  const Series3 inf = pochhammer_inverse(kPochhammerInfinity, n_max);
  for (int n = 0; n <= n_max; ++n) CHECK(inf.coeff({n, 0, 0}) == p[n]);

  // 1/(q)_n counts partitions into parts <= n
  for (int n = 0; n <= 6; ++n) {
    Series3 prod = Series3::one(10);
    for (int j = 1; j <= n; ++j) {
      Series3 f = Series3::one(10);
      f.add_term({j, 0, 0}, -1);
      prod *= f;
    }
    CHECK(pochhammer_inverse(n, 10) == invert_unit(prod));
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int q_max = 5;
    const auto a = random_series(rng, q_max), b = random_series(rng, q_max), c = random_series(rng, q_max);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Series3(q_max));
  }
}

TEST_CASE("inverse of random units") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    // a unit constant term without z/u content, anything above it
    Series3 a(6);
    const Series3 r = random_series(rng, 6);
    for (const auto& [d, c] : r.terms())
      if (d.q > 0) a.add_term(d, c);
    a.add_term({0, 0, 0}, trial % 2 ? 1 : -1);
    CHECK(a * invert_unit(a) == Series3::one(6));
  }
}

TEST_CASE("truncation is a ring map") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, 6), b = random_series(rng, 6);
    CHECK((a * b).truncated(3) == a.truncated(3) * b.truncated(3));
    CHECK((a + b).truncated(2) == a.truncated(2) + b.truncated(2));
  }
  CHECK_THROWS_AS(Series3(3).truncated(4), SeriesError);
}

TEST_CASE("specializations") {
  Series3 s(3);
  s.add_term({1, 2, 1}, 1);
  s.add_term({1, 2, 2}, 3);
  s.add_term({2, -2, 1}, 5);
  const Series3 u1 = s.at_u_equals_one();
  CHECK(u1.coeff({1, 2, 0}) == 4);
  CHECK(u1.coeff({2, -2, 0}) == 5);
  const Series3 r = s.z_reflected();
  CHECK(r.coeff({1, -2, 2}) == 3);
  CHECK(r.coeff({2, 2, 1}) == 5);
  CHECK(r.z_reflected() == s);
}

TEST_CASE("first_difference") {
  Series3 a(3), b(3);
  a.add_term({1, 0, 1}, 2);
  b.add_term({1, 0, 1}, 2);
  CHECK_FALSE(first_difference(a, b).differs);
  b.add_term({2, -2, 1}, 1);
  a.add_term({3, 0, 0}, 1);
  const auto d = first_difference(a, b);
  CHECK(d.differs);
  CHECK(d.at == TriDegree{2, -2, 1});
  CHECK(d.lhs == 0);
  CHECK(d.rhs == 1);
}

TEST_CASE("Laurent polynomials") {
  const auto p = LaurentPoly::monomial(-2) + LaurentPoly::constant(1);
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 0);
  const auto prod = p * (LaurentPoly::constant(1) - LaurentPoly::monomial(1));
  CHECK(prod.exact_div(p) == LaurentPoly::constant(1) - LaurentPoly::monomial(1));
  CHECK(p.shifted(3).coeff(1) == 1);
  CHECK_THROWS(LaurentPoly::monomial(2).exact_div(LaurentPoly::constant(1) + LaurentPoly::monomial(1)));

  // accumulate_product moves a Laurent factor into the (q, z, u) series
  Series3 out(4);
  accumulate_product(out, LaurentPoly::monomial(1, 2), Series3::one(4), 2, 1);
  CHECK(out.coeff({1, 2, 1}) == 2);
  CHECK_THROWS_AS(accumulate_product(out, LaurentPoly::monomial(-1), Series3::one(4), 0, 0), SeriesError);
}
