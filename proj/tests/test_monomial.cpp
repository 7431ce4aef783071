#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "pbwchar/monomial.hpp"

using namespace pbwchar;

namespace {

// Builds a monomial from (letter, mode, exponent) factors.
OrderedMonomial mono(std::initializer_list<std::tuple<char, int, int>> factors) {
  OrderedMonomial m;
  for (auto [x, i, e] : factors) {
    const int slot = x == 'f' ? 0 : x == 'h' ? 1 : 2;
    m.set(i, slot, m.exponents().size() >= static_cast<size_t>(i) ? m.exponents()[i - 1][slot] + e : e);
  }
  return m;
}

std::map<int, int> counts_by_q(const std::vector<OrderedMonomial>& ms) {
  std::map<int, int> out;
  for (const auto& m : ms) ++out[m.tridegree().q];
  return out;
}

// Every monomial with q-degree <= q_max, no constraints.
std::vector<OrderedMonomial> all_monomials(int q_max) {
  std::vector<OrderedMonomial> out;
  std::vector<OrderedMonomial::Triple> exps;
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i > budget) {
      out.emplace_back(exps);
      return;
    }
    for (int a = 0; i * a <= budget; ++a)
      for (int b = 0; i * (a + b) <= budget; ++b)
        for (int c = 0; i * (a + b + c) <= budget; ++c) {
          exps.push_back({a, b, c});
          rec(i + 1, budget - i * (a + b + c));
          exps.pop_back();
        }
  };
  rec(1, q_max);
  return out;
}

}  // namespace

TEST_CASE("monomial basics") {
  const auto m = mono({{'f', 1, 1}, {'e', 1, 1}});
  CHECK(m.degree() == 2);
  CHECK(m.tridegree() == TriDegree{2, 0, 2});
  CHECK(mono({{'h', 1, 1}, {'h', 2, 1}}).tridegree() == TriDegree{3, 0, 2});
  CHECK(mono({{'e', 3, 2}}).tridegree() == TriDegree{6, 4, 2});
  CHECK(to_string(OrderedMonomial()) == "1");
  CHECK(to_string(m) == "f[-1]^1 e[-1]^1");
  CHECK_THROWS_AS(OrderedMonomial({{0, -1, 0}}), MonomialError);
  // trailing zero triples are trimmed
  CHECK(OrderedMonomial({{1, 0, 0}, {0, 0, 0}}) == OrderedMonomial({{1, 0, 0}}));
}

TEST_CASE("admissibility") {
  const auto ehf1 = ConstraintProfile::ehf(1);
  const auto prime = ConstraintProfile::ehf_prime();
  CHECK(is_admissible(mono({{'f', 1, 1}, {'e', 1, 1}}), ehf1));
  CHECK_FALSE(is_admissible(mono({{'h', 1, 2}}), ehf1));
  CHECK(is_admissible(OrderedMonomial(), ehf1));
  CHECK(is_admissible(OrderedMonomial(), prime));
  CHECK(is_admissible(OrderedMonomial(), ConstraintProfile::ehf(3)));
  const auto hh = mono({{'h', 1, 1}, {'h', 2, 1}});
  CHECK(is_admissible(hh, ehf1));
  CHECK_FALSE(is_admissible(hh, prime));
  CHECK(is_admissible(mono({{'h', 1, 2}}), ConstraintProfile::ehf(2)));
  // the hexagon condition only exists for ehf'
  CHECK_FALSE(is_admissible(mono({{'h', 1, 2}, {'f', 2, 1}}), prime));
  CHECK_THROWS_AS(ConstraintProfile::ehf(0), MonomialError);
  CHECK_THROWS_AS(is_admissible(OrderedMonomial(), ConstraintProfile{ConstraintProfile::Variant::EhfPrime, 2}),
                  MonomialError);
}

TEST_CASE("enumeration counts") {
  const auto ehf1 = ConstraintProfile::ehf(1);
  const auto up_to_1 = enumerate(ehf1, 1);
  CHECK(up_to_1.size() == 4);
  CHECK(up_to_1[0] == OrderedMonomial());

  const auto c3 = counts_by_q(enumerate(ehf1, 3));
  CHECK(c3 == std::map<int, int>{{0, 1}, {1, 3}, {2, 4}, {3, 7}});

  std::vector<OrderedMonomial> q3;
  for (const auto& m : enumerate(ehf1, 3))
    if (m.tridegree().q == 3) q3.push_back(m);
  std::vector<OrderedMonomial> expected = {
      mono({{'f', 3, 1}}),
      mono({{'h', 3, 1}}),
      mono({{'e', 3, 1}}),
      mono({{'h', 1, 1}, {'f', 2, 1}}),
      mono({{'h', 1, 1}, {'h', 2, 1}}),
      mono({{'e', 1, 1}, {'f', 2, 1}}),
      mono({{'e', 1, 1}, {'h', 2, 1}}),
  };
  auto key = [](const OrderedMonomial& m) { return m.exponents(); };
  auto by_key = [&](const auto& x, const auto& y) { return key(x) < key(y); };
  std::sort(q3.begin(), q3.end(), by_key);
  std::sort(expected.begin(), expected.end(), by_key);
  CHECK(q3 == expected);

  std::vector<OrderedMonomial> prime_q2;
  for (const auto& m : enumerate(ConstraintProfile::ehf_prime(), 2))
    if (m.tridegree().q == 2) prime_q2.push_back(m);
  std::vector<OrderedMonomial> expected_prime = {mono({{'f', 2, 1}}), mono({{'h', 2, 1}}), mono({{'e', 2, 1}}),
                                                 mono({{'f', 1, 1}, {'e', 1, 1}})};
  std::sort(prime_q2.begin(), prime_q2.end(), by_key);
  std::sort(expected_prime.begin(), expected_prime.end(), by_key);
  CHECK(prime_q2 == expected_prime);

  CHECK_THROWS_AS(enumerate(ehf1, -1), MonomialError);
}

TEST_CASE("enumeration agrees with brute-force filtering") {
  const auto all = all_monomials(8);
  for (const auto& p : {ConstraintProfile::ehf(1), ConstraintProfile::ehf(2), ConstraintProfile::ehf(3),
                        ConstraintProfile::ehf_prime()}) {
    std::vector<OrderedMonomial> filtered;
    for (const auto& m : all)
      if (is_admissible(m, p)) filtered.push_back(m);
    auto got = enumerate(p, 8);
    CHECK(got.size() == filtered.size());
    auto by_exps = [](const auto& x, const auto& y) { return x.exponents() < y.exponents(); };
    std::sort(got.begin(), got.end(), by_exps);
    std::sort(filtered.begin(), filtered.end(), by_exps);
    CHECK(got == filtered);
  }
}

TEST_CASE("character_of") {
  const auto ch = character_of(ConstraintProfile::ehf(1), 2);
  Series3 expected(2);
  expected.add_term({0, 0, 0}, 1);
  for (int z : {-2, 0, 2}) {
    expected.add_term({1, z, 1}, 1);
    expected.add_term({2, z, 1}, 1);
  }
  expected.add_term({2, 0, 2}, 1);
  CHECK(ch == expected);
  for (int k = 1; k <= 3; ++k) CHECK(character_of(ConstraintProfile::ehf(k), 0) == Series3::one(0));
  CHECK(character_of(ConstraintProfile::ehf(1), 8) == character_of(ConstraintProfile::ehf_prime(), 8));
}

TEST_CASE("lex_compare") {
  const auto fh = mono({{'f', 1, 1}, {'h', 1, 1}});
  const auto eh = mono({{'e', 1, 1}, {'h', 1, 1}});
  CHECK(lex_compare(fh, eh) > 0);
  CHECK(lex_compare(eh, fh) < 0);
  CHECK(lex_compare(fh, fh) == 0);
  CHECK(lex_compare(mono({{'e', 1, 3}}), mono({{'f', 5, 1}, {'h', 7, 1}})) > 0);
  CHECK(lex_compare(OrderedMonomial(), mono({{'f', 1, 1}})) < 0);

  // total, antisymmetric and transitive on all monomials with q <= 5
  const auto all = all_monomials(5);
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto xy = lex_compare(x, y);
      CHECK((xy == 0) == (x == y));
      CHECK((xy < 0) == (lex_compare(y, x) > 0));
    }
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return lex_compare(x, y) < 0; });
  for (size_t i = 0; i + 2 < sorted.size(); ++i) CHECK(lex_compare(sorted[i], sorted[i + 2]) < 0);
}

TEST_CASE("reverse_lex_compare") {
  const auto all = all_monomials(5);
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK((reverse_lex_compare(x, y) == 0) == (x == y));
      CHECK((reverse_lex_compare(x, y) < 0) == (reverse_lex_compare(y, x) > 0));
    }
  // decided at the highest mode, where the larger h exponent loses
  CHECK(reverse_lex_compare(mono({{'e', 1, 1}, {'h', 2, 1}}), mono({{'h', 1, 1}, {'e', 2, 1}})) < 0);
  CHECK(lex_compare(mono({{'e', 1, 1}, {'h', 2, 1}}), mono({{'h', 1, 1}, {'e', 2, 1}})) < 0);
  CHECK(reverse_lex_compare(mono({{'h', 1, 1}, {'f', 2, 1}}), mono({{'f', 1, 1}, {'h', 2, 1}})) < 0);
  CHECK(lex_compare(mono({{'h', 1, 1}, {'f', 2, 1}}), mono({{'f', 1, 1}, {'h', 2, 1}})) < 0);
  CHECK(reverse_lex_compare(mono({{'f', 1, 1}, {'h', 2, 1}}), mono({{'h', 1, 1}, {'e', 2, 1}})) < 0);
  CHECK(lex_compare(mono({{'f', 1, 1}, {'h', 2, 1}}), mono({{'h', 1, 1}, {'e', 2, 1}})) > 0);
  const auto a = mono({{'e', 1, 1}}), b = mono({{'f', 1, 1}});
  CHECK(compare(a, b, MonomialOrder::FirstDifference) == lex_compare(a, b));
  CHECK(compare(a, b, MonomialOrder::LastDifference) == reverse_lex_compare(a, b));
}

TEST_CASE("phi examples") {
  const auto hh = mono({{'h', 1, 1}, {'h', 2, 1}});
  const auto fe = mono({{'f', 1, 1}, {'e', 2, 1}});
  CHECK(phi_forward(hh) == fe);
  CHECK(phi_inverse(fe) == hh);
  const auto fe11 = mono({{'f', 1, 1}, {'e', 1, 1}});
  CHECK(phi_forward(fe11) == fe11);
  CHECK(phi_inverse(fe11) == fe11);
  CHECK(phi_forward(OrderedMonomial()) == OrderedMonomial());
  CHECK(phi_inverse(OrderedMonomial()) == OrderedMonomial());
  CHECK_THROWS_AS(phi_forward(mono({{'h', 1, 2}})), MonomialError);
  CHECK_THROWS_AS(phi_inverse(hh), MonomialError);
}

TEST_CASE("phi is a degree-preserving bijection for q <= 10") {
  const auto ehf = enumerate(ConstraintProfile::ehf(1), 10);
  const auto prime = enumerate(ConstraintProfile::ehf_prime(), 10);
  std::map<TriDegree, int> image_count, prime_count;
  for (const auto& m : prime) ++prime_count[m.tridegree()];
  std::vector<std::vector<OrderedMonomial::Triple>> images;
  for (const auto& m : ehf) {
    const auto p = phi_forward(m);
    CHECK(is_admissible(p, ConstraintProfile::ehf_prime()));
    CHECK(p.tridegree() == m.tridegree());
    CHECK(phi_inverse(p) == m);
    if (is_admissible(m, ConstraintProfile::ehf_prime())) CHECK(p == m);
    ++image_count[p.tridegree()];
    images.push_back(p.exponents());
  }
  std::sort(images.begin(), images.end());
  CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
  CHECK(image_count == prime_count);
}
