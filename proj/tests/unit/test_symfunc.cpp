#include "dunkl/oracle/polynomial.hpp"
#include "dunkl/symfunc.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace dunkl;

namespace {

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

oracle::Polynomial from_row(const std::map<Partition, Rational>& u, int n) {
  oracle::Polynomial p(n);
  for (const auto& [mu, c] : u) p += oracle::monomial_symmetric(mu, n) * c;
  return p;
}

oracle::Polynomial elementary_poly(int r, int n) {
  return r == 0 ? oracle::monomial_symmetric(Partition{}, n)
                : oracle::monomial_symmetric(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), n);
}

}  // namespace

TEST(Evaluate, MonomialExamples) {
  EXPECT_DOUBLE_EQ(eval_monomial(Partition{2}, v({1, 2, 3})), 14.0);
  EXPECT_DOUBLE_EQ(eval_monomial(Partition{1, 1}, v({1, 2, 3})), 11.0);
  EXPECT_DOUBLE_EQ(eval_monomial(Partition{}, v({4, 5})), 1.0);
  EXPECT_DOUBLE_EQ(eval_monomial(Partition{2, 1}, v({1, 2, 3})), 1 * 2 + 1 * 3 + 4 * 1 + 4 * 3 + 9 * 1 + 9 * 2.0);
  EXPECT_THROW(eval_monomial(Partition{1, 1, 1}, v({1, 2})), DomainError);
}

TEST(Evaluate, ElementaryExamples) {
  EXPECT_DOUBLE_EQ(eval_elementary(1, v({1, 2, 3})), 6.0);
  EXPECT_DOUBLE_EQ(eval_elementary(3, v({1, 2, 3})), 6.0);
  EXPECT_DOUBLE_EQ(eval_elementary(0, v({1, 2, 3})), 1.0);
  EXPECT_DOUBLE_EQ(eval_elementary_partition(Partition{2, 1}, v({1, 2, 3})), 66.0);
  EXPECT_THROW(eval_elementary(4, v({1, 2, 3})), DomainError);
  EXPECT_THROW(eval_elementary(-1, v({1, 2, 3})), DomainError);
}

TEST(Evaluate, SchurExamples) {
  EXPECT_NEAR(eval_schur(Partition{1}, v({1, 2, 3})), 6.0, 1e-12);
  EXPECT_DOUBLE_EQ(eval_schur(Partition{2, 1}, v({1, 1, 1})), 8.0);  // repeated components: Kostka path
  EXPECT_DOUBLE_EQ(eval_schur(Partition{}, v({1, 2, 3})), 1.0);
  // bialternant path agrees with the Kostka expansion at distinct points
  const auto x = v({0.3, -1.1, 0.7, 1.9});
  for (int d = 1; d <= 4; ++d)
    for (const auto& t : enumerate_partitions(d, 4)) EXPECT_NEAR(eval_schur(t, x), eval_jack(t, Rational(1), x), 1e-10);
}

TEST(Jack, TwoByTwoRow) {
  for (const Rational a : {Rational(1, 3), Rational(1), Rational(3, 2), Rational(7)}) {
    const auto& row = jack_expansion(Partition{2}, a, 2);
    EXPECT_EQ(row.coefficient(Partition{2}), 1);
    EXPECT_EQ(row.coefficient(Partition{1, 1}), 2 / (1 + a));
  }
  EXPECT_EQ(jack_expansion(Partition{2}, Rational(3, 2), 2).coefficient(Partition{1, 1}), Rational(4, 5));
}

TEST(Jack, Errors) {
  EXPECT_THROW(jack_expansion(Partition{1, 1}, Rational(1), 1), DomainError);
  EXPECT_THROW(jack_expansion(Partition{2}, Rational(0), 2), DomainError);
  EXPECT_THROW(jack_expansion(Partition{2}, Rational(-1), 2), DomainError);
}

TEST(Jack, TriangularWithUnitDiagonal) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& tau : enumerate_partitions(d, n)) {
        const auto& row = jack_expansion(tau, Rational(2, 3), n);
        EXPECT_EQ(row.coefficient(tau), 1);
        for (const auto& [lambda, u] : row.u) {
          EXPECT_TRUE(dominance_compare(lambda, tau) == Dominance::Less || lambda == tau);
          EXPECT_LE(lambda.length(), n);
        }
      }
}

TEST(Jack, EigenrelationExactAgainstDirectOperator) {
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(3)})
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 5; ++d)
        for (const auto& tau : enumerate_partitions(d, n)) {
          const auto& row = jack_expansion(tau, alpha, n);
          const auto p = from_row(row.u, n);
          auto res = oracle::jack_operator(p, alpha);
          res -= p * row.eigenvalue;
          EXPECT_TRUE(res.is_zero()) << tau << " alpha=" << alpha << " N=" << n;
          EXPECT_EQ(row.eigenvalue, jack_eigenvalue(tau, alpha, n));
        }
}

TEST(Jack, EigenvalueClosedForm) {
  // E = sum_j tau_j (tau_j - 1 - 2k(j-1)) + 2k |tau| (N-1), k = 1/alpha
  const Partition tau{3, 1};
  const Rational alpha(1, 2), k = 1 / alpha;
  const int n = 3;
  Rational e = 3 * (3 - 1) + 1 * (1 - 1 - 2 * k) + 2 * k * 4 * (n - 1);
  EXPECT_EQ(jack_eigenvalue(tau, alpha, n), e);
}

TEST(Jack, SchurRowsMatchBialternant) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& tau : enumerate_partitions(d, n))
        EXPECT_EQ(jack_expansion(tau, Rational(1), n).u,
                  oracle::monomial_coefficients(oracle::schur_bialternant(tau, n)))
            << tau << " N=" << n;
}

TEST(Jack, KostkaTableSpotValues) {
  // s_(2,1) in three variables: m_(2,1) + 2 m_(1,1,1); s_(2,2): m_22 + m_211 + 2 m_1111
  const auto& a = jack_expansion(Partition{2, 1}, Rational(1), 3);
  EXPECT_EQ(a.coefficient(Partition{1, 1, 1}), 2);
  const auto& b = jack_expansion(Partition{2, 2}, Rational(1), 4);
  EXPECT_EQ(b.coefficient(Partition{2, 1, 1}), 1);
  EXPECT_EQ(b.coefficient(Partition{1, 1, 1, 1}), 2);
}

TEST(Jack, SmallAlphaGivesElementaryOfConjugate) {
  const Rational alpha(1, 1000000000);
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& tau : enumerate_partitions(d, n)) {
        oracle::Polynomial e = elementary_poly(0, n);
        const Partition conj = conjugate(tau);
        for (int part : conj.parts()) e = e * elementary_poly(part, n);
        const auto expected = oracle::monomial_coefficients(e);
        const auto& row = jack_expansion(tau, alpha, n);
        for (const auto& mu : enumerate_partitions(d, n)) {
          const auto it = expected.find(mu);
          const double want = it == expected.end() ? 0.0 : to_double(it->second);
          EXPECT_NEAR(to_double(row.coefficient(mu)), want, 1e-6) << tau << " " << mu;
        }
      }
}

TEST(Jack, LargeAlphaApproachesMonomial) {
  const Rational alpha(1000000);
  for (const auto& tau : enumerate_partitions(5, 4)) {
    const auto& row = jack_expansion(tau, alpha, 4);
    for (const auto& [mu, u] : row.u)
      if (mu != tau) EXPECT_LT(abs(u), Rational(1, 10000)) << tau << " " << mu;
  }
}

TEST(Jack, CNormalizationSumsToPowerOfE1) {
  // sum_{|tau|=n} C_tau(x) = (x . 1)^n, i.e. exp partial sums agree degree by degree
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(5, 2)})
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 5; ++d) {
        std::map<Partition, Rational> total;
        for (const auto& tau : enumerate_partitions(d, n)) {
          const Rational c = jack_c_from_p(tau, alpha);
          for (const auto& [mu, u] : jack_expansion(tau, alpha, n).u) total[mu] += c * u;
        }
        oracle::Polynomial e1 = oracle::monomial_symmetric(Partition{}, n);
        for (int i = 0; i < d; ++i) e1 = e1 * oracle::monomial_symmetric(Partition{1}, n);
        std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
        EXPECT_EQ(total, oracle::monomial_coefficients(e1)) << "alpha=" << alpha << " N=" << n << " d=" << d;
      }
}

TEST(Jack, ValueAtOnes) {
  EXPECT_EQ(jack_at_ones(Partition{1}, Rational(7, 3), 5), 5);
  EXPECT_EQ(jack_at_ones(Partition{}, Rational(2), 3), 1);
  EXPECT_EQ(jack_c_from_p(Partition{}, Rational(2)), 1);
  EXPECT_EQ(jack_at_ones(Partition{2}, Rational(1), 2), 3);
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2)})
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 5; ++d)
        for (const auto& tau : enumerate_partitions(d, n)) {
          Rational at_ones = 0;
          for (const auto& [mu, u] : jack_expansion(tau, alpha, n).u) at_ones += u * Rational(multiplicity_count(mu, n));
          EXPECT_EQ(at_ones, jack_at_ones(tau, alpha, n)) << tau;
        }
}

TEST(Jack, HooksAndPochhammer) {
  const Rational a(3, 7);
  auto h1 = hook_products(Partition{1}, a);
  EXPECT_EQ(h1.lower, 1);
  EXPECT_EQ(h1.upper, a);
  auto h2 = hook_products(Partition{2}, a);
  EXPECT_EQ(h2.lower, a + 1);
  EXPECT_EQ(h2.upper, 2 * a * a);
  auto h0 = hook_products(Partition{}, a);
  EXPECT_EQ(h0.lower, 1);
  EXPECT_EQ(h0.upper, 1);
  const Rational k(5, 2), alpha = 1 / k, x(11, 3);
  EXPECT_EQ(pochhammer_general(x, Partition{1}, alpha), x);
  EXPECT_EQ(pochhammer_general(Rational(k * 3), Partition{2}, alpha), k * 3 * (k * 3 + 1));
  EXPECT_EQ(pochhammer_general(x, Partition{}, alpha), 1);
  EXPECT_EQ(pochhammer_general(x, Partition{1, 1}, alpha), x * (x - 1 / alpha));
}

TEST(Jack, MemoIsSafeUnderConcurrentUse) {
  std::vector<std::map<Partition, Rational>> seen(4);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] { seen[static_cast<std::size_t>(w)] = jack_expansion(Partition{3, 2, 1}, Rational(5, 7), 4).u; });
  for (auto& t : pool) t.join();
  for (const auto& s : seen) EXPECT_EQ(s, seen[0]);
  EXPECT_EQ(seen[0], compute_jack_expansion(Partition{3, 2, 1}, Rational(5, 7), 4).u);
}

TEST(SymPoly, InvariantsAndConversion) {
  SymPoly p(Basis::Monomial, 2, 3);
  p.add(Partition{2}, Rational(1, 2));
  p.add(Partition{2}, Rational(-1, 2));
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.add(Partition{3}, 1), DomainError);
  SymPoly q(Basis::Monomial, 3, 2);
  EXPECT_THROW(q.add(Partition{1, 1, 1}, 1), DomainError);
  p.add(Partition{1, 1}, 0);
  EXPECT_TRUE(p.is_zero());
}

TEST(SymPoly, JackBasisRoundTrip) {
  SymPoly j(Basis::JackP, 2, 3, Rational(2));
  j.add(Partition{2}, Rational(3));
  const SymPoly m = j.to_monomial();
  EXPECT_EQ(m.coefficient(Partition{2}), 3);
  EXPECT_EQ(m.coefficient(Partition{1, 1}), 3 * Rational(2, 3));
  const auto x = v({0.2, 0.5, -1.0});
  EXPECT_NEAR(j.evaluate(x), m.evaluate(x), 1e-12);
  SymPoly other(Basis::JackP, 2, 3, Rational(1));
  EXPECT_THROW(j += other, DomainError);
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("1e4"), Rational(10000));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("-010/08"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("0"), Rational(0));
  EXPECT_EQ(parse_rational("-0"), Rational(0));
  EXPECT_EQ(parse_rational("0.000"), Rational(0));
  EXPECT_EQ(parse_rational("00.5"), Rational(1, 2));
}
