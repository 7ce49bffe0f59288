#include "sdpdeg/polynomial.hpp"

#include <random>

#include <gtest/gtest.h>

namespace sdpdeg {
namespace {

class PolynomialTest : public ::testing::Test {
 protected:
  SpacePtr xs = indexed_space("x", 2);
  SparsePolynomial x1 = SparsePolynomial::variable(xs, 0);
  SparsePolynomial x2 = SparsePolynomial::variable(xs, 1);
  SparsePolynomial one = SparsePolynomial::constant(xs, 1);

  SparsePolynomial poly(std::vector<std::pair<std::vector<int>, int>> terms) {
    std::vector<Term> out;
    for (auto& [e, c] : terms) out.push_back(Term{Monomial(e), BigRational(c)});
    return SparsePolynomial(xs, std::move(out));
  }
  std::vector<SparsePolynomial> example_forms() {
    const std::vector<std::size_t> vars{0, 1};
    return pairwise_sum_forms(xs, vars);
  }
};

SparsePolynomial random_polynomial(const SpacePtr& space, std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, max_exp), count(0, max_terms);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> e(space->arity());
    for (auto& v : e) v = exp(rng);
    terms.push_back(Term{Monomial(std::move(e)), BigRational(coeff(rng))});
  }
  return SparsePolynomial(space, std::move(terms));
}

TEST_F(PolynomialTest, VariableSpaceRejectsDuplicatesAndEmpty) {
  EXPECT_THROW(make_space({"a", "a"}), std::invalid_argument);
  EXPECT_THROW(make_space({}), std::invalid_argument);
  EXPECT_EQ(xy_space(2, 5)->names(), (std::vector<std::string>{"x1", "x2", "y1", "y2", "y3"}));
}

TEST_F(PolynomialTest, AddCancelsAndHasIdentity) {
  EXPECT_EQ((x1 + x2) + (x1 - x2), poly({{{1, 0}, 2}}));
  const SparsePolynomial p = x1 * x1 + x2;
  EXPECT_EQ(p + SparsePolynomial(xs), p);
  EXPECT_EQ(x1 * x1 + x1 * x1, poly({{{2, 0}, 2}}));
  EXPECT_TRUE((x1 - x1).is_zero());
}

TEST_F(PolynomialTest, SpaceMismatchIsAnError) {
  const SpacePtr ys = indexed_space("y", 2);
  const SparsePolynomial y1 = SparsePolynomial::variable(ys, 0);
  EXPECT_THROW(add(x1, y1), std::invalid_argument);
  EXPECT_THROW(mul(x1, y1), std::invalid_argument);
  // Structurally equal spaces are the same space.
  EXPECT_NO_THROW(add(x1, SparsePolynomial::variable(indexed_space("x", 2), 1)));
}

TEST_F(PolynomialTest, Multiplication) {
  EXPECT_EQ((x1 - x2) * (x2 - x1), poly({{{2, 0}, -1}, {{1, 1}, 2}, {{0, 2}, -1}}));
  EXPECT_TRUE(mul(x1 * x1, x1, ExponentCap({2, 2})).is_zero());
  const SparsePolynomial s = x1 + x2, d = x1 - x2;
  EXPECT_EQ(s * s * d * d, poly({{{4, 0}, 1}, {{2, 2}, -2}, {{0, 4}, 1}}));
}

TEST_F(PolynomialTest, TermsAreInDescendingGradedLexOrder) {
  const SparsePolynomial p = one + x2 + x1 * x2 + x1 * x1 + x2 * x2 + x1;
  std::vector<std::vector<int>> seen;
  for (const auto& t : p.terms()) seen.push_back(t.monomial.exponents());
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}}));
  EXPECT_EQ(p.leading_term().monomial, Monomial({2, 0}));
  EXPECT_EQ(SparsePolynomial(xs).degree(), kZeroDegree);
  EXPECT_EQ(p.degree(), 2);
}

TEST_F(PolynomialTest, CoefficientOf) {
  const SparsePolynomial v = (x1 - x2) * (x2 - x1);
  EXPECT_EQ(coefficient_of(v, Monomial({1, 1})), 2);
  EXPECT_EQ(coefficient_of(x1 + x2, Monomial({1, 1})), 0);
  EXPECT_EQ(coefficient_of(poly({{{2, 0}, 7}, {{1, 1}, 10}, {{0, 2}, 7}}), Monomial({2, 0})), 7);
}

TEST_F(PolynomialTest, Evaluate) {
  const std::vector<BigRational> p23{2, 3}, p55{5, 5}, p11{1, 1};
  EXPECT_EQ(evaluate(x1 * x2, p23), 6);
  EXPECT_EQ(evaluate(x1 - x2, p55), 0);
  EXPECT_EQ(evaluate(poly({{{2, 0}, 7}, {{1, 1}, 10}, {{0, 2}, 7}}), p11), 24);
  const std::vector<BigRational> too_short{1};
  EXPECT_THROW(evaluate(x1, too_short), std::invalid_argument);
}

TEST_F(PolynomialTest, PairwiseSumForms) {
  const std::vector<std::size_t> first{0};
  const auto single = pairwise_sum_forms(xs, first);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], poly({{{1, 0}, 2}}));

  const auto forms = example_forms();
  ASSERT_EQ(forms.size(), 3u);
  EXPECT_EQ(forms[0], poly({{{1, 0}, 2}}));
  EXPECT_EQ(forms[1], x1 + x2);
  EXPECT_EQ(forms[2], poly({{{0, 1}, 2}}));

  const SpacePtr ys = indexed_space("y", 3);
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(pairwise_sum_forms(ys, all).size(), 6u);
}

TEST_F(PolynomialTest, CompleteHomogeneous) {
  const auto forms = example_forms();
  EXPECT_EQ(complete_homogeneous(forms, 0), one);
  EXPECT_EQ(complete_homogeneous(forms, 1), poly({{{1, 0}, 3}, {{0, 1}, 3}}));
  EXPECT_EQ(complete_homogeneous(forms, 2), poly({{{2, 0}, 7}, {{1, 1}, 10}, {{0, 2}, 7}}));
}

TEST_F(PolynomialTest, ElementarySymmetric) {
  const auto forms = example_forms();
  EXPECT_EQ(elementary_symmetric(forms, 0), one);
  EXPECT_EQ(elementary_symmetric(forms, 2), poly({{{2, 0}, 2}, {{1, 1}, 8}, {{0, 2}, 2}}));
  EXPECT_TRUE(elementary_symmetric(forms, 4).is_zero());
  const std::vector<SparsePolynomial> numbers{SparsePolynomial::constant(xs, 1), SparsePolynomial::constant(xs, 2),
                                              SparsePolynomial::constant(xs, 3)};
  EXPECT_EQ(elementary_symmetric(numbers, 3), SparsePolynomial::constant(xs, 6));
}

TEST_F(PolynomialTest, DivideExact) {
  const SparsePolynomial a = (x1 + x2) * (x1 - x2) * (x1 * x1 + 3 * one);
  EXPECT_EQ(divide_exact(a, x1 - x2), (x1 + x2) * (x1 * x1 + 3 * one));
  EXPECT_THROW(divide_exact(x1 * x1 + one, x1 - x2), ConsistencyError);
}

TEST(PolynomialProperties, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const SpacePtr space = indexed_space("v", 2 + trial % 3);
    const auto a = random_polynomial(space, rng);
    const auto b = random_polynomial(space, rng);
    const auto c = random_polynomial(space, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(PolynomialProperties, CappedMultiplicationEqualsTruncatedProduct) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const SpacePtr space = indexed_space("v", 2 + trial % 3);
    const auto a = random_polynomial(space, rng, 5);
    const auto b = random_polynomial(space, rng, 5);
    std::vector<int> limits(space->arity());
    for (auto& l : limits) l = std::uniform_int_distribution<int>(0, 5)(rng);
    const ExponentCap cap(limits);
    EXPECT_EQ(mul(a, b, cap), truncate(a * b, cap));
  }
}

TEST(PolynomialProperties, PruningAtTheTargetKeepsItsCoefficient) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const SpacePtr space = indexed_space("v", 3);
    const auto a = random_polynomial(space, rng, 6);
    const auto b = random_polynomial(space, rng, 6);
    std::vector<int> e(3);
    for (auto& v : e) v = std::uniform_int_distribution<int>(0, 6)(rng);
    const Monomial m(e);
    EXPECT_EQ(coefficient_of(mul(a, b, ExponentCap::at(m)), m), coefficient_of(a * b, m));
    EXPECT_EQ(coefficient_of_product(a, b, m), coefficient_of(a * b, m));
  }
}

TEST(PolynomialProperties, NewtonRelationBetweenEAndH) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const SpacePtr space = indexed_space("v", 2);
    std::vector<SparsePolynomial> forms;
    const int count = 1 + trial % 6;
    for (int f = 0; f < count; ++f) forms.push_back(random_polynomial(space, rng, 2, 1));
    if (std::all_of(forms.begin(), forms.end(), [](const auto& f) { return f.is_zero(); })) continue;
    for (int d = 1; d <= 4; ++d) {
      SparsePolynomial sum(space);
      for (int i = 0; i <= d; ++i) {
        const SparsePolynomial term = elementary_symmetric(forms, i) * complete_homogeneous(forms, d - i);
        sum += i % 2 == 0 ? term : -term;
      }
      EXPECT_TRUE(sum.is_zero()) << "d=" << d << " forms=" << count;
    }
  }
}

}  // namespace
}  // namespace sdpdeg
