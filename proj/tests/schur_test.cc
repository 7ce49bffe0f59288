#include "sdpdeg/schur.hpp"

#include <gtest/gtest.h>

#include "sdpdeg/verify.hpp"

namespace sdpdeg {
namespace {

class SchurTest : public ::testing::Test {
 protected:
  SpacePtr xs = indexed_space("x", 2);
  SparsePolynomial x1 = SparsePolynomial::variable(xs, 0);
  SparsePolynomial x2 = SparsePolynomial::variable(xs, 1);
  std::vector<SparsePolynomial> forms() {
    const std::vector<std::size_t> vars{0, 1};
    return pairwise_sum_forms(xs, vars);
  }
};

TEST_F(SchurTest, BialternantSmallCases) {
  EXPECT_EQ(schur_bialternant(Partition({1}), 2), x1 + x2);
  EXPECT_EQ(schur_bialternant(Partition({2}), 2), x1 * x1 + x1 * x2 + x2 * x2);
  EXPECT_EQ(schur_bialternant(Partition({1, 1}), 2), x1 * x2);
  EXPECT_THROW(schur_bialternant(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_F(SchurTest, BialternantIsSymmetricAndHomogeneous) {
  for (int r = 1; r <= 3; ++r) {
    for (int w = 0; w <= 5; ++w) {
      for (const auto& lam : enumerate_partitions(w, r)) {
        const SparsePolynomial s = schur_bialternant(lam, r);
        EXPECT_TRUE(is_symmetric_in(s, 0, r)) << lam.to_string();
        EXPECT_TRUE(s.is_homogeneous());
        EXPECT_EQ(s.degree(), w);
      }
    }
  }
}

TEST_F(SchurTest, SpecialShapesAreHAndE) {
  const SpacePtr space = indexed_space("x", 3);
  std::vector<SparsePolynomial> vars;
  for (std::size_t i = 0; i < 3; ++i) vars.push_back(SparsePolynomial::variable(space, i));
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(schur_bialternant(Partition({k}), space), complete_homogeneous(vars, k));
    EXPECT_EQ(schur_bialternant(rectangle(1, k), space), elementary_symmetric(vars, k));
  }
}

TEST_F(SchurTest, JacobiTrudiDual) {
  const auto f = forms();
  EXPECT_EQ(schur_jacobi_trudi_dual(0, f), SparsePolynomial::constant(xs, 1));
  EXPECT_EQ(schur_jacobi_trudi_dual(1, f), 3 * (x1 + x2));
  EXPECT_EQ(schur_jacobi_trudi_dual(2, f), complete_homogeneous(f, 2));
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(schur_jacobi_trudi_dual(k, f), complete_homogeneous(f, k)) << k;
}

TEST_F(SchurTest, PieriExamples) {
  EXPECT_EQ(pieri_multiply(Partition(), 1, 2), std::vector<Partition>{Partition({1})});
  EXPECT_EQ(pieri_multiply(Partition({1}), 1, 2), (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
  EXPECT_EQ(pieri_multiply(Partition({2, 2}), 2, 2), std::vector<Partition>{Partition({3, 3})});
}

TEST_F(SchurTest, PieriAgreesWithDecomposition) {
  for (int r = 1; r <= 3; ++r) {
    const SpacePtr space = indexed_space("x", r);
    std::vector<SparsePolynomial> vars;
    for (int i = 0; i < r; ++i) vars.push_back(SparsePolynomial::variable(space, i));
    for (int w = 0; w <= 4; ++w) {
      for (const auto& lam : enumerate_partitions(w, r)) {
        for (int k = 0; k <= r; ++k) {
          const SchurExpansion got =
              schur_decompose(schur_bialternant(lam, space) * elementary_symmetric(vars, k));
          SchurExpansion want;
          for (const auto& g : pieri_multiply(lam, k, r)) want.add(g, 1);
          EXPECT_EQ(got, want) << lam.to_string() << " k=" << k;
        }
      }
    }
  }
}

TEST_F(SchurTest, DecomposeExamples) {
  const SchurExpansion h2 = schur_decompose(complete_homogeneous(forms(), 2));
  EXPECT_EQ(h2.coefficient(Partition({2})), 7);
  EXPECT_EQ(h2.coefficient(Partition({1, 1})), 3);
  EXPECT_EQ(h2.size(), 2u);

  const SchurExpansion e2 = schur_decompose(x1 * x2);
  EXPECT_EQ(e2.size(), 1u);
  EXPECT_EQ(e2.coefficient(Partition({1, 1})), 1);

  const SchurExpansion sq = schur_decompose((x1 + x2) * (x1 + x2));
  EXPECT_EQ(sq.coefficient(Partition({2})), 1);
  EXPECT_EQ(sq.coefficient(Partition({1, 1})), 1);

  EXPECT_THROW(schur_decompose(x1), std::invalid_argument);
}

TEST_F(SchurTest, DecomposeInvertsBialternant) {
  for (int r = 1; r <= 3; ++r) {
    for (int w = 0; w <= 5; ++w) {
      for (const auto& lam : enumerate_partitions(w, r)) {
        SchurExpansion want;
        want.add(lam, 1);
        EXPECT_EQ(schur_decompose(schur_bialternant(lam, r)), want) << lam.to_string();
      }
    }
  }
}

TEST(PascalMinor, Examples) {
  EXPECT_EQ(pascal_minor_det(IndexSet({0, 3}), IndexSet({0, 3})), 1);
  EXPECT_EQ(pascal_minor_det(IndexSet({0, 3}), IndexSet({0, 1})), 3);
  EXPECT_EQ(pascal_minor_det(IndexSet({1, 2}), IndexSet({2, 3})), 0);
  EXPECT_THROW(pascal_minor_det(IndexSet({1, 2}), IndexSet({2})), std::invalid_argument);
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(IndexSet({1, 2})), 3);
  EXPECT_EQ(psi(IndexSet({0, 3})), 7);
  EXPECT_EQ(psi(IndexSet({0, 2})), 3);
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(psi(range_without(r - 1, {})), 1);
}

TEST(HSchurExpansion, Examples) {
  const SchurExpansion d2 = h_schur_expansion(2, 2);
  EXPECT_EQ(d2.coefficient(Partition({2})), 7);
  EXPECT_EQ(d2.coefficient(Partition({1, 1})), 3);
  const SchurExpansion d0 = h_schur_expansion(0, 4);
  EXPECT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0.coefficient(Partition()), 1);
  const SchurExpansion d1 = h_schur_expansion(1, 2);
  EXPECT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.coefficient(Partition({1})), 3);
}

TEST(SchurIdentities, PsiClosedForms) {
  const auto gap = verify::psi_single_gap(8);
  EXPECT_TRUE(gap.ok()) << gap.summary();
  const auto two = verify::psi_two_column(6);
  EXPECT_TRUE(two.ok()) << two.summary();
}

TEST(SchurIdentities, VandermondeSquareCoefficient) {
  const auto report = verify::vandermonde_square(3, 5);
  EXPECT_TRUE(report.ok()) << report.summary();
}

TEST(SchurIdentities, HExpansionMatchesSymbolicDecomposition) {
  const auto report = verify::h_expansion(3, 4);
  EXPECT_TRUE(report.ok()) << report.summary();
}

}  // namespace
}  // namespace sdpdeg
