#include "fjgraph/spectra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace fj {
namespace {

constexpr double kTol = 1e-8;

std::vector<double> eigen_reference(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.order(), a.order());
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = 0; c < a.order(); ++c) m(r, c) = a(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + a.order());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void expect_values(const Spectrum& s, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end(), std::greater<>());
  ASSERT_EQ(s.distinct(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.values[i], expected[i], kTol);
}

TEST(RegularityMatrixTest, Examples) {
  EXPECT_EQ(regularity_matrix(4).rows(),
            (std::vector<std::vector<int>>{{2, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 2}}));
  EXPECT_EQ(regularity_matrix(3).rows(),
            (std::vector<std::vector<int>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(regularity_matrix(2).rows(), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_THROW(regularity_matrix(1), std::invalid_argument);
  EXPECT_THROW(regularity_matrix(4).at(0, 1), std::out_of_range);
}

TEST(RegularityMatrixTest, RowSumsEqualDegree) {
  for (int n = 2; n <= 12; ++n) {
    const auto rows = regularity_matrix(n).rows();
    for (const auto& row : rows) {
      int sum = 0;
      for (int x : row) sum += x;
      EXPECT_EQ(sum, n - 1);
    }
  }
}

TEST(RegularityMatrixTest, MatchesBlockRegularities) {
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(regularity_matrix_from_blocks(n, enumerate_permutations(n - 1)), regularity_matrix(n))
        << n;
}

TEST(SpectrumTest, MergesClusters) {
  const auto s = Spectrum::from_eigenvalues({1.0, 3.0, 1.0 + 1e-9, -2.0}, 1e-7);
  EXPECT_EQ(s.values.size(), 3U);
  EXPECT_EQ(s.multiplicities, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(s.order(), 4);
}

TEST(EigTest, PermutahedronOrderFour) {
  const auto s = permutahedron_spectrum(4);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  expect_values(s, {3, 1 + r2, r3, 1, -1 + r2, 1 - r2, -1, -r3, -1 - r2, -3});
  EXPECT_EQ(s.order(), 24);
}

TEST(EigTest, SmallExamples) {
  expect_values(permutahedron_spectrum(2), {1, -1});
  expect_values(permutahedron_spectrum(3), {2, 1, -1, -2});
  const double r2 = std::sqrt(2.0);
  expect_values(eig_tridiagonal(regularity_matrix(4)), {3, 1 + r2, 1, 1 - r2});
  expect_values(eig_tridiagonal(regularity_matrix(2)), {1, -1});
}

TEST(EigTest, JacobiAgreesWithEigen) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (std::size_t order : {1U, 2U, 5U, 17U, 40U}) {
    DenseMatrix a(order);
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t c = r; c < order; ++c) a(r, c) = a(c, r) = dist(rng);
    auto ours = jacobi_eigenvalues(a, 1e-12);
    std::sort(ours.begin(), ours.end(), std::greater<>());
    const auto ref = eigen_reference(a);
    for (std::size_t i = 0; i < order; ++i) EXPECT_NEAR(ours[i], ref[i], kTol);
  }
}

TEST(EigTest, PermutahedronAgreesWithEigenAndMomentIdentities) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = DenseMatrix::from_binary(
        adjacency_matrix(FlagGraphSpec::make(n, 1), enumerate_permutations(n)).bits);
    auto ours = jacobi_eigenvalues(a, 1e-12);
    std::sort(ours.begin(), ours.end(), std::greater<>());
    const auto ref = eigen_reference(a);
    double sum = 0, squares = 0;
    for (std::size_t i = 0; i < ours.size(); ++i) {
      EXPECT_NEAR(ours[i], ref[i], kTol);
      sum += ours[i];
      squares += ours[i] * ours[i];
    }
    EXPECT_NEAR(sum, a.trace(), kTol);
    EXPECT_NEAR(squares, a.frobenius_squared(), 1e-6);
    EXPECT_NEAR(ours.front(), n - 1, kTol);
  }
}

TEST(EigTest, TridiagonalAgreesWithJacobi) {
  for (int n = 2; n <= 12; ++n) {
    const auto m = regularity_matrix(n);
    const auto bisect = eig_tridiagonal(m);
    const auto jac = Spectrum::from_eigenvalues(jacobi_eigenvalues(m.dense(), 1e-12), 1e-7);
    ASSERT_EQ(bisect.distinct(), jac.distinct()) << n;
    for (std::size_t i = 0; i < jac.distinct(); ++i) EXPECT_NEAR(bisect.values[i], jac.values[i], kTol);
    EXPECT_NEAR(bisect.values.front(), n - 1, kTol);
  }
}

TEST(EigTest, Errors) {
  EXPECT_THROW(eig_symmetric(DenseMatrix::from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
  Limits tight;
  tight.eigen_cap = 10;
  EXPECT_THROW(eig_symmetric(DenseMatrix(11), {}, tight), CapExceeded);
  EXPECT_THROW(permutahedron_spectrum(4, {}, tight), CapExceeded);
}

TEST(LiftTest, Examples) {
  EXPECT_EQ(lift_vector({1, 2}, 2).coords, (std::vector<double>{1, 2}));
  EXPECT_EQ(lift_vector({1, 0, -1}, 3).coords, (std::vector<double>{1, 1, 0, 0, -1, -1}));
  EXPECT_THROW(lift_vector({1, 2}, 3), std::invalid_argument);
}

TEST(IntertwiningTest, HoldsExactly) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(verify_intertwining(n, enumerate_permutations(n - 1))) << n;
}

TEST(IntertwiningTest, NarrowIndicatorsFail) {
  // Indicators covering only n-1 coordinates of each block are not invariant
  // once n-1 < (n-1)!.
  for (int n = 4; n <= 6; ++n) {
    const auto a = adjacency_matrix(FlagGraphSpec::make(n, 1),
                                    concatenated_ordering(enumerate_permutations(n - 1)));
    EXPECT_FALSE(detail::intertwining_holds(a.bits, regularity_matrix(n), n, n - 1)) << n;
  }
  const auto a3 = adjacency_matrix(FlagGraphSpec::make(3, 1),
                                   concatenated_ordering(enumerate_permutations(2)));
  EXPECT_TRUE(detail::intertwining_holds(a3.bits, regularity_matrix(3), 3, 2));
}

TEST(IntertwiningTest, LiftedEigenvectorsAreEigenvectors) {
  for (int n = 2; n <= 5; ++n) {
    const auto m = regularity_matrix(n);
    const auto a = adjacency_matrix(FlagGraphSpec::make(n, 1),
                                    concatenated_ordering(enumerate_permutations(n - 1)));
    Eigen::MatrixXd md(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) md(i - 1, j - 1) = m.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(md);
    for (int e = 0; e < n; ++e) {
      std::vector<double> v(n);
      for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, e);
      const auto lifted = lift_vector(v, n);
      const double lambda = solver.eigenvalues()(e);
      for (std::size_t r = 0; r < a.order(); ++r) {
        double av = 0;
        for (std::size_t c = 0; c < a.order(); ++c)
          if (a(r, c)) av += lifted.coords[c];
        ASSERT_NEAR(av, lambda * lifted.coords[r], kTol);
      }
    }
  }
}

TEST(SubsetTest, Examples) {
  const double r2 = std::sqrt(2.0);
  const auto m4 = eig_tridiagonal(regularity_matrix(4));
  const auto full4 = permutahedron_spectrum(4);
  const auto match = spectrum_subset_check(m4, full4, kTol);
  EXPECT_TRUE(match.ok);
  ASSERT_EQ(match.matching.size(), 4U);
  for (const auto& [i, j] : match.matching) EXPECT_NEAR(m4.values[i], full4.values[j], kTol);

  Spectrum bogus{{3.5}, {1}};
  const auto miss = spectrum_subset_check(bogus, full4, kTol);
  EXPECT_FALSE(miss.ok);
  ASSERT_TRUE(miss.unmatched.has_value());
  EXPECT_DOUBLE_EQ(*miss.unmatched, 3.5);
  EXPECT_TRUE(spectrum_subset_check(Spectrum{{1 + r2}, {1}}, full4, kTol).ok);
}

TEST(SubsetTest, HoldsUpToFive) {
  for (int n = 2; n <= 5; ++n)
    EXPECT_TRUE(spectrum_subset_check(eig_tridiagonal(regularity_matrix(n)), permutahedron_spectrum(n),
                                      kTol)
                    .ok)
        << n;
}

TEST(ConjectureTest, SecondLargestLiesInRegularitySpectrum) {
  for (int n = 3; n <= 5; ++n) {
    const auto ev = conjecture_second_largest(n);
    EXPECT_TRUE(ev.holds) << n;
    EXPECT_TRUE(ev.matching_m_value.has_value());
  }
  EXPECT_NEAR(conjecture_second_largest(4).second_largest, 1 + std::sqrt(2.0), kTol);
}

}  // namespace
}  // namespace fj
