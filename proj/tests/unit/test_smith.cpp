#include "realab/int_matrix.hpp"
#include "realab/smith.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace realab;

namespace {

bool divisibility_chain(const SmithForm& s) {
  const auto f = s.invariant_factors();
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] % f[i - 1] != 0) return false;
  return true;
}

bool diagonal_only(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(IntMatrix, DeterminantAndInverse) {
  const IntMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(determinant(m), 18);
  EXPECT_EQ(to_rational(m) * inverse(m), RatMatrix::identity(3));
  EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), InputError);
}

TEST(IntMatrix, PfaffianSquaresToDeterminant) {
  testkit::Rng rng(11);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (std::size_t n : {2u, 4u, 6u}) {
    for (int t = 0; t < 20; ++t) {
      IntMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          a(i, j) = coef(rng);
          a(j, i) = -a(i, j);
        }
      const mpz_class pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(a));
    }
  }
  EXPECT_EQ(pfaffian(standard_symplectic(1)), 1);
  EXPECT_EQ(pfaffian(standard_symplectic(2)), -1);
}

TEST(IntMatrix, PositiveDefiniteBySylvester) {
  EXPECT_TRUE(is_positive_definite(RatMatrix{{2, 1}, {1, 2}}));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 0}, {1, 1}}));
}

TEST(SmithNormalForm, KnownExamples) {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.invariant_factors(), (std::vector<mpz_class>{2, 6, 12}));

  const SmithForm z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
  EXPECT_EQ(z.rank(), 0u);

  const SmithForm r = smith_normal_form(IntMatrix{{1, 1}, {1, -1}});
  EXPECT_EQ(r.invariant_factors(), (std::vector<mpz_class>{1, 2}));
}

TEST(SmithNormalForm, RandomPropertyCheck) {
  testkit::Rng rng(2024);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = coef(rng);
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.u * m * s.v, s.d);
    EXPECT_TRUE(is_unimodular(s.u));
    EXPECT_TRUE(is_unimodular(s.v));
    EXPECT_EQ(s.v * s.v_inv, IntMatrix::identity(cols));
    EXPECT_TRUE(diagonal_only(s.d));
    EXPECT_TRUE(divisibility_chain(s));
    EXPECT_EQ(s.rank(), rank(m));
  }
}

TEST(SmithNormalForm, Deterministic) {
  const IntMatrix m{{4, 6, 2}, {2, 8, 0}, {6, 2, 4}};
  const SmithForm a = smith_normal_form(m);
  const SmithForm b = smith_normal_form(m);
  EXPECT_EQ(a.u, b.u);
  EXPECT_EQ(a.v, b.v);
}

TEST(IntegerKernel, SaturatedBasis) {
  const IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  const IntMatrix k = integer_kernel(m);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  // saturation: SNF of the basis has all invariant factors 1
  for (const auto& f : smith_normal_form(k).invariant_factors()) EXPECT_EQ(f, 1);
}

TEST(HermiteForm, SameLatticeUnderColumnOperations) {
  testkit::Rng rng(5);
  const IntMatrix m{{3, 1, 0}, {0, 2, 1}, {1, 0, 5}};
  for (int t = 0; t < 10; ++t) {
    const IntMatrix u = testkit::random_unimodular(rng, 3, 6);
    EXPECT_TRUE(same_column_lattice(m, m * u));
  }
  EXPECT_FALSE(same_column_lattice(m, mpz_class(2) * m));
}
