#include "realab/fourier.hpp"
#include "realab/moduli.hpp"
#include "realab/smith.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace realab;

namespace {

RealTorus split_product(std::size_t g) { return RealTorus::elliptic_product(std::vector<bool>(g, true)); }

IntMatrix product_involution(const RealTorus& a) {
  return block_diagonal(a.h1().sigma(), dual_h1(a).sigma());
}

}  // namespace

TEST(PoincareClass, EllipticIdentity) {
  const ExteriorElement c1 = poincare_c1_identified(standard_symplectic(1));
  // x ⊗ y - y ⊗ x with x = bit 0, y = bit 1 and the second copy at bits 2, 3
  EXPECT_EQ(c1.coefficient(0b1001), 1);
  EXPECT_EQ(c1.coefficient(0b0110), -1);
  EXPECT_EQ(c1.terms().size(), 2u);
}

TEST(PoincareClass, InvariantAndNilpotent) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (bool split : {false, true}) {
      const RealTorus a = RealTorus::elliptic_product(std::vector<bool>(g, split));
      const ExteriorElement c1 = poincare_c1(a);
      // c_1 lives in H^2(Z(1)), where the generator acts by -sigma
      EXPECT_TRUE(apply_linear(product_involution(a), c1) == -c1);
      EXPECT_TRUE(wedge_power(c1, 2 * g + 1).is_zero());
    }
}

TEST(Fourier, DegreeShiftAndTopClass) {
  for (std::size_t g = 1; g <= 2; ++g) {
    const RealTorus a = split_product(g);
    const Monomial full = (Monomial(1) << (2 * g)) - 1;
    const ExteriorElement out = fourier(a, ExteriorElement::monomial(2 * g, full));
    ASSERT_EQ(out.homogeneous_degree(), 0u);
    EXPECT_EQ(abs(out.coefficient(0)), 1);
  }
  ExteriorElement mixed = ExteriorElement::one(2) + ExteriorElement::generator(2, 0);
  EXPECT_THROW(fourier(split_product(1), mixed), InputError);
}

TEST(Fourier, PerDegreeUnimodular) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t i = 0; i <= 2 * g; ++i) {
      const IntMatrix m = fourier_matrix(split_product(g), i);
      EXPECT_EQ(abs(determinant(m)), 1) << "g=" << g << " i=" << i;
    }
}

TEST(Fourier, Equivariance) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (unsigned mask = 0; mask < (1u << g); ++mask) {
      std::vector<bool> split(g);
      for (std::size_t k = 0; k < g; ++k) split[k] = (mask >> k) & 1u;
      const RealTorus a = RealTorus::elliptic_product(split);
      for (std::size_t i = 0; i <= 2 * g; ++i) EXPECT_TRUE(fourier_equivariant(a, i));
    }
}

TEST(Fourier, BeauvilleIdentity) {
  for (std::size_t g = 1; g <= 3; ++g) {
    EXPECT_TRUE(beauville_identity_holds(split_product(g), standard_symplectic(g)));
    EXPECT_TRUE(beauville_identity_holds(RealTorus::elliptic_product(std::vector<bool>(g, false)),
                                         standard_symplectic(g)));
  }
}

TEST(Fourier, CorruptedSignIsDetected) {
  EXPECT_FALSE(beauville_identity_holds(split_product(2), standard_symplectic(2), {true}));
}

TEST(Fourier, InversionSignTable) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t i = 0; i <= 2 * g; ++i) {
      const int expected = (g + i) % 2 ? -1 : 1;
      EXPECT_EQ(inversion_sign(split_product(g), i), expected) << "g=" << g << " i=" << i;
    }
}

TEST(Fourier, DegreeOneInverse) {
  for (std::size_t g = 1; g <= 3; ++g) {
    const RealTorus a = split_product(g);
    const int sign = (1 + g) % 2 ? -1 : 1;
    for (std::size_t j = 0; j < 2 * g; ++j) {
      const auto x = ExteriorElement::generator(2 * g, j);
      EXPECT_EQ(fourier_dual(a, fourier(a, x)), mpz_class(sign) * x);
    }
  }
}

TEST(Functoriality, IdentityScalingAndRandom) {
  testkit::Rng rng(31);
  for (std::size_t g = 1; g <= 2; ++g) {
    const std::size_t n = 2 * g;
    for (std::size_t i = 0; i <= n; ++i) {
      const auto x = from_coordinates(n, i, IntVector(binomial(n, i).get_ui(), 1));
      EXPECT_TRUE(fourier_functoriality_check(IntMatrix::identity(n), x));
      EXPECT_TRUE(fourier_functoriality_check(mpz_class(3) * IntMatrix::identity(n), x));
      for (int t = 0; t < 3; ++t) {
        IntMatrix phi = testkit::random_unimodular(rng, n, 2 * n, 2);
        phi(0, 0) *= 2;
        if (determinant(phi) == 0) continue;
        EXPECT_TRUE(fourier_functoriality_check(phi, x));
      }
    }
  }
}

TEST(Functoriality, TwoIsogenySplitToConnected) {
  // Z x + Z y with sigma = diag(1, -1) includes into the swap lattice via
  // x -> e0 + e1, y -> e0 - e1, index 2, intertwining the involutions.
  const IntMatrix phi{{1, 1}, {1, -1}};
  const IntMatrix split{{1, 0}, {0, -1}};
  const IntMatrix swap{{0, 1}, {1, 0}};
  ASSERT_EQ(swap * phi, phi * split);
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j < binomial(2, i); ++j) {
      IntVector v(binomial(2, i).get_ui(), 0);
      v[j] = 1;
      EXPECT_TRUE(fourier_functoriality_check(phi, from_coordinates(2, i, v)));
    }
}

TEST(Fourier, InvariantLatticeMapsOntoInvariantLattice) {
  // F restricted to degree 2 invariants lands exactly on the degree 2g - 2
  // invariants of the dual torus (twists as in the equivariance sign).
  for (std::size_t g = 2; g <= 3; ++g)
    for (bool split : {false, true}) {
      const RealTorus a = RealTorus::elliptic_product(std::vector<bool>(g, split));
      const std::size_t i = 2;
      const Twist dst_twist = (g + i) % 2 ? Twist::Odd : Twist::Even;
      const GLattice src(compound_matrix(a.h1().sigma(), i));
      const GLattice dst(compound_matrix(dual_h1(a).sigma(), 2 * g - i), dst_twist);
      const IntMatrix inv_src = invariant_basis(src);
      const IntMatrix inv_dst = invariant_basis(dst);
      const IntMatrix image = fourier_matrix(a, i) * inv_src;
      EXPECT_TRUE(same_column_lattice(image, inv_dst)) << "g=" << g << " split=" << split;
    }
}

TEST(Fourier, FactorialDivisionsExact) {
  for (std::size_t g = 1; g <= 3; ++g) EXPECT_NO_THROW(chern_character(split_product(g)));
}
