#pragma once

#include "realab/cohomology.hpp"
#include "realab/exterior.hpp"

namespace realab {

// Layout of the product algebra ∧(H^1(A) ⊕ H^1(Â)) on 4g generators: bits
// 0 .. 2g-1 are the basis e_i of H^1(A), bits 2g .. 4g-1 the dual basis f_i.

struct FourierOptions {
  /// Mutation hook for testing: multiplies each output monomial J by
  /// (-1)^(|J|(|J|-1)/2). Never set outside of tests.
  bool corrupt_sign = false;
};

/// c_1 of the Poincaré bundle, sum_i e_i ∧ f_i.
ExteriorElement poincare_c1(const RealTorus& a);

/// The same class with the dual factor identified with A through a principal
/// form: f_j becomes sum_i E_ji e'_i, where e'_i (bit 2g + i) is the basis of
/// the second copy of H^1(A). For g = 1 and the standard form this is x ⊗ y - y ⊗ x.
ExteriorElement poincare_c1_identified(const IntMatrix& form);

/// sum_{n <= 2g} c_1^n / n!, all divisions exact.
ExteriorElement chern_character(const RealTorus& a);

/// F_A(x) = pi_{2*}(ch(P) · pi_1^* x) from ∧H^1(A) (2g generators) to ∧H^1(Â)
/// (2g generators). Integration over A pairs against the symplectic orientation
/// x_1 ∧ y_1 ∧ ... ∧ x_g ∧ y_g = (-1)^(g(g-1)/2) e_0 ∧ ... ∧ e_{2g-1}.
/// Throws InputError on an inhomogeneous input.
ExteriorElement fourier(const RealTorus& a, const ExteriorElement& x, const FourierOptions& = {});

/// F_Â from ∧H^1(Â) back to ∧H^1(A), computed with the swapped Poincaré class.
ExteriorElement fourier_dual(const RealTorus& a, const ExteriorElement& y,
                             const FourierOptions& = {});

/// Matrix of F_A on degree i in the lexicographic bases of degrees i and 2g - i.
IntMatrix fourier_matrix(const RealTorus& a, std::size_t i, const FourierOptions& = {});

/// Same for F_Â.
IntMatrix fourier_dual_matrix(const RealTorus& a, std::size_t i);

/// Involution on H^1(Â) induced by the one on H^1(A): -sigma^t.
GLattice dual_h1(const RealTorus& a);

/// theta = sum_{i<j} E_ij e_i ∧ e_j on A and theta^ = sum_{i<j} Ê_ij f_i ∧ f_j
/// on Â with Ê = -E^{-1} (both as elements on 2g generators).
ExteriorElement theta_class(const IntMatrix& form);
ExteriorElement theta_dual_class(const IntMatrix& form);

/// F_A(theta) == (-1)^(g-1) theta^^(g-1) / (g-1)! for a principal form.
bool beauville_identity_holds(const RealTorus& a, const IntMatrix& form,
                              const FourierOptions& = {});

/// Scalar c with F_Â ∘ F_A = c · id on degree i; throws std::logic_error when
/// the composite is not a scalar.
int inversion_sign(const RealTorus& a, std::size_t i);

/// F_A(sigma x) == (-1)^(g-i) sigma^ F_A(x) on degree i, as an exact matrix identity.
bool fourier_equivariant(const RealTorus& a, std::size_t i);

/// Compares ∧^{2g-i}phi · F(∧^i phi^t x) with det(phi) · F(x) for an integer
/// matrix phi of nonzero determinant.
bool fourier_functoriality_check(const IntMatrix& phi, const ExteriorElement& x);

}  // namespace realab
