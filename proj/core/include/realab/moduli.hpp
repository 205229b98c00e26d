#pragma once

#include "realab/cohomology.hpp"
#include "realab/glattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace realab {

/// Topological type (r, alpha) of a principally polarized real abelian variety.
/// r = 0 is stored with alpha = 0 and printed as "(0)".
struct RealType {
  std::size_t g = 0;
  std::size_t r = 0;
  int alpha = 0;

  /// Throws InputError unless (g, r, alpha) is an admissible label.
  void validate() const;
  std::string label() const;

  friend auto operator<=>(const RealType&, const RealType&) = default;
};

/// Integral and imaginary parts of a period matrix (I_g, M/2 + i N).
struct PeriodData {
  std::size_t g = 0;
  IntMatrix m;
  RatMatrix n;

  void validate() const;
};

/// The standard representative M(tau): [[I_r, 0], [0, 0]] for alpha = 1, the
/// r x r anti-diagonal block for alpha = 2, zero for r = 0.
IntMatrix normal_form_matrix(const RealType& t);

RealType classify_type(const IntMatrix& m);

/// Involution F = [[I, M], [0, -I]] on the period lattice; the postconditions
/// F^2 = 1, F^t J F = -J and recovery of the type are checked before returning.
GLattice involution_from_period(const PeriodData& pd);

/// Type read off intrinsically from an involution reversing a principal form:
/// the form E(c_i, (1 + F) c_j) mod 2 on a complement of the fixed sublattice.
RealType type_from_involution(const GLattice& lattice, const IntMatrix& form);

/// Whether T^t M(tau) T = M(tau) mod 2; throws unless T is unimodular.
bool gl_tau_member(const IntMatrix& t, const RealType& tau);

std::vector<RealType> enumerate_types(std::size_t g);

/// Number of real components for each type of dimension g, in enumeration order.
std::vector<std::pair<RealType, mpz_class>> pi0_by_type(std::size_t g);

}  // namespace realab
