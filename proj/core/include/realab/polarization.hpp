#pragma once

#include "realab/exterior.hpp"
#include "realab/glattice.hpp"

#include <string>
#include <vector>

namespace realab {

using RatVector = std::vector<mpq_class>;

/// Outcome of checking a (lattice, form) pair; each invariant is reported on its own.
struct PolarizationReport {
  bool shape = false;            ///< square form matching an even-rank, twist-0 lattice
  bool alternating = false;      ///< skew-symmetric with zero diagonal
  bool nondegenerate = false;    ///< nonzero Pfaffian
  bool anti_equivariant = false; ///< sigma^t E sigma = -E
  std::string positivity = "not evaluated";
  std::vector<std::string> problems;

  bool valid() const { return shape && alternating && nondegenerate && anti_equivariant; }
};

PolarizationReport check_polarization(const GLattice& lattice, const IntMatrix& form);

/// Lattice with an integral alternating form E such that the involution
/// reverses it. Construction throws InputError when check_polarization fails.
class PolarizedLattice {
 public:
  PolarizedLattice(GLattice lattice, IntMatrix form);

  const GLattice& lattice() const { return lattice_; }
  const IntMatrix& form() const { return form_; }
  std::size_t g() const { return lattice_.rank() / 2; }

 private:
  GLattice lattice_;
  IntMatrix form_;
};

/// |Pf(E)|; the kernel of the polarization has order degree^2.
mpz_class degree(const PolarizedLattice& pl);

/// One enlargement of the lattice by a sigma-stable subgroup of order p.
struct IsogenyStep {
  unsigned long prime = 0;
  RatVector generator;  ///< w / p in coordinates of the lattice before the step
  IntMatrix new_basis;  ///< integer matrix of the inclusion, old coordinates -> new coordinates
};

struct Principalization {
  PolarizedLattice result;
  std::vector<IsogenyStep> steps;
  IntMatrix inclusion;  ///< product of all step matrices; inclusion^t E' inclusion = E
};

/// Repeatedly adjoins sigma-stable order-p subgroups of the polarization kernel,
/// smallest prime first, until the form becomes unimodular. Among the stable
/// lines the one spanned by a sigma-fixed vector is preferred, and within a
/// family the normalised generator that is lexicographically smallest wins.
Principalization principalize(const PolarizedLattice& pl);

/// theta^(g-1) / (g-1)! in the exterior algebra of the dual lattice, where
/// theta = sum_{i<j} E_ij e_i ∧ e_j. Requires a principal polarization.
ExteriorElement minimal_class(const PolarizedLattice& pl);

/// Kernel of m modulo a prime, as a basis in reduced row echelon form.
std::vector<IntVector> nullspace_mod_p(const IntMatrix& m, unsigned long p);

}  // namespace realab
