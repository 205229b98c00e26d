#pragma once

#include "realab/exterior.hpp"
#include "realab/glattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace realab {

/// A real torus of dimension g, recorded through H^1 of its complex points as a
/// rank-2g G-lattice with even twist.
class RealTorus {
 public:
  RealTorus(std::size_t g, GLattice h1);

  /// E(R) connected: H^1 is the induced module Z[G].
  static RealTorus elliptic_connected();
  /// E(R) with two components: H^1 = Z x ⊕ Z y with x fixed and y negated.
  static RealTorus elliptic_split();
  static RealTorus point();
  /// Product of elliptic factors; split[i] selects the split type for factor i.
  static RealTorus elliptic_product(const std::vector<bool>& split);

  std::size_t g() const { return g_; }
  const GLattice& h1() const { return h1_; }

 private:
  std::size_t g_;
  GLattice h1_;
};

RealTorus product(const RealTorus& a, const RealTorus& b);

/// Integral cohomology of the complex points as the exterior algebra on H^1.
struct CohomologyRing {
  RealTorus torus;
  std::vector<GLattice> graded;  ///< graded[q] = ∧^q H^1 with twist 0

  const GLattice& degree(std::size_t q) const;
  std::size_t total_rank() const;
  /// Cup product of two elements written in the 2g generators of H^1.
  ExteriorElement cup(const ExteriorElement& a, const ExteriorElement& b) const;
};

CohomologyRing cohomology_ring(const RealTorus& t);

/// Ranks of the graded pieces of H^{2k}_G(Z(k)) coming from the degenerate
/// Hochschild-Serre spectral sequence.
struct FiltrationProfile {
  std::size_t degree = 0;            ///< 2k
  std::size_t twist = 0;             ///< k
  std::map<std::size_t, std::size_t> ranks;  ///< p -> dim H^p(G, H^{2k-p}(Z(k))), p = 1..2k
  std::size_t free_rank = 0;         ///< rank of H^{2k}(Z(k))^G

  std::size_t torsion_dimension() const;
};

FiltrationProfile hs_profile(const CohomologyRing& r, std::size_t k);

/// Same computation for an arbitrary H^1 lattice of any rank (used for spaces
/// whose cohomology is still an exterior algebra, such as products of circles).
FiltrationProfile hs_profile(const GLattice& h1, std::size_t k);

/// Number of connected components of the real locus, read off as
/// 2^dim H^1(G, H^{2g-1}(Z(g))).
mpz_class pi0_real_locus(const RealTorus& t);

/// Betti number dim H^i(X(R), Z/2) of the real locus, a disjoint union of g-tori.
mpz_class real_locus_betti(const RealTorus& t, std::size_t i);

/// sum_{p >= 1} dim H^{k-2p}(X(R), Z/2).
mpz_class topological_correction(const RealTorus& t, std::size_t k);

/// F2-dimension of H^4_G(A(C), Z(2))_0[2] for a threefold; throws unless g = 3.
long hdg0_torsion_budget(const RealTorus& t);

struct KunnethSummand {
  std::vector<std::size_t> degrees;  ///< one cohomological degree per factor
  std::size_t dimension = 0;         ///< dim H^1(G, ⊗ H^{d_i}(Z(k)))
};

struct KunnethDecomposition {
  std::vector<KunnethSummand> summands;
  std::size_t total = 0;   ///< sum of summand dimensions
  std::size_t direct = 0;  ///< h_odd of the degree-n piece of the product torus
};

KunnethDecomposition kunneth_h_odd(const RealTorus& a, const RealTorus& b, std::size_t n, long k);

/// Multi-factor version; summands run over all degree vectors with sum n.
KunnethDecomposition kunneth_h_odd(const std::vector<RealTorus>& factors, std::size_t n, long k);

mpz_class binomial(std::size_t n, std::size_t k);

}  // namespace realab
