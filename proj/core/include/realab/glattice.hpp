#pragma once

#include "realab/int_matrix.hpp"

#include <cstdint>
#include <vector>

namespace realab {

/// Parity of a Tate twist Z(k); only k mod 2 matters.
enum class Twist : std::uint8_t { Even = 0, Odd = 1 };

inline Twist twist_of(long k) { return (k % 2 == 0) ? Twist::Even : Twist::Odd; }
inline Twist operator+(Twist a, Twist b) {
  return static_cast<Twist>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int twist_sign(Twist t) { return t == Twist::Even ? 1 : -1; }

/// A free Z-module of finite rank with an action of G = Z/2.
///
/// The generator acts by (-1)^twist * sigma; sigma itself must square to the
/// identity. The lattice is immutable once constructed.
class GLattice {
 public:
  /// Throws InputError unless sigma is square with sigma * sigma = 1.
  GLattice(IntMatrix sigma, Twist twist = Twist::Even);

  static GLattice trivial(std::size_t rank = 1);  ///< Z^rank with trivial action
  static GLattice sign(std::size_t rank = 1);     ///< Z(1)^rank
  static GLattice induced(std::size_t copies = 1);///< Z[G]^copies, sigma = swap blocks
  static GLattice zero();

  std::size_t rank() const { return sigma_.rows(); }
  const IntMatrix& sigma() const { return sigma_; }
  Twist twist() const { return twist_; }

  /// The matrix actually implementing the generator: (-1)^twist * sigma.
  IntMatrix effective_action() const;

  friend bool operator==(const GLattice&, const GLattice&) = default;

 private:
  IntMatrix sigma_;
  Twist twist_;
};

/// F2-dimensions of the positive-degree Tate cohomology groups H^p(G, L);
/// only two numbers because the groups are 2-periodic.
struct TateRanks {
  std::size_t h_odd = 0;   ///< ker(1 + s) / im(1 - s)
  std::size_t h_even = 0;  ///< ker(1 - s) / im(1 + s)

  std::size_t in_degree(std::size_t p) const { return p % 2 ? h_odd : h_even; }
  friend bool operator==(const TateRanks&, const TateRanks&) = default;
};

TateRanks tate_cohomology(const GLattice& l);

/// Throws InputError on a twist mismatch; combine such lattices through normalized().
GLattice direct_sum(const GLattice& a, const GLattice& b);

/// Same G-module with the twist folded into sigma, so twist() is Even.
GLattice normalized(const GLattice& l);
GLattice tensor(const GLattice& a, const GLattice& b);

/// q-th exterior power in the lexicographic basis of q-subsets; the action is
/// given by q x q minors of sigma and the twist becomes q * twist.
GLattice exterior_power(const GLattice& l, std::size_t q);

GLattice retwist(const GLattice& l, long k);

/// Contragredient lattice: sigma replaced by its transpose.
GLattice dual(const GLattice& l);

/// Basis (as columns) of the invariant sublattice ker(s - 1) of the effective action.
IntMatrix invariant_basis(const GLattice& l);

/// All q-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t q);

/// Minor matrix of m on q-subsets in lexicographic order (the matrix of wedge^q m).
IntMatrix compound_matrix(const IntMatrix& m, std::size_t q);

}  // namespace realab
