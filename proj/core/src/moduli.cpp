#include "realab/moduli.hpp"

#include "realab/smith.hpp"

#include <stdexcept>

namespace realab {

void RealType::validate() const {
  if (g == 0) throw InputError("type: g must be positive");
  if (r > g) throw InputError("type: r exceeds g");
  if (r == 0 && alpha != 0) throw InputError("type: r = 0 requires alpha = 0");
  if (r % 2 == 1 && alpha != 1) throw InputError("type: odd r requires alpha = 1");
  if (r > 0 && r % 2 == 0 && alpha != 1 && alpha != 2)
    throw InputError("type: even nonzero r requires alpha in {1, 2}");
}

std::string RealType::label() const {
  if (r == 0) return "(0)";
  return "(" + std::to_string(r) + "," + std::to_string(alpha) + ")";
}

void PeriodData::validate() const {
  if (g == 0) throw InputError("period data: g must be positive");
  if (m.rows() != g || m.cols() != g) throw InputError("period data: M must be g x g");
  if (!is_symmetric(m)) throw InputError("period data: M must be symmetric");
  if (n.rows() != g || n.cols() != g) throw InputError("period data: N must be g x g");
  if (!is_positive_definite(n)) throw InputError("period data: N must be positive definite");
}

IntMatrix normal_form_matrix(const RealType& t) {
  t.validate();
  IntMatrix m(t.g, t.g);
  for (std::size_t i = 0; i < t.r; ++i) {
    if (t.alpha == 1)
      m(i, i) = 1;
    else
      m(i, t.r - 1 - i) = 1;
  }
  return m;
}

RealType classify_type(const IntMatrix& m) {
  if (!is_symmetric(m)) throw InputError("classify_type: M must be symmetric");
  RealType t;
  t.g = m.rows();
  t.r = rank_mod_p(m, 2);
  if (t.r == 0) {
    t.alpha = 0;
    return t;
  }
  bool even_diagonal = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (mpz_odd_p(m(i, i).get_mpz_t())) even_diagonal = false;
  t.alpha = (t.r % 2 == 0 && even_diagonal) ? 2 : 1;
  return t;
}

RealType type_from_involution(const GLattice& lattice, const IntMatrix& form) {
  const std::size_t n = lattice.rank();
  if (n % 2 || !form.square() || form.rows() != n)
    throw InputError("type_from_involution: shape mismatch");
  const IntMatrix s = lattice.effective_action();
  const IntMatrix fixed = invariant_basis(lattice);
  const std::size_t g = n / 2;
  if (fixed.cols() != g) throw InputError("type_from_involution: fixed sublattice has wrong rank");

  // Extend the (saturated) fixed sublattice to a basis; u^{-1} carries it to the first g columns.
  const SmithForm snf = smith_normal_form(fixed);
  const IntMatrix u_inv = to_integer(inverse(snf.u));
  IntMatrix complement(n, g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < g; ++j) complement(i, j) = u_inv(i, g + j);

  const IntMatrix one_plus = IntMatrix::identity(n) + s;
  const IntMatrix q = complement.transpose() * form * one_plus * complement;
  return classify_type(reduce_mod(q, 2));
}

GLattice involution_from_period(const PeriodData& pd) {
  pd.validate();
  const std::size_t g = pd.g;
  IntMatrix f(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    f(i, i) = 1;
    f(g + i, g + i) = -1;
    for (std::size_t j = 0; j < g; ++j) f(i, g + j) = pd.m(i, j);
  }
  if (!(f * f == IntMatrix::identity(2 * g)))
    throw std::logic_error("involution_from_period: F^2 != 1");
  const IntMatrix j = standard_symplectic(g);
  if (!(f.transpose() * j * f == -j))
    throw std::logic_error("involution_from_period: F does not reverse the symplectic form");
  GLattice lattice(f);
  if (type_from_involution(lattice, j) != classify_type(pd.m))
    throw std::logic_error("involution_from_period: type not recoverable from F");
  return lattice;
}

bool gl_tau_member(const IntMatrix& t, const RealType& tau) {
  tau.validate();
  if (!t.square() || t.rows() != tau.g) throw InputError("gl_tau_member: T must be g x g");
  if (!is_unimodular(t)) throw InputError("gl_tau_member: T must be unimodular");
  const IntMatrix m = normal_form_matrix(tau);
  return reduce_mod(t.transpose() * m * t, 2) == reduce_mod(m, 2);
}

std::vector<RealType> enumerate_types(std::size_t g) {
  if (g == 0) throw InputError("enumerate_types: g must be positive");
  std::vector<RealType> out{{g, 0, 0}};
  for (std::size_t r = 1; r <= g; ++r) {
    out.push_back({g, r, 1});
    if (r % 2 == 0) out.push_back({g, r, 2});
  }
  return out;
}

std::vector<std::pair<RealType, mpz_class>> pi0_by_type(std::size_t g) {
  std::vector<std::pair<RealType, mpz_class>> out;
  for (const auto& t : enumerate_types(g)) {
    PeriodData pd{g, normal_form_matrix(t), RatMatrix::identity(g)};
    const GLattice lambda = involution_from_period(pd);
    out.emplace_back(t, pi0_real_locus(RealTorus(g, dual(lambda))));
  }
  return out;
}

}  // namespace realab
