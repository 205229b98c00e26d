#pragma once

#include "realab/int_matrix.hpp"

#include <vector>

namespace realab {

/// Smith normal form u * m * v = d with u, v unimodular and
/// d_1 | d_2 | ... on the diagonal (all nonnegative).
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;  ///< exact inverse of v, tracked alongside it

  std::size_t rank() const;
  std::vector<mpz_class> invariant_factors() const;  ///< nonzero diagonal entries
};

/// Pivoting uses the smallest nonzero absolute value, ties broken by the lowest
/// (row, column) index, so the output is reproducible.
SmithForm smith_normal_form(const IntMatrix& m);

/// Columns form a basis of the integer kernel {x : m x = 0}. The basis is
/// saturated, i.e. it spans the kernel over Z and not just over Q.
IntMatrix integer_kernel(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns of m,
/// returned as a basis with rank(m) columns. Two matrices span the same lattice
/// iff their Hermite forms agree.
IntMatrix column_hermite_form(const IntMatrix& m);

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace realab
