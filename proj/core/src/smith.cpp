#include "realab/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace realab {

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  while (r < std::min(d.rows(), d.cols()) && d(r, r) != 0) ++r;
  return r;
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Working state of the elimination. Row operations act on a and u; column
// operations act on a and v, and their inverses act on the rows of v_inv.
struct Elimination {
  IntMatrix a, u, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
  }
  // row_dst -= q * row_src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) -= q * u(src, c);
  }
  // col_dst -= q * col_src; the inverse is row_src += q * row_dst on v_inv.
  void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) -= q * v(r, src);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(src, c) += q * v_inv(dst, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a,
                                                                  std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = from; i < a.rows(); ++i)
    for (std::size_t j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      mpz_class v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

// floor division so remainders are nonnegative for a positive pivot
mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Elimination e{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto piv = smallest_pivot(e.a, t);
      if (!piv) break;
      e.swap_rows(t, piv->first);
      e.swap_cols(t, piv->second);
      if (e.a(t, t) < 0) e.negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < e.a.rows(); ++i) {
        e.add_row(i, t, floor_div(e.a(i, t), e.a(t, t)));
        if (e.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < e.a.cols(); ++j) {
        e.add_col(j, t, floor_div(e.a(t, j), e.a(t, t)));
        if (e.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // Divisibility: fold any offending row into the pivot row and retry.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < e.a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < e.a.cols(); ++j)
          if (e.a(i, j) % e.a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      e.add_row(t, *bad_row, -1);
    }
    if (e.a(t, t) == 0) break;
  }
  return SmithForm{std::move(e.u), std::move(e.a), std::move(e.v), std::move(e.v_inv)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = s.v(i, j);
  return k;
}

IntMatrix column_hermite_form(const IntMatrix& m) {
  // Row-style HNF of the transpose, computed by repeated gcd elimination.
  IntMatrix a = m.transpose();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (!piv || abs(a(i, c)) < abs(a(*piv, c)))) piv = i;
      if (!piv) break;
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(*piv, j));
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        mpz_class q = floor_div(a(i, c), a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= a.rows() || a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(a(i, c), a(r, c));
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMatrix h(m.rows(), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) h(j, i) = a(i, j);
  return h;
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return column_hermite_form(a) == column_hermite_form(b);
}

}  // namespace realab
