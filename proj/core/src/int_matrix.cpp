#include "realab/int_matrix.hpp"

#include <utility>

namespace realab {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InputError("matrix entry is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

mpq_class determinant(const RatMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      mpq_class f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

std::size_t rank_rational(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      mpq_class f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return rank_rational(to_rational(m)); }

std::size_t rank_mod_p(const IntMatrix& m, unsigned long p) {
  IntMatrix a = reduce_mod(m, p);
  const mpz_class mod = p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a(r, c).get_mpz_t(), mod.get_mpz_t());
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      mpz_class f = a(i, c) * inv % mod;
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = (a(i, j) - f * a(r, j)) % mod;
        if (a(i, j) < 0) a(i, j) += mod;
      }
    }
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw InputError("inverse of a singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const mpq_class d = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const mpq_class f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  mpz_class d = determinant(m);
  return d == 1 || d == -1;
}

bool is_symmetric(const IntMatrix& m) { return m.square() && m == m.transpose(); }

bool is_alternating(const IntMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

bool is_symmetric(const RatMatrix& m) { return m.square() && m == m.transpose(); }

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

mpz_class pfaffian(const IntMatrix& m) {
  if (!is_alternating(m)) throw InputError("pfaffian of a non-alternating matrix");
  const std::size_t n = m.rows();
  if (n % 2 == 1) return 0;
  RatMatrix a = to_rational(m);
  mpq_class pf = 1;
  // Eliminate two rows and columns at a time: Pf(A) = a01 * Pf(Schur complement).
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && a(k, piv) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, piv));
      pf = -pf;
    }
    const mpq_class pivot = a(k, k + 1);
    pf *= pivot;
    // Schur complement with respect to the block [[0, p], [-p, 0]].
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j) {
        a(i, j) += (a(i, k) * a(k + 1, j) - a(i, k + 1) * a(k, j)) / pivot;
      }
  }
  if (pf.get_den() != 1) throw std::logic_error("pfaffian: non-integral result");
  return pf.get_num();
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

IntMatrix reduce_mod(const IntMatrix& m, unsigned long p) {
  IntMatrix r = m;
  const mpz_class mod = p;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      r(i, j) %= mod;
      if (r(i, j) < 0) r(i, j) += mod;
    }
  return r;
}

IntMatrix standard_symplectic(std::size_t g) {
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

IntVector multiply(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw InputError("matrix-vector product: shape mismatch");
  IntVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace realab
