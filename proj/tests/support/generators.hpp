#pragma once

#include "realab/glattice.hpp"
#include "realab/int_matrix.hpp"
#include "realab/polarization.hpp"
#include "realab/smith.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace realab::testkit {

using Rng = std::mt19937_64;

inline IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t moves, long bound = 1) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-bound, bound);
  for (std::size_t t = 0; t < moves; ++t) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const mpz_class c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += c * u(r, i);
  }
  return u;
}

inline IntMatrix inverse_unimodular(const IntMatrix& u) { return to_integer(inverse(u)); }

inline bool entries_within(const IntMatrix& m, long bound) {
  for (const auto& e : m.entries())
    if (abs(e) > bound) return false;
  return true;
}

/// Involution with entries in {-1, 0, 1}: a random block sum of the elementary
/// involutions, conjugated by signed permutations and by elementary matrices
/// whenever the result stays in range.
inline IntMatrix random_small_involution(Rng& rng, std::size_t n) {
  const std::vector<IntMatrix> blocks2{IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1, 1}, {0, -1}},
                                       IntMatrix{{1, 0}, {1, -1}}, IntMatrix{{-1, 1}, {0, 1}}};
  IntMatrix s(0, 0);
  std::uniform_int_distribution<int> pick(0, 5);
  while (s.rows() < n) {
    const int c = pick(rng);
    if (c < 2 || s.rows() + 1 == n)
      s = block_diagonal(s, IntMatrix{{c == 0 ? 1 : -1}});
    else
      s = block_diagonal(s, blocks2[c - 2]);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(n, n);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = flip(rng) ? 1 : -1;
  s = p * s * p.transpose();
  for (int tries = 0; tries < 4; ++tries) {
    const IntMatrix u = random_unimodular(rng, n, 1);
    const IntMatrix c = inverse_unimodular(u) * s * u;
    if (entries_within(c, 1)) s = c;
  }
  return s;
}

/// Dense random rational symmetric positive definite matrix (A^t A + I scaled).
inline RatMatrix random_spd(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<long> coef(-3, 3);
  IntMatrix a(n, n);
  for (auto i = 0u; i < n; ++i)
    for (auto j = 0u; j < n; ++j) a(i, j) = coef(rng);
  RatMatrix m = to_rational(a.transpose() * a + IntMatrix::identity(n));
  std::uniform_int_distribution<long> den(1, 4);
  const mpq_class scale(1, den(rng));
  return scale * m;
}

/// The principal involution [[I, M], [0, -I]] for a random symmetric 0/1 matrix M.
inline IntMatrix random_period_involution(Rng& rng, std::size_t g) {
  std::bernoulli_distribution bit(0.5);
  IntMatrix f(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    f(i, i) = 1;
    f(g + i, g + i) = -1;
    for (std::size_t j = i; j < g; ++j) f(i, g + j) = f(j, g + i) = bit(rng) ? 1 : 0;
  }
  return f;
}

/// Random valid polarized lattice of degree <= max_degree: a sigma-stable
/// sublattice of a principally polarized one, in a random basis.
inline PolarizedLattice random_polarized(Rng& rng, std::size_t g, long max_degree) {
  const std::size_t n = 2 * g;
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<long> modulus(1, 12);
  std::uniform_int_distribution<long> scale(1, 3);
  for (;;) {
    const IntMatrix sigma = random_period_involution(rng, g);
    const IntMatrix j = standard_symplectic(g);
    const long m = modulus(rng);
    IntMatrix gens(n, 3 * n);
    IntMatrix b(n, 1);
    for (std::size_t r = 0; r < n; ++r) b(r, 0) = coef(rng);
    const IntMatrix sb = sigma * b;
    for (std::size_t r = 0; r < n; ++r) {
      gens(r, 0) = b(r, 0);
      gens(r, 1) = sb(r, 0);
      gens(r, 2 + r) = m;
    }
    const IntMatrix a = column_hermite_form(gens);
    if (a.cols() != n) continue;
    const long c = scale(rng);
    mpz_class det = abs(determinant(a));
    for (std::size_t i = 0; i < g; ++i) det *= c;
    if (det > max_degree) continue;
    const IntMatrix restricted = to_integer(inverse(a) * to_rational(sigma * a));
    const IntMatrix u = random_unimodular(rng, n, 2 * n);
    const IntMatrix uinv = inverse_unimodular(u);
    const IntMatrix s2 = uinv * restricted * u;
    const IntMatrix e2 = mpz_class(c) * u.transpose() * a.transpose() * j * a * u;
    return PolarizedLattice(GLattice(s2), e2);
  }
}

/// Brute-force order of the Tate group ker(1 + eps s) / im(1 - eps s) of the
/// induced action on (Z/m)^n, by enumerating all m^n vectors.
inline std::size_t brute_tate_order(const IntMatrix& action, long m, int eps) {
  const std::size_t n = action.rows();
  std::vector<long> s(n * n);
  for (std::size_t i = 0; i < n * n; ++i) s[i] = action.entries()[i].get_si();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
  std::vector<char> in_image(total, 0);
  std::size_t cocycles = 0;
  std::size_t boundaries = 0;
  std::vector<long> x(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<long>(c % static_cast<std::size_t>(m));
      c /= static_cast<std::size_t>(m);
    }
    bool cocycle = true;
    std::size_t image = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < n; ++i) {
      long sx = 0;
      for (std::size_t j = 0; j < n; ++j) sx += s[i * n + j] * x[j];
      const long plus = ((x[i] + eps * sx) % m + m) % m;
      const long minus = ((x[i] - eps * sx) % m + m) % m;
      cocycle = cocycle && plus == 0;
      image += static_cast<std::size_t>(minus) * place;
      place *= static_cast<std::size_t>(m);
    }
    cocycles += cocycle;
    if (!in_image[image]) {
      in_image[image] = 1;
      ++boundaries;
    }
  }
  return cocycles / boundaries;
}

struct OracleTate {
  std::size_t sum = 0;       ///< h_odd + h_even, from (Z/4)^n
  long difference = 0;       ///< h_even - h_odd, the Herbrand quotient exponent
  std::size_t odd_order3 = 1;
  std::size_t even_order3 = 1;
  long h_odd() const { return (static_cast<long>(sum) - difference) / 2; }
  long h_even() const { return (static_cast<long>(sum) + difference) / 2; }
};

inline std::size_t log2_exact(std::size_t v) {
  std::size_t k = 0;
  while (v > 1) {
    v >>= 1;
    ++k;
  }
  return k;
}

/// Independent Tate oracle. Since 2 kills the Tate groups of L, the sequence
/// 0 -> L -4-> L -> L/4L -> 0 makes |H^i(L/4L)| = 2^(h_odd + h_even) in both
/// parities; the trace of the action gives h_even - h_odd. The Z/3 reduction
/// must have trivial Tate cohomology.
inline OracleTate tate_oracle(const GLattice& l) {
  const IntMatrix s = l.effective_action();
  OracleTate o;
  const std::size_t odd4 = brute_tate_order(s, 4, 1);
  const std::size_t even4 = brute_tate_order(s, 4, -1);
  o.sum = odd4 == even4 ? log2_exact(odd4) : static_cast<std::size_t>(-1);
  long trace = 0;
  for (std::size_t i = 0; i < s.rows(); ++i) trace += s(i, i).get_si();
  o.difference = trace;
  o.odd_order3 = brute_tate_order(s, 3, 1);
  o.even_order3 = brute_tate_order(s, 3, -1);
  return o;
}

}  // namespace realab::testkit
