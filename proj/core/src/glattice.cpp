#include "realab/glattice.hpp"

#include "realab/smith.hpp"

#include <algorithm>
#include <numeric>

namespace realab {

GLattice::GLattice(IntMatrix sigma, Twist twist) : sigma_(std::move(sigma)), twist_(twist) {
  if (!sigma_.square()) throw InputError("G-lattice action must be a square matrix");
  if (!(sigma_ * sigma_ == IntMatrix::identity(sigma_.rows())))
    throw InputError("G-lattice action must be an involution");
}

GLattice GLattice::trivial(std::size_t rank) { return GLattice(IntMatrix::identity(rank)); }

GLattice GLattice::sign(std::size_t rank) {
  return GLattice(IntMatrix::identity(rank), Twist::Odd);
}

GLattice GLattice::induced(std::size_t copies) {
  IntMatrix s(2 * copies, 2 * copies);
  for (std::size_t i = 0; i < copies; ++i) {
    s(2 * i, 2 * i + 1) = 1;
    s(2 * i + 1, 2 * i) = 1;
  }
  return GLattice(std::move(s));
}

GLattice GLattice::zero() { return GLattice(IntMatrix(0, 0)); }

IntMatrix GLattice::effective_action() const {
  return twist_ == Twist::Even ? sigma_ : -sigma_;
}

namespace {

// F2-dimension of ker(n) / im(d) where n * d = 0 and 2 annihilates the quotient.
std::size_t quotient_dimension(const IntMatrix& n, const IntMatrix& d) {
  const std::size_t dim = n.cols();
  if (dim == 0) return 0;
  SmithForm s = smith_normal_form(n);
  const std::size_t r = s.rank();
  if (r == dim) return 0;
  // Express im(d) in the kernel basis given by the last columns of v.
  IntMatrix coords = s.v_inv * d;
  IntMatrix c(dim - r, d.cols());
  for (std::size_t i = r; i < dim; ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) c(i - r, j) = coords(i, j);
  SmithForm sc = smith_normal_form(c);
  const std::size_t rc = sc.rank();
  std::size_t count = (dim - r) - rc;
  if (count != 0) throw std::logic_error("Tate cohomology quotient is not torsion");
  for (const auto& f : sc.invariant_factors()) {
    if (f == 2)
      ++count;
    else if (f != 1)
      throw std::logic_error("Tate cohomology quotient is not 2-torsion");
  }
  return count;
}

}  // namespace

TateRanks tate_cohomology(const GLattice& l) {
  const IntMatrix s = l.effective_action();
  const IntMatrix one = IntMatrix::identity(l.rank());
  const IntMatrix plus = one + s;
  const IntMatrix minus = one - s;
  return TateRanks{quotient_dimension(plus, minus), quotient_dimension(minus, plus)};
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  if (a.twist() != b.twist()) throw InputError("direct sum of lattices with different twists");
  return GLattice(block_diagonal(a.sigma(), b.sigma()), a.twist());
}

GLattice normalized(const GLattice& l) { return GLattice(l.effective_action()); }

GLattice tensor(const GLattice& a, const GLattice& b) {
  return GLattice(kronecker(a.sigma(), b.sigma()), a.twist() + b.twist());
}

namespace {

void subsets_rec(std::size_t n, std::size_t q, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == q) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, q, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> lexicographic_subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> cur;
  subsets_rec(n, q, 0, cur, out);
  return out;
}

IntMatrix compound_matrix(const IntMatrix& m, std::size_t q) {
  if (!m.square()) throw InputError("compound matrix of a non-square matrix");
  const auto idx = lexicographic_subsets(m.rows(), q);
  IntMatrix c(idx.size(), idx.size());
  IntMatrix minor(q, q);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) minor(i, j) = m(idx[a][i], idx[b][j]);
      c(a, b) = determinant(minor);
    }
  return c;
}

GLattice exterior_power(const GLattice& l, std::size_t q) {
  if (q > l.rank()) throw InputError("exterior power degree exceeds the rank");
  return GLattice(compound_matrix(l.sigma(), q), q % 2 ? l.twist() : Twist::Even);
}

GLattice retwist(const GLattice& l, long k) { return GLattice(l.sigma(), l.twist() + twist_of(k)); }

GLattice dual(const GLattice& l) { return GLattice(l.sigma().transpose(), l.twist()); }

IntMatrix invariant_basis(const GLattice& l) {
  return integer_kernel(l.effective_action() - IntMatrix::identity(l.rank()));
}

}  // namespace realab
