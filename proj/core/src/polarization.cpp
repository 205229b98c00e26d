#include "realab/polarization.hpp"

#include <optional>
#include <stdexcept>

namespace realab {

PolarizationReport check_polarization(const GLattice& lattice, const IntMatrix& form) {
  PolarizationReport r;
  r.shape = form.square() && form.rows() == lattice.rank() && lattice.rank() % 2 == 0 &&
            lattice.twist() == Twist::Even;
  if (!r.shape) {
    r.problems.push_back("form must be square of even size matching a twist-0 lattice");
    return r;
  }
  r.alternating = is_alternating(form);
  if (!r.alternating) {
    r.problems.push_back("form is not alternating");
    return r;
  }
  r.nondegenerate = pfaffian(form) != 0;
  if (!r.nondegenerate) r.problems.push_back("form is degenerate");
  r.anti_equivariant = lattice.sigma().transpose() * form * lattice.sigma() == -form;
  if (!r.anti_equivariant) r.problems.push_back("sigma^t E sigma != -E");
  return r;
}

PolarizedLattice::PolarizedLattice(GLattice lattice, IntMatrix form)
    : lattice_(std::move(lattice)), form_(std::move(form)) {
  const auto report = check_polarization(lattice_, form_);
  if (!report.valid()) throw InputError("invalid polarization: " + report.problems.front());
}

mpz_class degree(const PolarizedLattice& pl) { return abs(pfaffian(pl.form())); }

namespace {

// In-place reduced row echelon form over F_p; returns the pivot columns.
std::vector<std::size_t> rref_mod_p(IntMatrix& a, unsigned long p) {
  a = reduce_mod(a, p);
  const mpz_class mod = p;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a(r, c).get_mpz_t(), mod.get_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * inv % mod;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const mpz_class f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = (a(i, j) - f * a(r, j)) % mod;
        if (a(i, j) < 0) a(i, j) += mod;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<IntVector> nullspace_mod_p(const IntMatrix& m, unsigned long p) {
  IntMatrix a = m;
  const auto pivots = rref_mod_p(a, p);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t f = 0; f < n; ++f)
    if (!is_pivot[f]) free_cols.push_back(f);
  if (free_cols.empty()) return {};

  IntMatrix b(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    b(k, free_cols[k]) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) b(k, pivots[i]) = -a(i, free_cols[k]);
  }
  const std::size_t r = rref_mod_p(b, p).size();
  std::vector<IntVector> out(r, IntVector(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = b(i, j);
  return out;
}

namespace {

unsigned long smallest_prime_factor(const mpz_class& d) {
  if (d < 2) throw std::logic_error("no prime factor");
  for (unsigned long p = 2;; ++p) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) return p;
    if (mpz_class(p) * p > d) return d.get_ui();
  }
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

// Lexicographically smallest normalised vector of the span: the last RREF row.
std::optional<IntVector> stable_line(const IntMatrix& form, const IntMatrix& sigma, long eigen,
                                     unsigned long p) {
  const IntMatrix shifted = sigma - mpz_class(eigen) * IntMatrix::identity(sigma.rows());
  auto basis = nullspace_mod_p(stack(form, shifted), p);
  if (basis.empty()) return std::nullopt;
  return basis.back();
}

}  // namespace

Principalization principalize(const PolarizedLattice& pl) {
  const std::size_t n = pl.lattice().rank();
  IntMatrix form = pl.form();
  IntMatrix sigma = pl.lattice().sigma();
  IntMatrix inclusion = IntMatrix::identity(n);
  std::vector<IsogenyStep> steps;

  mpz_class d = abs(pfaffian(form));
  while (d != 1) {
    const unsigned long p = smallest_prime_factor(d);
    auto w = stable_line(form, sigma, 1, p);
    if (!w) w = stable_line(form, sigma, -1, p);
    if (!w) throw std::logic_error("no sigma-stable line in the p-torsion of the kernel");

    std::size_t lead = 0;
    while ((*w)[lead] == 0) ++lead;

    RatMatrix basis = RatMatrix::identity(n);  // columns generate the enlarged lattice
    RatVector gen(n);
    for (std::size_t i = 0; i < n; ++i) {
      gen[i] = mpq_class((*w)[i], mpz_class(p));
      gen[i].canonicalize();
      basis(i, lead) = gen[i];
    }
    const IntMatrix step = to_integer(inverse(basis));
    const IntMatrix new_form = to_integer(basis.transpose() * to_rational(form) * basis);
    const IntMatrix new_sigma = to_integer(to_rational(step) * to_rational(sigma) * basis);

    if (!(new_sigma * new_sigma == IntMatrix::identity(n)))
      throw std::logic_error("principalize: involution stopped squaring to one");
    if (!(new_sigma.transpose() * new_form * new_sigma == -new_form))
      throw std::logic_error("principalize: anti-equivariance lost");
    const mpz_class new_d = abs(pfaffian(new_form));
    if (new_d * p != d) throw std::logic_error("principalize: degree did not drop by p");

    steps.push_back(IsogenyStep{p, std::move(gen), step});
    inclusion = step * inclusion;
    form = new_form;
    sigma = new_sigma;
    d = new_d;
  }
  return Principalization{PolarizedLattice(GLattice(sigma), form), std::move(steps),
                          std::move(inclusion)};
}

ExteriorElement minimal_class(const PolarizedLattice& pl) {
  if (degree(pl) != 1) throw InputError("minimal class needs a principal polarization");
  const std::size_t g = pl.g();
  const ExteriorElement theta = two_form(pl.form());
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), g == 0 ? 0 : g - 1);
  return wedge_power(theta, g == 0 ? 0 : g - 1).divided_exactly(fact);
}

}  // namespace realab
