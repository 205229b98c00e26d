#include "realab/fourier.hpp"

#include <functional>
#include <stdexcept>

namespace realab {

namespace {

Monomial low_mask(std::size_t bits) {
  return bits >= 32 ? ~Monomial{0} : (Monomial{1} << bits) - 1;
}

// sum_i sign * b_i ∧ b_{n+i} on 2n generators.
ExteriorElement pairing_class(std::size_t n, long sign) {
  ExteriorElement c(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    c.add_term((Monomial{1} << i) | (Monomial{1} << (n + i)), sign);
  return c;
}

ExteriorElement exponential(const ExteriorElement& c1, std::size_t top) {
  ExteriorElement ch = ExteriorElement::one(c1.generators());
  ExteriorElement power = ch;
  mpz_class fact = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    power = wedge(power, c1);
    if (power.is_zero()) break;
    fact *= n;
    ch += power.divided_exactly(fact);
  }
  return ch;
}

// pi_{2*}(ch ∧ x) for x on the first 2g of 4g generators; the result lives on
// the last 2g generators, shifted down.
ExteriorElement transform(std::size_t g, const ExteriorElement& ch, const ExteriorElement& x,
                          const FourierOptions& opt) {
  const std::size_t n = 2 * g;
  if (x.generators() != n) throw InputError("fourier: element has the wrong number of generators");
  if (!x.is_zero() && !x.homogeneous_degree()) throw InputError("fourier: input is not homogeneous");

  ExteriorElement lifted(2 * n);
  for (const auto& [m, c] : x.terms()) lifted.add_term(m, c);
  const ExteriorElement prod = wedge(ch, lifted);

  const Monomial top = low_mask(n);
  const long orientation = (g * (g - 1) / 2) % 2 ? -1 : 1;
  ExteriorElement out(n);
  for (const auto& [m, c] : prod.terms()) {
    // A-bits precede the Â-bits, so the monomial is already (A part) ∧ (Â part).
    if ((m & top) != top) continue;
    const Monomial rest = m >> n;
    mpz_class coef = orientation * c;
    if (opt.corrupt_sign) {
      const std::size_t d = monomial_degree(rest);
      if ((d * (d - 1) / 2) % 2) coef = -coef;
    }
    out.add_term(rest, coef);
  }
  return out;
}

IntMatrix matrix_of(std::size_t g, std::size_t i,
                    const std::function<ExteriorElement(const ExteriorElement&)>& f) {
  const std::size_t n = 2 * g;
  if (i > n) throw InputError("fourier: degree out of range");
  const auto src = lexicographic_subsets(n, i);
  const auto dst_count = lexicographic_subsets(n, n - i).size();
  IntMatrix m(dst_count, src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    Monomial mono = 0;
    for (std::size_t b : src[col]) mono |= Monomial{1} << b;
    const IntVector v = coordinates(f(ExteriorElement::monomial(n, mono)), n - i);
    for (std::size_t row = 0; row < dst_count; ++row) m(row, col) = v[row];
  }
  return m;
}

}  // namespace

ExteriorElement poincare_c1(const RealTorus& a) { return pairing_class(2 * a.g(), 1); }

ExteriorElement poincare_c1_identified(const IntMatrix& form) {
  if (!is_alternating(form) || form.rows() % 2) throw InputError("poincare_c1: bad form");
  const std::size_t n = form.rows();
  ExteriorElement c(2 * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (form(j, i) == 0) continue;
      c += wedge(ExteriorElement::generator(2 * n, j),
                 ExteriorElement::monomial(2 * n, Monomial{1} << (n + i), form(j, i)));
    }
  return c;
}

ExteriorElement chern_character(const RealTorus& a) {
  return exponential(poincare_c1(a), 2 * a.g());
}

ExteriorElement fourier(const RealTorus& a, const ExteriorElement& x, const FourierOptions& opt) {
  return transform(a.g(), chern_character(a), x, opt);
}

ExteriorElement fourier_dual(const RealTorus& a, const ExteriorElement& y,
                             const FourierOptions& opt) {
  // Pulling c_1 back along the swap A x Â -> Â x A gives -sum_i b_i ∧ b_{2g+i}
  // once Â is placed first.
  const ExteriorElement ch = exponential(pairing_class(2 * a.g(), -1), 2 * a.g());
  return transform(a.g(), ch, y, opt);
}

IntMatrix fourier_matrix(const RealTorus& a, std::size_t i, const FourierOptions& opt) {
  const ExteriorElement ch = chern_character(a);
  return matrix_of(a.g(), i,
                   [&](const ExteriorElement& x) { return transform(a.g(), ch, x, opt); });
}

IntMatrix fourier_dual_matrix(const RealTorus& a, std::size_t i) {
  const ExteriorElement ch = exponential(pairing_class(2 * a.g(), -1), 2 * a.g());
  return matrix_of(a.g(), i, [&](const ExteriorElement& y) { return transform(a.g(), ch, y, {}); });
}

GLattice dual_h1(const RealTorus& a) { return GLattice(-a.h1().sigma().transpose()); }

ExteriorElement theta_class(const IntMatrix& form) { return two_form(form); }

ExteriorElement theta_dual_class(const IntMatrix& form) {
  const IntMatrix dual_form = to_integer(-inverse(form));
  return two_form(dual_form);
}

bool beauville_identity_holds(const RealTorus& a, const IntMatrix& form,
                              const FourierOptions& opt) {
  const std::size_t g = a.g();
  if (g == 0) return true;
  const ExteriorElement lhs = fourier(a, theta_class(form), opt);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), g - 1);
  ExteriorElement rhs = wedge_power(theta_dual_class(form), g - 1).divided_exactly(fact);
  if ((g - 1) % 2) rhs = -rhs;
  return lhs == rhs;
}

int inversion_sign(const RealTorus& a, std::size_t i) {
  const IntMatrix composite = fourier_dual_matrix(a, 2 * a.g() - i) * fourier_matrix(a, i);
  const std::size_t n = composite.rows();
  if (n == 0) throw std::logic_error("inversion_sign: empty degree");
  const mpz_class c = composite(0, 0);
  if (!(composite == c * IntMatrix::identity(n)) || (c != 1 && c != -1))
    throw std::logic_error("inversion_sign: composite is not ±identity");
  return c.get_si();
}

bool fourier_equivariant(const RealTorus& a, std::size_t i) {
  const std::size_t g = a.g();
  const IntMatrix src = compound_matrix(a.h1().sigma(), i);
  const IntMatrix dst = compound_matrix(dual_h1(a).sigma(), 2 * g - i);
  const IntMatrix f = fourier_matrix(a, i);
  const mpz_class sign = ((g + i) % 2) ? -1 : 1;
  return f * src == sign * (dst * f);
}

bool fourier_functoriality_check(const IntMatrix& phi, const ExteriorElement& x) {
  if (!phi.square() || phi.rows() % 2 || phi.rows() != x.generators())
    throw InputError("functoriality: phi must be square of size 2g");
  const mpz_class det = determinant(phi);
  if (det == 0) throw InputError("functoriality: phi must have finite cokernel");
  const RealTorus t(phi.rows() / 2, GLattice::trivial(phi.rows()));
  const ExteriorElement lhs = apply_linear(phi, fourier(t, apply_linear(phi.transpose(), x)));
  const ExteriorElement rhs = det * fourier(t, x);
  return lhs == rhs;
}

}  // namespace realab
