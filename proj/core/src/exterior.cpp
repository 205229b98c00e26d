#include "realab/exterior.hpp"

#include "realab/glattice.hpp"

#include <bit>
#include <sstream>

namespace realab {

std::size_t monomial_degree(Monomial m) { return static_cast<std::size_t>(std::popcount(m)); }

int wedge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  std::size_t inversions = 0;
  Monomial rest = b;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const Monomial above = (j + 1 >= 32) ? 0u : ~((Monomial{1} << (j + 1)) - 1);
    inversions += monomial_degree(a & above);
  }
  return inversions % 2 ? -1 : 1;
}

ExteriorElement ExteriorElement::one(std::size_t generators) {
  return monomial(generators, 0);
}

ExteriorElement ExteriorElement::generator(std::size_t generators, std::size_t i) {
  if (i >= generators) throw InputError("generator index out of range");
  return monomial(generators, Monomial{1} << i);
}

ExteriorElement ExteriorElement::monomial(std::size_t generators, Monomial m, const mpz_class& c) {
  if (generators > kMaxGenerators) throw InputError("too many exterior generators");
  if (generators < kMaxGenerators && (m >> generators) != 0)
    throw InputError("monomial uses an unknown generator");
  ExteriorElement e(generators);
  e.add_term(m, c);
  return e;
}

mpz_class ExteriorElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void ExteriorElement::add_term(Monomial m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> ExteriorElement::homogeneous_degree() const {
  std::optional<std::size_t> d;
  for (const auto& [m, c] : terms_) {
    if (!d)
      d = monomial_degree(m);
    else if (*d != monomial_degree(m))
      return std::nullopt;
  }
  return d;
}

ExteriorElement ExteriorElement::component(std::size_t degree) const {
  ExteriorElement out(generators_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == degree) out.terms_.emplace(m, c);
  return out;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  if (o.generators_ != generators_) throw InputError("exterior algebras differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  if (o.generators_ != generators_) throw InputError("exterior algebras differ");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExteriorElement operator*(const mpz_class& s, const ExteriorElement& a) {
  ExteriorElement out(a.generators_);
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

ExteriorElement ExteriorElement::divided_exactly(const mpz_class& d) const {
  ExteriorElement out(generators_);
  for (const auto& [m, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::logic_error("inexact division in the exterior algebra");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.terms_.emplace(m, q);
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.generators() != b.generators()) throw InputError("exterior algebras differ");
  ExteriorElement out(a.generators());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      mpz_class c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

ExteriorElement wedge_power(const ExteriorElement& a, std::size_t n) {
  ExteriorElement out = ExteriorElement::one(a.generators());
  for (std::size_t i = 0; i < n && !out.is_zero(); ++i) out = wedge(out, a);
  return out;
}

ExteriorElement apply_linear(const IntMatrix& m, const ExteriorElement& x) {
  if (m.cols() != x.generators()) throw InputError("linear map does not match the algebra");
  std::vector<ExteriorElement> images;
  images.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    ExteriorElement img(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) img.add_term(Monomial{1} << i, m(i, j));
    images.push_back(std::move(img));
  }
  ExteriorElement out(m.rows());
  for (const auto& [mono, c] : x.terms()) {
    ExteriorElement term = ExteriorElement::monomial(m.rows(), 0, c);
    Monomial rest = mono;
    while (rest && !term.is_zero()) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      term = wedge(term, images[static_cast<std::size_t>(j)]);
    }
    out += term;
  }
  return out;
}

ExteriorElement two_form(const IntMatrix& form) {
  if (!is_alternating(form)) throw InputError("two_form needs an alternating matrix");
  ExteriorElement out(form.rows());
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = i + 1; j < form.cols(); ++j)
      out.add_term((Monomial{1} << i) | (Monomial{1} << j), form(i, j));
  return out;
}

Monomial lexicographic_monomial(std::size_t generators, std::size_t q, std::size_t index) {
  const auto subsets = lexicographic_subsets(generators, q);
  if (index >= subsets.size()) throw InputError("multi-index out of range");
  Monomial m = 0;
  for (std::size_t i : subsets[index]) m |= Monomial{1} << i;
  return m;
}

IntVector coordinates(const ExteriorElement& x, std::size_t q) {
  const auto subsets = lexicographic_subsets(x.generators(), q);
  IntVector v(subsets.size());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    Monomial m = 0;
    for (std::size_t i : subsets[k]) m |= Monomial{1} << i;
    v[k] = x.coefficient(m);
  }
  return v;
}

ExteriorElement from_coordinates(std::size_t generators, std::size_t q, const IntVector& v) {
  const auto subsets = lexicographic_subsets(generators, q);
  if (v.size() != subsets.size()) throw InputError("coordinate vector has the wrong length");
  ExteriorElement out(generators);
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    Monomial m = 0;
    for (std::size_t i : subsets[k]) m |= Monomial{1} << i;
    out.add_term(m, v[k]);
  }
  return out;
}

std::string monomial_key(Monomial m) {
  std::ostringstream os;
  bool first = true;
  while (m) {
    os << (first ? "" : ",") << std::countr_zero(m);
    first = false;
    m &= m - 1;
  }
  return os.str();
}

Monomial parse_monomial_key(const std::string& key) {
  Monomial m = 0;
  if (key.empty()) return m;
  std::istringstream is(key);
  std::string tok;
  long last = -1;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    long i = -1;
    try {
      i = std::stol(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("bad multi-index key: " + key);
    }
    if (pos != tok.size() || i < 0 || i >= static_cast<long>(kMaxGenerators) || i <= last)
      throw InputError("bad multi-index key: " + key);
    m |= Monomial{1} << i;
    last = i;
  }
  return m;
}

}  // namespace realab
