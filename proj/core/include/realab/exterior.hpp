#pragma once

#include "realab/int_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace realab {

/// A set of generator indices encoded as a bitmask; bit i stands for generator i.
using Monomial = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 32;

std::size_t monomial_degree(Monomial m);

/// Sign of e_a ∧ e_b relative to the increasing-order monomial e_{a|b}, or 0 if
/// a and b share a generator.
int wedge_sign(Monomial a, Monomial b);

/// Sparse element of the integral exterior algebra on `generators` generators.
class ExteriorElement {
 public:
  explicit ExteriorElement(std::size_t generators = 0) : generators_(generators) {}

  static ExteriorElement one(std::size_t generators);
  static ExteriorElement generator(std::size_t generators, std::size_t i);
  static ExteriorElement monomial(std::size_t generators, Monomial m, const mpz_class& c = 1);

  std::size_t generators() const { return generators_; }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpz_class coefficient(Monomial m) const;
  void add_term(Monomial m, const mpz_class& c);

  /// Degree if every term has the same degree; nullopt otherwise or when zero.
  std::optional<std::size_t> homogeneous_degree() const;
  ExteriorElement component(std::size_t degree) const;

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const mpz_class& s, const ExteriorElement& a);
  friend ExteriorElement operator-(const ExteriorElement& a) { return mpz_class(-1) * a; }
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

  /// Exact division of every coefficient; throws std::logic_error on a remainder.
  ExteriorElement divided_exactly(const mpz_class& d) const;

 private:
  std::size_t generators_;
  std::map<Monomial, mpz_class> terms_;  // no zero coefficients are stored
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement wedge_power(const ExteriorElement& a, std::size_t n);

/// Pushes x forward along the linear map sending generator j of the source to
/// column j of m (expressed in the m.rows() target generators).
ExteriorElement apply_linear(const IntMatrix& m, const ExteriorElement& x);

/// Degree-2 element sum_{i<j} form(i, j) e_i ∧ e_j of an alternating matrix.
ExteriorElement two_form(const IntMatrix& form);

/// Monomial of degree q at the given position in the lexicographic list of q-subsets.
Monomial lexicographic_monomial(std::size_t generators, std::size_t q, std::size_t index);

/// Coordinates of the degree-q part of x in the lexicographic basis of q-subsets.
IntVector coordinates(const ExteriorElement& x, std::size_t q);
ExteriorElement from_coordinates(std::size_t generators, std::size_t q, const IntVector& v);

/// Comma separated generator list, e.g. "0,2,3"; the empty monomial prints as "".
std::string monomial_key(Monomial m);
Monomial parse_monomial_key(const std::string& key);

}  // namespace realab
