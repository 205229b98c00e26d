#pragma once

#include "realab/cohomology.hpp"
#include "realab/exterior.hpp"
#include "realab/glattice.hpp"
#include "realab/moduli.hpp"
#include "realab/polarization.hpp"

#include <json.hpp>

namespace realab::cli {

using nlohmann::json;

// Integers are read from either JSON numbers or decimal strings, and always
// written back as decimal strings so that big values survive a round trip.

mpz_class parse_integer(const json& j);
mpq_class parse_rational(const json& j);
std::size_t parse_count(const json& j);

IntMatrix parse_int_matrix(const json& j);
RatMatrix parse_rat_matrix(const json& j);

json to_json(const mpz_class& v);
json to_json(const mpq_class& v);
json to_json(const IntMatrix& m);
json to_json(const RatMatrix& m);
json to_json(const RatVector& v);

/// { "rank", "sigma", "twist" }
GLattice parse_lattice(const json& j);
json to_json(const GLattice& l);

/// { "g", "h1": lattice } or { "factors": ["split" | "connected", ...] }.
RealTorus parse_torus(const json& j);
json to_json(const RealTorus& t);

/// { "lattice", "form" }
PolarizedLattice parse_polarized(const json& j);
json to_json(const PolarizedLattice& pl);

/// { "g", "M", "N" }; N defaults to the identity when absent.
PeriodData parse_period(const json& j);

/// Sparse map from multi-index keys "i,j,..." to coefficients.
ExteriorElement parse_element(const json& j, std::size_t generators);
json to_json(const ExteriorElement& e);

json to_json(const FiltrationProfile& p);
json to_json(const Principalization& p);

}  // namespace realab::cli
