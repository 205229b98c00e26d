#include "realab/cli/json_io.hpp"

namespace realab::cli {

mpz_class parse_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (!j.is_string()) throw InputError("expected an integer");
  mpz_class v;
  const std::string s = j.get<std::string>();
  if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not a decimal integer: " + s);
  return v;
}

mpq_class parse_rational(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) throw InputError("expected a rational number");
  const std::string s = j.get<std::string>();
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not a rational number: " + s);
  if (v.get_den() == 0) throw InputError("zero denominator: " + s);
  v.canonicalize();
  return v;
}

std::size_t parse_count(const json& j) {
  const mpz_class v = parse_integer(j);
  if (v < 0 || v > 1000000) throw InputError("count out of range");
  return v.get_ui();
}

namespace {

template <typename M, typename F>
M parse_matrix(const json& j, F parse_entry) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  M m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_entry(j[i][k]);
  }
  return m;
}

template <typename M>
json matrix_json(const M& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key: ") + key);
  return j.at(key);
}

}  // namespace

IntMatrix parse_int_matrix(const json& j) { return parse_matrix<IntMatrix>(j, parse_integer); }
RatMatrix parse_rat_matrix(const json& j) { return parse_matrix<RatMatrix>(j, parse_rational); }

json to_json(const mpz_class& v) { return v.get_str(); }
json to_json(const mpq_class& v) { return v.get_str(); }
json to_json(const IntMatrix& m) { return matrix_json(m); }
json to_json(const RatMatrix& m) { return matrix_json(m); }

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

GLattice parse_lattice(const json& j) {
  const IntMatrix sigma = parse_int_matrix(require(j, "sigma"));
  if (j.contains("rank") && parse_count(j.at("rank")) != sigma.rows())
    throw InputError("lattice rank does not match sigma");
  const mpz_class twist = j.contains("twist") ? parse_integer(j.at("twist")) : mpz_class(0);
  if (twist != 0 && twist != 1) throw InputError("twist must be 0 or 1");
  return GLattice(sigma, twist == 0 ? Twist::Even : Twist::Odd);
}

json to_json(const GLattice& l) {
  return json{{"rank", std::to_string(l.rank())},
              {"sigma", to_json(l.sigma())},
              {"twist", l.twist() == Twist::Even ? "0" : "1"}};
}

RealTorus parse_torus(const json& j) {
  if (j.is_object() && j.contains("factors")) {
    std::vector<bool> split;
    for (const auto& f : j.at("factors")) {
      const std::string s = f.is_string() ? f.get<std::string>() : "";
      if (s == "split")
        split.push_back(true);
      else if (s == "connected")
        split.push_back(false);
      else
        throw InputError("factor must be \"split\" or \"connected\"");
    }
    return RealTorus::elliptic_product(split);
  }
  const GLattice h1 = parse_lattice(require(j, "h1"));
  const std::size_t g = j.contains("g") ? parse_count(j.at("g")) : h1.rank() / 2;
  return RealTorus(g, h1);
}

json to_json(const RealTorus& t) {
  return json{{"g", std::to_string(t.g())}, {"h1", to_json(t.h1())}};
}

PolarizedLattice parse_polarized(const json& j) {
  return PolarizedLattice(parse_lattice(require(j, "lattice")), parse_int_matrix(require(j, "form")));
}

json to_json(const PolarizedLattice& pl) {
  return json{{"lattice", to_json(pl.lattice())}, {"form", to_json(pl.form())}};
}

PeriodData parse_period(const json& j) {
  PeriodData pd;
  pd.m = parse_int_matrix(require(j, "M"));
  pd.g = j.contains("g") ? parse_count(j.at("g")) : pd.m.rows();
  pd.n = j.contains("N") ? parse_rat_matrix(j.at("N")) : RatMatrix::identity(pd.g);
  pd.validate();
  return pd;
}

ExteriorElement parse_element(const json& j, std::size_t generators) {
  if (!j.is_object()) throw InputError("element must be an object of multi-index keys");
  ExteriorElement e(generators);
  for (const auto& [key, value] : j.items()) {
    const Monomial m = parse_monomial_key(key);
    e += ExteriorElement::monomial(generators, m, parse_integer(value));
  }
  return e;
}

json to_json(const ExteriorElement& e) {
  json out = json::object();
  for (const auto& [m, c] : e.terms()) out[monomial_key(m)] = to_json(c);
  return out;
}

json to_json(const FiltrationProfile& p) {
  json ranks = json::object();
  for (const auto& [deg, dim] : p.ranks) ranks[std::to_string(deg)] = std::to_string(dim);
  return json{{"k", std::to_string(p.twist)},
              {"degree", std::to_string(p.degree)},
              {"ranks", ranks},
              {"free_rank", std::to_string(p.free_rank)},
              {"torsion_dimension", std::to_string(p.torsion_dimension())}};
}

json to_json(const Principalization& p) {
  json steps = json::array();
  for (const auto& s : p.steps)
    steps.push_back(json{{"prime", std::to_string(s.prime)},
                         {"generator", to_json(s.generator)},
                         {"new_basis", to_json(s.new_basis)}});
  return json{{"steps", steps},
              {"result", to_json(p.result)},
              {"inclusion", to_json(p.inclusion)},
              {"degree", to_json(degree(p.result))}};
}

}  // namespace realab::cli
