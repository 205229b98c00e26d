#include "realab/cli/commands.hpp"

#include "realab/fourier.hpp"
#include "realab/hecke.hpp"

#include <cstdio>

namespace realab::cli {

json cmd_cohomology(const json& torus, std::size_t k) {
  const RealTorus t = parse_torus(torus);
  const auto profile = hs_profile(cohomology_ring(t), k);
  json out{{"g", std::to_string(t.g())},
           {"pi0", to_json(pi0_real_locus(t))},
           {"profile", to_json(profile)}};
  if (t.g() == 3) out["budget"] = std::to_string(hdg0_torsion_budget(t));
  return out;
}

json cmd_pi0(const json& torus) {
  const RealTorus t = parse_torus(torus);
  json betti = json::array();
  for (std::size_t i = 0; i <= t.g(); ++i) betti.push_back(to_json(real_locus_betti(t, i)));
  return json{{"g", std::to_string(t.g())}, {"pi0", to_json(pi0_real_locus(t))}, {"betti", betti}};
}

json cmd_budget(const json& torus) {
  const RealTorus t = parse_torus(torus);
  const long budget = hdg0_torsion_budget(t);
  const auto profile = hs_profile(cohomology_ring(t), 2);
  return json{{"g", std::to_string(t.g())},
              {"pi0", to_json(pi0_real_locus(t))},
              {"torsion_dimension", std::to_string(profile.torsion_dimension())},
              {"budget", std::to_string(budget)}};
}

json cmd_classify(const json& period) {
  const PeriodData pd = parse_period(period);
  const RealType type = classify_type(pd.m);
  const GLattice lambda = involution_from_period(pd);
  const RealTorus torus(pd.g, dual(lambda));
  return json{{"g", std::to_string(pd.g)},
              {"type", type.label()},
              {"r", std::to_string(type.r)},
              {"alpha", std::to_string(type.alpha)},
              {"involution", to_json(lambda.sigma())},
              {"normal_form", to_json(normal_form_matrix(type))},
              {"pi0", to_json(pi0_real_locus(torus))},
              {"siegel_point", format_siegel_point(pd.m, pd.n)}};
}

json cmd_principalize(const json& polarized) {
  const PolarizedLattice pl = parse_polarized(polarized);
  json out = to_json(principalize(pl));
  out["input_degree"] = to_json(degree(pl));
  return out;
}

json cmd_minimal_class(const json& polarized) {
  const PolarizedLattice pl = parse_polarized(polarized);
  const ExteriorElement gamma = minimal_class(pl);
  const std::size_t g = pl.g();
  const IntMatrix action = pl.lattice().sigma().transpose();
  ExteriorElement moved = apply_linear(action, gamma);
  if (g >= 2 && (g - 1) % 2 == 1) moved = -moved;
  return json{{"g", std::to_string(g)},
              {"degree", std::to_string(g == 0 ? 0 : 2 * (g - 1))},
              {"element", to_json(gamma)},
              {"invariant", moved == gamma ? "true" : "false"}};
}

json cmd_fourier(const json& input) {
  if (!input.is_object() || !input.contains("torus") || !input.contains("element"))
    throw InputError("fourier input needs \"torus\" and \"element\"");
  const RealTorus t = parse_torus(input.at("torus"));
  const ExteriorElement x = parse_element(input.at("element"), 2 * t.g());
  const bool to_a = input.contains("dual") && input.at("dual").is_boolean() && input.at("dual").get<bool>();
  const auto deg = x.homogeneous_degree();
  if (!deg && !x.is_zero()) throw InputError("fourier input must be homogeneous");
  const ExteriorElement y = to_a ? fourier_dual(t, x) : fourier(t, x);
  const std::size_t d = deg.value_or(0);
  return json{{"direction", to_a ? "dual-to-A" : "A-to-dual"},
              {"degree_in", std::to_string(d)},
              {"degree_out", std::to_string(2 * t.g() - d)},
              {"element", to_json(y)}};
}

json cmd_kunneth(const json& input, std::size_t n, long k) {
  if (!input.is_object() || !input.contains("factors") || !input.at("factors").is_array())
    throw InputError("kunneth input needs a \"factors\" array of tori");
  std::vector<RealTorus> factors;
  for (const auto& f : input.at("factors")) factors.push_back(parse_torus(f));
  const auto dec = kunneth_h_odd(factors, n, k);
  json summands = json::array();
  for (const auto& s : dec.summands) {
    json degs = json::array();
    for (std::size_t d : s.degrees) degs.push_back(std::to_string(d));
    summands.push_back(json{{"degrees", degs}, {"dimension", std::to_string(s.dimension)}});
  }
  return json{{"n", std::to_string(n)},
              {"k", std::to_string(k)},
              {"summands", summands},
              {"total", std::to_string(dec.total)},
              {"direct", std::to_string(dec.direct)},
              {"consistent", dec.total == dec.direct ? "true" : "false"}};
}

RealType parse_type_flag(std::size_t g, const std::string& flag) {
  RealType t;
  t.g = g;
  int r = -1;
  int alpha = -1;
  char tail = 0;
  if (std::sscanf(flag.c_str(), "%d,%d%c", &r, &alpha, &tail) == 2) {
    // explicit (r, alpha)
  } else if (std::sscanf(flag.c_str(), "%d%c", &r, &tail) == 1) {
    alpha = r == 0 ? 0 : 1;
  } else {
    throw InputError("type flag must be \"r\" or \"r,alpha\"");
  }
  if (r < 0) throw InputError("type flag: negative r");
  t.r = static_cast<std::size_t>(r);
  t.alpha = alpha;
  t.validate();
  return t;
}

json cmd_hecke_approach(const json& input, const HeckeApproachOptions& opt) {
  if (!input.is_object() || !input.contains("target"))
    throw InputError("hecke input needs a \"target\" matrix");
  const RealType tau = parse_type_flag(opt.g, opt.type);
  const SUnitConfig cfg{opt.p, opt.q, 0};
  cfg.validate();
  const RatMatrix target = parse_rat_matrix(input.at("target"));
  const RatMatrix start =
      input.contains("start") ? parse_rat_matrix(input.at("start")) : RatMatrix::identity(opt.g);
  OrbitSearchConfig search;
  search.budget = opt.budget;
  search.seed = opt.seed;
  const OrbitResult res = orbit_approach(opt.g, tau, cfg, start, target, search);
  const auto gens = gl_tau_s_generators(opt.g, tau, cfg);

  json word = json::array();
  for (const auto& l : res.best.word)
    word.push_back(gens[l.generator].name + (l.exponent < 0 ? "^-1" : ""));
  json trace = json::array();
  char buf[64];
  for (double d : res.trace) {
    std::snprintf(buf, sizeof buf, "%.17g", d);
    trace.push_back(buf);
  }
  std::snprintf(buf, sizeof buf, "%.17g", res.best.distance);
  return json{{"type", tau.label()},
              {"generators", std::to_string(gens.size())},
              {"generation_claimed", "false"},
              {"word", word},
              {"matrix", to_json(res.best.matrix)},
              {"image", to_json(res.best.image)},
              {"distance", buf},
              {"exact", res.exact ? "true" : "false"},
              {"steps", std::to_string(res.steps)},
              {"trace", trace},
              {"siegel_point", format_siegel_point(normal_form_matrix(tau), res.best.image)}};
}

json cmd_hecke_sunit(unsigned long p, unsigned long q, long bound, const std::string& target,
                     const std::string& tolerance) {
  const SUnitConfig cfg{p, q, bound};
  const auto res = sunit_gap(cfg, parse_rational(json(target)), parse_rational(json(tolerance)));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", res.distance.get_d());
  return json{{"p", std::to_string(p)},
              {"q", std::to_string(q)},
              {"bound", std::to_string(bound)},
              {"n", std::to_string(res.n)},
              {"m", std::to_string(res.m)},
              {"value", to_json(res.value)},
              {"distance", to_json(res.distance)},
              {"distance_approx", buf},
              {"within_tolerance", res.within_tolerance ? "true" : "false"}};
}

}  // namespace realab::cli
