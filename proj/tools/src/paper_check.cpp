#include "realab/cli/paper_check.hpp"

#include "realab/fourier.hpp"
#include "realab/hecke.hpp"

#include <functional>
#include <future>
#include <set>
#include <sstream>

namespace realab::cli {

namespace {

using ClaimFn = std::function<Claim()>;

Claim make(std::string id, std::string anchor, std::string computed, std::string expected,
           std::string provenance) {
  Claim c{std::move(id), std::move(anchor), std::move(computed), std::move(expected),
          std::move(provenance), false};
  c.pass = c.computed == c.expected;
  return c;
}

template <typename It>
std::string join(It begin, It end) {
  std::ostringstream os;
  for (It it = begin; it != end; ++it) os << (it == begin ? "" : ",") << *it;
  return os.str();
}

std::vector<ClaimFn> registry(const PaperCheckOptions& opt) {
  std::vector<ClaimFn> claims;

  claims.push_back([] {
    const auto prof = hs_profile(cohomology_ring(RealTorus::elliptic_product({false, false, false})), 2);
    std::vector<std::size_t> v{prof.ranks.at(1), prof.ranks.at(2), prof.ranks.at(3)};
    return make("hs-vanishing-connected",
                "H^p(G, H^q(A, Z(2))) vanishes for p + q = 4, p > 0, q >= 1 when A(R) is connected",
                join(v.begin(), v.end()), "0,0,0", "published");
  });
  claims.push_back([] {
    const auto prof = hs_profile(cohomology_ring(RealTorus::elliptic_product({false, false, false})), 2);
    return make("hs-top-term-connected", "the (p, q) = (4, 0) term H^4(G, Z(2)) for A(R) connected",
                std::to_string(prof.ranks.at(4)), "1", "derived");
  });
  claims.push_back([] {
    return make("budget-connected", "dim H^4_G(A, Z(2))_0[2] for the connected threefold",
                std::to_string(hdg0_torsion_budget(RealTorus::elliptic_product({false, false, false}))),
                "0", "derived");
  });
  claims.push_back([] {
    const auto prof = hs_profile(GLattice(-IntMatrix::identity(3)), 2);
    return make("torsion-circle-cube", "dim H^4_G(Y, Z) = 8 for Y a product of three antipodal circles",
                std::to_string(prof.torsion_dimension()), "8", "published");
  });
  claims.push_back([] {
    const RealTorus e = RealTorus::elliptic_split();
    const auto dec = kunneth_h_odd(std::vector<RealTorus>{e, e, e}, 3, 0);
    std::size_t dim = 0;
    for (const auto& s : dec.summands)
      if (s.degrees == std::vector<std::size_t>{1, 1, 1}) dim = s.dimension;
    return make("tensor-cube-basis",
                "H^1(G, L ⊗ L ⊗ L) has the basis xxy, xyx, yxx, yyy for L = Zx + Zy, y negated",
                std::to_string(dim), "4", "published");
  });
  claims.push_back([] {
    std::size_t good = 0;
    std::size_t total = 0;
    for (std::size_t g = 1; g <= 4; ++g)
      for (unsigned mask = 0; mask < (1u << g); ++mask) {
        std::vector<bool> split(g);
        std::size_t splits = 0;
        for (std::size_t i = 0; i < g; ++i) splits += (split[i] = (mask >> i) & 1u);
        const mpz_class pi0 = pi0_real_locus(RealTorus::elliptic_product(split));
        ++total;
        if (pi0 == (mpz_class(1) << splits) && pi0 <= (mpz_class(1) << g)) ++good;
      }
    return make("pi0-bound", "|pi_0(A(R))| = 2^(split factors) <= 2^dim(A) for elliptic products, g <= 4",
                std::to_string(good) + "/" + std::to_string(total),
                std::to_string(total) + "/" + std::to_string(total), "published");
  });
  claims.push_back([] {
    std::set<long> seen;
    for (unsigned mask = 0; mask < 8; ++mask)
      seen.insert(pi0_real_locus(RealTorus::elliptic_product({bool(mask & 1), bool(mask & 2),
                                                              bool(mask & 4)}))
                      .get_si());
    return make("pi0-threefold-values", "component counts of real abelian threefolds",
                join(seen.begin(), seen.end()), "1,2,4,8", "published");
  });
  for (std::size_t g = 1; g <= 3; ++g) {
    claims.push_back([g, opt] {
      const RealTorus t = RealTorus::elliptic_product(std::vector<bool>(g, true));
      const bool ok = beauville_identity_holds(t, standard_symplectic(g), {opt.corrupt_sign});
      return make("beauville-g" + std::to_string(g),
                  "F(theta) = (-1)^(g-1) theta^^(g-1) / (g-1)! for a principal polarization",
                  ok ? "holds" : "fails", "holds", "published");
    });
  }
  for (std::size_t g = 1; g <= 3; ++g) {
    claims.push_back([g] {
      const RealTorus t = RealTorus::elliptic_product(std::vector<bool>(g, false));
      return make("fourier-inverse-degree1-g" + std::to_string(g),
                  "F_A on H^1 has inverse (-1)^(1+g) F_dual", std::to_string(inversion_sign(t, 1)),
                  (g + 1) % 2 ? "-1" : "1", "published");
    });
  }
  claims.push_back([] {
    const PolarizedLattice pl(GLattice(IntMatrix{{1, 0}, {0, -1}}), IntMatrix{{0, 9}, {-9, 0}});
    const auto res = principalize(pl);
    std::vector<std::string> degrees{degree(pl).get_str()};
    mpz_class d = degree(pl);
    bool law = true;
    for (const auto& s : res.steps) {
      const mpz_class next = d / s.prime;
      // p^2 * deg(next)^2 = deg(previous)^2
      law = law && mpz_class(s.prime) * s.prime * next * next == d * d;
      d = next;
      degrees.push_back(d.get_str());
    }
    return make("degree-law", "each sigma-stable order-p quotient satisfies p^2 deg(A_1) = deg(A)",
                join(degrees.begin(), degrees.end()) + (law ? "" : " (law broken)"), "9,3,1",
                "published");
  });
  claims.push_back([] {
    std::vector<std::size_t> dims;
    for (unsigned mask = 0; mask < 4; ++mask) {
      const RealTorus b = RealTorus::elliptic_product({bool(mask & 1), bool(mask & 2)});
      const auto dec = kunneth_h_odd(b, RealTorus::elliptic_connected(), 3, 0);
      for (const auto& s : dec.summands)
        if (s.degrees == std::vector<std::size_t>{2, 1}) dims.push_back(s.dimension);
    }
    return make("kunneth-surface-times-connected",
                "H^1(G, H^2(B) ⊗ H^1(E)) = 0 for E(R) connected, over all surface types B",
                join(dims.begin(), dims.end()), "0,0,0,0", "published");
  });
  claims.push_back([] {
    return make("budget-split-cube", "dim H^4_G(E^3, Z(2))_0[2] for E(R) with two components",
                std::to_string(hdg0_torsion_budget(RealTorus::elliptic_product({true, true, true}))),
                "12", "derived");
  });
  claims.push_back([] {
    const auto r = sunit_gap(SUnitConfig{3, 5, 30}, 2, mpq_class(1, 100));
    return make("sunit-density", "log(3) Z + log(5) Z is dense: best 3^n 5^m near 2 with |n|, |m| <= 30",
                std::to_string(r.n) + "," + std::to_string(r.m) + (r.within_tolerance ? "" : " (miss)"),
                "27,-18", "derived");
  });
  return claims;
}

}  // namespace

std::vector<Claim> run_paper_check(const PaperCheckOptions& opt) {
  const auto fns = registry(opt);
  std::vector<std::future<Claim>> futures;
  futures.reserve(fns.size());
  for (const auto& f : fns) futures.push_back(std::async(std::launch::async, f));
  std::vector<Claim> out;
  for (auto& fut : futures) {
    try {
      out.push_back(fut.get());
    } catch (const std::exception& e) {
      out.push_back(Claim{"error", "claim raised an exception", e.what(), "", "derived", false});
    }
  }
  return out;
}

json to_json(const std::vector<Claim>& claims) {
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& c : claims) {
    passed += c.pass;
    list.push_back(json{{"id", c.id},
                        {"anchor", c.anchor},
                        {"computed", c.computed},
                        {"expected", c.expected},
                        {"provenance", c.provenance},
                        {"pass", c.pass ? "true" : "false"}});
  }

  json pi0_types = json::object();
  for (const auto& [t, n] : pi0_by_type(3)) pi0_types[t.label()] = n.get_str();
  json signs = json::object();
  for (std::size_t g = 1; g <= 3; ++g) {
    const RealTorus t = RealTorus::elliptic_product(std::vector<bool>(g, false));
    std::vector<int> row;
    for (std::size_t i = 0; i <= 2 * g; ++i) row.push_back(inversion_sign(t, i));
    signs["g" + std::to_string(g)] = join(row.begin(), row.end());
  }

  return json{{"claims", list},
              {"summary",
               {{"total", std::to_string(claims.size())},
                {"passed", std::to_string(passed)},
                {"failed", std::to_string(claims.size() - passed)}}},
              {"all_pass", passed == claims.size() ? "true" : "false"},
              {"tables", {{"pi0_by_type_g3", pi0_types}, {"fourier_inversion_signs", signs}}}};
}

}  // namespace realab::cli
