#include "realab/cohomology.hpp"

#include <algorithm>
#include <functional>

namespace realab {

RealTorus::RealTorus(std::size_t g, GLattice h1) : g_(g), h1_(std::move(h1)) {
  if (h1_.rank() != 2 * g_) throw InputError("H^1 of a real torus must have rank 2g");
  if (h1_.twist() != Twist::Even) throw InputError("H^1 of a real torus must have twist 0");
}

RealTorus RealTorus::elliptic_connected() { return RealTorus(1, GLattice::induced(1)); }

RealTorus RealTorus::elliptic_split() { return RealTorus(1, GLattice(IntMatrix{{1, 0}, {0, -1}})); }

RealTorus RealTorus::point() { return RealTorus(0, GLattice::zero()); }

RealTorus RealTorus::elliptic_product(const std::vector<bool>& split) {
  RealTorus t = point();
  for (bool s : split) t = product(t, s ? elliptic_split() : elliptic_connected());
  return t;
}

RealTorus product(const RealTorus& a, const RealTorus& b) {
  return RealTorus(a.g() + b.g(), direct_sum(a.h1(), b.h1()));
}

const GLattice& CohomologyRing::degree(std::size_t q) const {
  if (q >= graded.size()) throw InputError("cohomological degree out of range");
  return graded[q];
}

std::size_t CohomologyRing::total_rank() const {
  std::size_t n = 0;
  for (const auto& l : graded) n += l.rank();
  return n;
}

ExteriorElement CohomologyRing::cup(const ExteriorElement& a, const ExteriorElement& b) const {
  if (a.generators() != 2 * torus.g() || b.generators() != 2 * torus.g())
    throw InputError("cup product: element does not live on this torus");
  return wedge(a, b);
}

CohomologyRing cohomology_ring(const RealTorus& t) {
  CohomologyRing r{t, {}};
  for (std::size_t q = 0; q <= 2 * t.g(); ++q) r.graded.push_back(exterior_power(t.h1(), q));
  return r;
}

std::size_t FiltrationProfile::torsion_dimension() const {
  std::size_t n = 0;
  for (const auto& [p, d] : ranks) n += d;
  return n;
}

FiltrationProfile hs_profile(const GLattice& h1, std::size_t k) {
  if (h1.twist() != Twist::Even) throw InputError("H^1 lattice must have twist 0");
  FiltrationProfile prof;
  prof.degree = 2 * k;
  prof.twist = k;
  const long twist = static_cast<long>(k);
  for (std::size_t p = 1; p <= 2 * k; ++p) {
    const std::size_t q = 2 * k - p;
    if (q > h1.rank()) {
      prof.ranks[p] = 0;
      continue;
    }
    prof.ranks[p] = tate_cohomology(retwist(exterior_power(h1, q), twist)).in_degree(p);
  }
  if (2 * k <= h1.rank())
    prof.free_rank = invariant_basis(retwist(exterior_power(h1, 2 * k), twist)).cols();
  return prof;
}

FiltrationProfile hs_profile(const CohomologyRing& r, std::size_t k) {
  if (2 * k > 2 * r.torus.g()) throw InputError("hs_profile: k out of range");
  return hs_profile(r.torus.h1(), k);
}

mpz_class pi0_real_locus(const RealTorus& t) {
  if (t.g() == 0) return 1;
  const GLattice lambda = retwist(exterior_power(t.h1(), 2 * t.g() - 1), static_cast<long>(t.g()));
  mpz_class out = 1;
  out <<= tate_cohomology(lambda).h_odd;
  return out;
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class real_locus_betti(const RealTorus& t, std::size_t i) {
  if (i > t.g()) throw InputError("real_locus_betti: degree out of range");
  return pi0_real_locus(t) * binomial(t.g(), i);
}

mpz_class topological_correction(const RealTorus& t, std::size_t k) {
  mpz_class sum = 0;
  for (std::size_t p = 1; 2 * p <= k; ++p) {
    const std::size_t i = k - 2 * p;
    if (i <= t.g()) sum += real_locus_betti(t, i);
  }
  return sum;
}

long hdg0_torsion_budget(const RealTorus& t) {
  if (t.g() != 3) throw InputError("the torsion budget is only defined for threefolds");
  const auto prof = hs_profile(cohomology_ring(t), 2);
  const mpz_class budget = mpz_class(prof.torsion_dimension()) - pi0_real_locus(t);
  if (budget < 0) throw std::logic_error("negative torsion budget");
  return budget.get_si();
}

KunnethDecomposition kunneth_h_odd(const std::vector<RealTorus>& factors, std::size_t n, long k) {
  KunnethDecomposition out;
  std::vector<std::size_t> degrees(factors.size());
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t left) {
    if (idx == factors.size()) {
      if (left != 0) return;
      GLattice l = GLattice::trivial(1);
      for (std::size_t f = 0; f < factors.size(); ++f)
        l = tensor(l, exterior_power(factors[f].h1(), degrees[f]));
      const std::size_t dim = tate_cohomology(retwist(l, k)).h_odd;
      out.summands.push_back({degrees, dim});
      out.total += dim;
      return;
    }
    const std::size_t top = std::min(left, factors[idx].h1().rank());
    for (std::size_t d = 0; d <= top; ++d) {
      degrees[idx] = d;
      rec(idx + 1, left - d);
    }
  };
  rec(0, n);

  RealTorus whole = RealTorus::point();
  for (const auto& f : factors) whole = product(whole, f);
  if (n > whole.h1().rank()) throw InputError("kunneth: degree exceeds the product dimension");
  out.direct = tate_cohomology(retwist(exterior_power(whole.h1(), n), k)).h_odd;
  return out;
}

KunnethDecomposition kunneth_h_odd(const RealTorus& a, const RealTorus& b, std::size_t n, long k) {
  return kunneth_h_odd(std::vector<RealTorus>{a, b}, n, k);
}

}  // namespace realab
