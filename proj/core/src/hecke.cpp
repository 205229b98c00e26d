#include "realab/hecke.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

namespace realab {

void SUnitConfig::validate() const {
  if (p == q) throw InputError("S-unit primes must be distinct");
  for (unsigned long x : {p, q}) {
    if (x == 2 || mpz_probab_prime_p(mpz_class(x).get_mpz_t(), 30) == 0)
      throw InputError("S-unit primes must be odd primes");
  }
  if (exponent_bound < 0) throw InputError("exponent bound must be nonnegative");
}

namespace {

mpq_class power(unsigned long base, long e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(b);
  mpq_class r(mpz_class(1), b);
  r.canonicalize();
  return r;
}

// Strips all factors p and q; true when nothing else is left.
bool is_s_unit_part(mpz_class x, unsigned long p, unsigned long q) {
  x = abs(x);
  if (x == 0) return false;
  for (unsigned long f : {p, q})
    while (mpz_divisible_ui_p(x.get_mpz_t(), f)) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), f);
  return x == 1;
}

IntMatrix mod2_image(const RatMatrix& t) {
  IntMatrix m(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) m(i, j) = t(i, j).get_num();
  return reduce_mod(m, 2);
}

Eigen::MatrixXd to_double(const RatMatrix& a) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).get_d();
  return m;
}

Eigen::MatrixXd spd_log(const RatMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_double(a));
  Eigen::VectorXd l = es.eigenvalues();
  for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = std::log(std::max(l(i), 1e-300));
  return es.eigenvectors() * l.asDiagonal() * es.eigenvectors().transpose();
}

std::string matrix_key(const RatMatrix& m) {
  std::string key;
  for (const auto& e : m.entries()) {
    key += e.get_str();
    key += ';';
  }
  return key;
}

void check_spd(const RatMatrix& n, std::size_t g, const char* what) {
  if (n.rows() != g || n.cols() != g)
    throw InputError(std::string(what) + " has the wrong dimension");
  if (!is_positive_definite(n)) throw InputError(std::string(what) + " is not positive definite");
}

}  // namespace

SUnitResult sunit_gap(const SUnitConfig& cfg, const mpq_class& target, const mpq_class& tolerance) {
  cfg.validate();
  if (target <= 0) throw InputError("sunit_gap: target must be positive");
  if (tolerance <= 0) throw InputError("sunit_gap: tolerance must be positive");
  const long b = cfg.exponent_bound;
  SUnitResult best;
  bool have = false;
  for (long n = -b; n <= b; ++n) {
    const mpq_class pn = power(cfg.p, n);
    for (long m = -b; m <= b; ++m) {
      const mpq_class v = pn * power(cfg.q, m);
      const mpq_class d = abs(v - target);
      if (!have || d < best.distance) {
        best = SUnitResult{n, m, v, d, false};
        have = true;
      }
    }
  }
  best.within_tolerance = best.distance < tolerance;
  return best;
}

bool gl_tau_s_member(const RatMatrix& t, const RealType& tau, const SUnitConfig& cfg) {
  if (!t.square() || t.rows() != tau.g) return false;
  for (const auto& e : t.entries())
    if (!is_s_unit_part(e.get_den(), cfg.p, cfg.q)) return false;
  const mpq_class det = determinant(t);
  if (!is_s_unit_part(det.get_num(), cfg.p, cfg.q) || !is_s_unit_part(det.get_den(), cfg.p, cfg.q))
    return false;
  const IntMatrix m = normal_form_matrix(tau);
  const IntMatrix t2 = mod2_image(t);
  return reduce_mod(t2.transpose() * m * t2, 2) == reduce_mod(m, 2);
}

std::vector<HeckeGenerator> gl_tau_s_generators(std::size_t g, const RealType& tau,
                                                const SUnitConfig& cfg) {
  cfg.validate();
  tau.validate();
  if (tau.g != g) throw InputError("generator request: type dimension mismatch");
  std::vector<HeckeGenerator> gens;
  const RatMatrix id = RatMatrix::identity(g);

  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (i == j) continue;
      for (long c : {1L, -1L, 2L, -2L}) {
        RatMatrix t = id;
        RatMatrix inv = id;
        t(i, j) = c;
        inv(i, j) = -c;
        if (!gl_tau_s_member(t, tau, cfg)) continue;
        gens.push_back({"E" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(c) + ")",
                        t, inv});
      }
    }

  for (std::size_t i = 0; i < g; ++i)
    for (unsigned long prime : {cfg.p, cfg.q})
      for (int e : {1, -1}) {
        RatMatrix t = id;
        RatMatrix inv = id;
        t(i, i) = power(prime, e);
        inv(i, i) = power(prime, -e);
        gens.push_back({"D" + std::to_string(i) + "(" + std::to_string(prime) + "^" +
                            std::to_string(e) + ")",
                        t, inv});
      }

  for (std::size_t i = 0; i < g; ++i) {
    RatMatrix t = id;
    t(i, i) = -1;
    gens.push_back({"S" + std::to_string(i), t, t});
  }

  for (const auto& gen : gens)
    if (!gl_tau_s_member(gen.matrix, tau, cfg))
      throw std::logic_error("generator outside the congruence group: " + gen.name);
  return gens;
}

RatMatrix hecke_act(const RatMatrix& t, const RatMatrix& n) { return t.transpose() * n * t; }

double log_euclidean_distance(const RatMatrix& a, const RatMatrix& b) {
  return (spd_log(a) - spd_log(b)).norm();
}

RatMatrix evaluate_word(const std::vector<HeckeGenerator>& gens,
                        const std::vector<WordLetter>& word, std::size_t g) {
  RatMatrix t = RatMatrix::identity(g);
  for (const auto& l : word) {
    if (l.generator >= gens.size()) throw InputError("word uses an unknown generator");
    t = t * (l.exponent > 0 ? gens[l.generator].matrix : gens[l.generator].inverse);
  }
  return t;
}

namespace {

struct SearchState {
  std::vector<WordLetter> word;
  RatMatrix t;  // forward: the word's matrix; backward: inverse of the word's matrix
  RatMatrix image;
  double distance = 0.0;
};

bool state_less(const SearchState& a, const SearchState& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return a.word < b.word;
}

class OrbitSearch {
 public:
  OrbitSearch(std::vector<HeckeGenerator> gens, const RatMatrix& start, const RatMatrix& target,
              const OrbitSearchConfig& cfg)
      : gens_(std::move(gens)),
        start_(start),
        target_(target),
        log_start_(spd_log(start)),
        log_target_(spd_log(target)),
        cfg_(cfg) {}

  OrbitResult run() {
    const std::size_t g = start_.rows();
    SearchState root{{}, RatMatrix::identity(g), start_, distance_to(start_, log_target_)};
    best_ = root;
    if (start_ == target_) return finish(true);
    SearchState back_root{{}, RatMatrix::identity(g), target_, distance_to(target_, log_start_)};
    forward_seen_.emplace(matrix_key(start_), root);
    backward_seen_.emplace(matrix_key(target_), back_root);

    std::vector<SearchState> fwd{root};
    std::vector<SearchState> bwd{back_root};
    for (std::size_t depth = 0; depth < cfg_.max_depth && !exhausted(); ++depth) {
      if (!fwd.empty() && expand(fwd, true)) return finish(true);
      if (!bwd.empty() && !exhausted() && expand(bwd, false)) return finish(true);
      trace_.push_back(best_.distance);
      if (fwd.empty() && bwd.empty()) break;
    }

    // Seeded restarts: a random prefix followed by a forward-only beam, still
    // checked for collisions against every backward state found above.
    std::mt19937_64 rng(cfg_.seed);
    for (std::size_t r = 0; r < cfg_.restarts && !exhausted(); ++r) {
      std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
      SearchState s = root;
      const std::size_t prefix = 1 + r % std::max<std::size_t>(1, cfg_.max_depth);
      for (std::size_t k = 0; k < prefix; ++k) {
        const std::size_t gi = pick(rng);
        s.word.push_back({gi, 1});
        s.t = s.t * gens_[gi].matrix;
        s.image = hecke_act(gens_[gi].matrix, s.image);
        ++steps_;
      }
      s.distance = distance_to(s.image, log_target_);
      note_forward(s);
      if (auto hit = backward_seen_.find(matrix_key(s.image)); hit != backward_seen_.end()) {
        join(s, hit->second);
        return finish(true);
      }
      std::vector<SearchState> beam{s};
      for (std::size_t depth = 0; depth < cfg_.max_depth && !exhausted() && !beam.empty(); ++depth) {
        if (expand(beam, true)) return finish(true);
        trace_.push_back(best_.distance);
      }
    }
    return finish(best_.image == target_);
  }

 private:
  double distance_to(const RatMatrix& m, const Eigen::MatrixXd& log_ref) const {
    return (spd_log(m) - log_ref).norm();
  }

  bool exhausted() const { return steps_ >= cfg_.budget; }

  void note_forward(const SearchState& s) {
    if (state_less(s, best_)) best_ = s;
  }

  void join(const SearchState& f, const SearchState& b) {
    SearchState out;
    out.word = f.word;
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it)
      out.word.push_back({it->generator, -it->exponent});
    out.t = f.t * b.t;
    out.image = hecke_act(out.t, start_);
    if (!(out.image == target_)) throw std::logic_error("orbit search: inconsistent collision");
    out.distance = 0.0;
    best_ = out;
  }

  // Expands one level; returns true on an exact meeting of the two directions.
  bool expand(std::vector<SearchState>& frontier, bool forward) {
    auto& seen = forward ? forward_seen_ : backward_seen_;
    auto& other = forward ? backward_seen_ : forward_seen_;
    const Eigen::MatrixXd& ref = forward ? log_target_ : log_start_;
    std::vector<SearchState> next;
    for (const auto& s : frontier) {
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        if (exhausted()) break;
        ++steps_;
        const auto& gen = gens_[gi];
        RatMatrix image = hecke_act(gen.matrix, s.image);
        std::string key = matrix_key(image);
        if (seen.count(key)) continue;
        SearchState n;
        n.word = s.word;
        n.word.push_back({gi, 1});
        n.t = forward ? s.t * gen.matrix : gen.inverse * s.t;
        n.image = std::move(image);
        n.distance = distance_to(n.image, ref);
        if (auto hit = other.find(key); hit != other.end()) {
          if (forward)
            join(n, hit->second);
          else
            join(hit->second, n);
          return true;
        }
        if (forward) note_forward(n);
        seen.emplace(std::move(key), n);
        next.push_back(std::move(n));
      }
    }
    std::sort(next.begin(), next.end(), state_less);
    if (next.size() > cfg_.beam_width) next.resize(cfg_.beam_width);
    frontier = std::move(next);
    return false;
  }

  OrbitResult finish(bool exact) {
    if (exact) best_.distance = 0.0;
    trace_.push_back(best_.distance);
    for (std::size_t i = 1; i < trace_.size(); ++i) trace_[i] = std::min(trace_[i], trace_[i - 1]);
    OrbitResult r;
    r.best = OrbitSample{best_.word, best_.t, best_.image, best_.distance};
    r.trace = trace_;
    r.steps = steps_;
    r.exact = exact;
    return r;
  }

  std::vector<HeckeGenerator> gens_;
  RatMatrix start_, target_;
  Eigen::MatrixXd log_start_, log_target_;
  OrbitSearchConfig cfg_;
  std::unordered_map<std::string, SearchState> forward_seen_, backward_seen_;
  SearchState best_;
  std::vector<double> trace_;
  std::uint64_t steps_ = 0;
};

}  // namespace

OrbitResult orbit_approach(std::size_t g, const RealType& tau, const SUnitConfig& cfg,
                           const RatMatrix& start, const RatMatrix& target,
                           const OrbitSearchConfig& search) {
  check_spd(start, g, "start matrix");
  check_spd(target, g, "target matrix");
  OrbitSearch s(gl_tau_s_generators(g, tau, cfg), start, target, search);
  return s.run();
}

std::string format_siegel_point(const IntMatrix& m, const RatMatrix& n) {
  if (!m.square() || !n.square() || m.rows() != n.rows())
    throw InputError("Siegel point: shape mismatch");
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class re(m(i, j), mpz_class(2));
      re.canonicalize();
      os << (j ? "," : "") << re << "+i*" << n(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace realab
