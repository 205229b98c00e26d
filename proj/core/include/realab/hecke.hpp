#pragma once

#include "realab/int_matrix.hpp"
#include "realab/moduli.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace realab {

/// Two distinct odd primes and an exponent bound for S-unit searches, S = {p, q}.
struct SUnitConfig {
  unsigned long p = 3;
  unsigned long q = 5;
  long exponent_bound = 30;

  void validate() const;
};

struct SUnitResult {
  long n = 0;
  long m = 0;
  mpq_class value;     ///< p^n q^m
  mpq_class distance;  ///< |value - target|
  bool within_tolerance = false;
};

/// Exhaustive search over |n|, |m| <= bound; ties go to the lexicographically
/// smallest (n, m).
SUnitResult sunit_gap(const SUnitConfig& cfg, const mpq_class& target, const mpq_class& tolerance);

/// A generator of the S-integral congruence group together with its inverse.
struct HeckeGenerator {
  std::string name;
  RatMatrix matrix;
  RatMatrix inverse;
};

/// Whether every denominator of t is a product of p and q, det t = ±p^a q^b and
/// t^t M(tau) t = M(tau) mod 2.
bool gl_tau_s_member(const RatMatrix& t, const RealType& tau, const SUnitConfig& cfg);

/// Elementary matrices I + c E_ij (c in {±1, ±2}) in the congruence group, the
/// scalings diag(.., p^±1, ..) and diag(.., q^±1, ..), and the sign changes.
/// The list is closed under inverses. Whether it generates the whole group is
/// not claimed.
std::vector<HeckeGenerator> gl_tau_s_generators(std::size_t g, const RealType& tau,
                                                const SUnitConfig& cfg);

/// N -> T^t N T.
RatMatrix hecke_act(const RatMatrix& t, const RatMatrix& n);

/// Log-Euclidean distance ||log A - log B||_F, evaluated in double precision.
double log_euclidean_distance(const RatMatrix& a, const RatMatrix& b);

struct WordLetter {
  std::size_t generator = 0;
  int exponent = 1;  ///< +1 or -1

  friend auto operator<=>(const WordLetter&, const WordLetter&) = default;
};

struct OrbitSample {
  std::vector<WordLetter> word;
  RatMatrix matrix;  ///< product of the word, left to right
  RatMatrix image;   ///< matrix^t N matrix
  double distance = 0.0;
};

struct OrbitSearchConfig {
  std::uint64_t budget = 100000;  ///< generator applications
  std::size_t beam_width = 8192;
  std::size_t max_depth = 12;     ///< per direction
  std::size_t restarts = 4;
  std::uint64_t seed = 0;
};

struct OrbitResult {
  OrbitSample best;
  std::vector<double> trace;  ///< best-so-far distance after each search level
  std::uint64_t steps = 0;
  bool exact = false;         ///< best.image equals the target exactly
};

/// Bidirectional beam search for T in the generated group with T^t N T close to
/// the target. Beams are ranked by log-Euclidean distance; exact collisions
/// between the two directions are detected by hashing the rational images.
/// Deterministic for a fixed seed.
OrbitResult orbit_approach(std::size_t g, const RealType& tau, const SUnitConfig& cfg,
                           const RatMatrix& start, const RatMatrix& target,
                           const OrbitSearchConfig& search);

/// Product of a word over the given generators.
RatMatrix evaluate_word(const std::vector<HeckeGenerator>& gens,
                        const std::vector<WordLetter>& word, std::size_t g);

/// Formats the Siegel space point M/2 + i N as text, row by row.
std::string format_siegel_point(const IntMatrix& m, const RatMatrix& n);

}  // namespace realab
