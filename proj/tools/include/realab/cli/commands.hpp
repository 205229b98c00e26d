#pragma once

#include "realab/cli/json_io.hpp"

#include <cstdint>
#include <string>

namespace realab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

json cmd_cohomology(const json& torus, std::size_t k);
json cmd_pi0(const json& torus);
json cmd_budget(const json& torus);
json cmd_classify(const json& period);
json cmd_principalize(const json& polarized);
json cmd_minimal_class(const json& polarized);

/// Input: { "torus", "element", "dual"? }. With "dual": true the transform
/// runs from the dual side back to A.
json cmd_fourier(const json& input);

/// Input: { "factors": [torus, ...] }.
json cmd_kunneth(const json& input, std::size_t n, long k);

struct HeckeApproachOptions {
  std::size_t g = 2;
  std::string type = "0";  ///< "r" or "r,alpha"
  unsigned long p = 3;
  unsigned long q = 5;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
};

/// Parses a type flag: "0", "1", "3" (alpha forced by parity) or "2,1", "2,2".
RealType parse_type_flag(std::size_t g, const std::string& flag);

/// Input: { "target": [[...]], "start"?: [[...]] }; start defaults to the identity.
json cmd_hecke_approach(const json& input, const HeckeApproachOptions& opt);

json cmd_hecke_sunit(unsigned long p, unsigned long q, long bound, const std::string& target,
                     const std::string& tolerance);

}  // namespace realab::cli
