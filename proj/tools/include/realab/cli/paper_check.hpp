#pragma once

#include "realab/cli/json_io.hpp"

#include <string>
#include <vector>

namespace realab::cli {

/// One recomputed fact. provenance is "published" (a value stated in the
/// literature), "derived" (pinned by an independent computation) or "trivial".
struct Claim {
  std::string id;
  std::string anchor;
  std::string computed;
  std::string expected;
  std::string provenance;
  bool pass = false;
};

struct PaperCheckOptions {
  bool corrupt_sign = false;  ///< test hook forwarded to the Fourier transform
};

/// Runs every registered claim (independent claims run concurrently); the
/// output order is fixed.
std::vector<Claim> run_paper_check(const PaperCheckOptions& opt = {});

json to_json(const std::vector<Claim>& claims);

}  // namespace realab::cli
