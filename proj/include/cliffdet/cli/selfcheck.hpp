#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliffdet/algebra.hpp"
#include "cliffdet/random.hpp"

namespace cliffdet::cli {

struct Check {
  std::string name;
  bool passed = true;
  double max_error = 0.0;
  double tolerance = 0.0;
  int trials = 0;
  std::string detail; // first failing trial: seed, index, element
};

enum class Suite { all, oracle, identities, paths };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct SelfcheckOptions {
  int trials = 100;
  std::uint64_t seed = 42;
  Suite suite = Suite::all;
  SampleMode mode = SampleMode::uniform;
};

// Runs every property of the chosen suite that applies to sig.
std::vector<Check> run_selfcheck(const Signature &sig, const SelfcheckOptions &opts);

} // namespace cliffdet::cli
