#pragma once

// Verification suites run by `spin7 verify`. Every check is an exact
// identity; a suite passes iff all of its checks pass.

#include "spin7/analysis.hpp"
#include "spin7/braid.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spin7 {

enum class Suite { All, Prop1, Prop2, Skein, Series, Weights, Examples };

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

struct Report {
  Suite suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

Report run_suite(Suite s);

/// Uniform random word on the given strand count with length in [0, max_length].
BraidWord random_word(std::mt19937_64& rng, int strands, int max_length);

}  // namespace spin7
