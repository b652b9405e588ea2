#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclofactor/factor.hpp"

namespace cyclofactor {

struct ExampleOutcome {
  int number = 0;
  std::uint64_t q = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;  // mismatch details, empty on pass
};

// Compares a factorization against an expected count and a set of factors
// that must be present; returns human-readable mismatch lines (empty = ok).
std::vector<std::string> diff_factorization(
    const Factorization& actual, std::uint64_t expected_count,
    std::span<const FactorShape> required_members);

// Reruns the five embedded worked examples (q = 347, 23, 149, 53, 59) and
// diffs counts, coefficients and root choices against the recorded data.
std::vector<ExampleOutcome> run_examples(
    std::optional<std::uint64_t> only_q = std::nullopt);

}  // namespace cyclofactor
