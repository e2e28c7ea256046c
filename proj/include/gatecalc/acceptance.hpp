#pragma once

#include <cstdint>
#include <string>
#include <vector>

/**
 * @file acceptance.hpp
 * @brief The acceptance suite: eleven end-to-end checks with pinned time limits.
 *
 * Shared by `gatecalc verify-all` and the acceptance test binary.
 */

namespace gatecalc
{

inline constexpr unsigned acceptance_count = 11;

struct AcceptanceOptions
{
  /// Memory budget for the radius-25 search.
  std::uint64_t search_budget = std::uint64_t{2} << 30;
  std::uint64_t seed = 0x5eed57;
};

struct CriterionReport
{
  unsigned id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;

  bool pass() const { return correct && seconds <= limit_seconds; }
};

/// Throws Error for ids outside 1..acceptance_count.
CriterionReport run_criterion(unsigned id, AcceptanceOptions const &opts);
std::vector<CriterionReport> run_acceptance(AcceptanceOptions const &opts);

/// Whether the radius-25 search proves that no word of length <= 49 over {a, b, c} is the flip.
CriterionReport run_flip_lower_bound(AcceptanceOptions const &opts);

} // namespace gatecalc
