#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "expr.hpp"

/**
 * @file search.hpp
 * @brief Bounded BFS and meet-in-the-middle search for words over inert generators.
 *
 * States are tables over the smallest window containing every generator and the
 * target, bit-packed. A word w = x1 x2 ... xk denotes x1 o x2 o ... o xk, so xk
 * acts first. Among words of minimal length the lexicographically least (by
 * generator index) is returned.
 */

namespace gatecalc
{

enum class SearchStrategy
{
  bfs,
  mitm,
};

enum class SearchStatus
{
  found,
  not_found_within_depth,
  budget_exceeded,
};

char const *to_string(SearchStrategy s);
char const *to_string(SearchStatus s);
SearchStrategy parse_strategy(std::string_view text);

/// Largest common window accepted by search (table of 2^8 entries).
inline constexpr unsigned search_window_limit = 8;

struct SearchConfig
{
  std::vector<GroupElement> generators;
  GroupElement target;
  unsigned max_depth = 1;
  std::uint64_t memory_budget = std::uint64_t{1} << 30;
  SearchStrategy strategy = SearchStrategy::mitm;
};

struct SearchStats
{
  int window_lo = 0;
  int window_hi = 0;
  std::uint64_t states = 0;
  std::uint64_t bytes = 0;
  /// Number of complete BFS layers beyond the identity.
  unsigned depth_completed = 0;
  /// Layer sizes; layer_sizes[0] is the identity.
  std::vector<std::uint64_t> layer_sizes;
  /// A layer came out empty, so the ball is the whole generated group.
  bool ball_closed = false;
  double seconds = 0.0;
};

struct SearchResult
{
  SearchStatus status = SearchStatus::not_found_within_depth;
  std::vector<unsigned> word;
  /// The word was evaluated with the gate calculus and equals the target.
  bool certified = false;
  /// No word shorter than `word` evaluates to the target (BFS, or MITM over a complete ball).
  bool shortest = false;
  SearchStats stats;
};

/// Throws Error for shifting generators or target, or a common window wider than the limit.
SearchResult search(SearchConfig const &cfg);

GateExpr word_expr(std::vector<unsigned> const &word, std::vector<std::string> const &names);

/// "512", "64K", "8M", "8G" (binary multiples).
std::uint64_t parse_byte_count(std::string_view text);

} // namespace gatecalc
