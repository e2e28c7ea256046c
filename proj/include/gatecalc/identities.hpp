#pragma once

#include <string_view>

#include "expr.hpp"

namespace gatecalc
{

/// 50-letter word over {a, b, c} that evaluates to the flip c^0.
inline constexpr std::string_view flip_word =
  "abcabcbababacbabababcbcabacbabcbcbcbcabcbcbabacbcb";

enum class LetterConvention
{
  /// a = sigma o g o sigma^-1 (g at cell -1), b = g, c = sigma^-1 o g o sigma (cell 1).
  standard,
  /// a and c exchanged.
  mirrored,
};

/// Dictionary {a, b, c} built from the shift-conjugates of `base`.
GeneratorDict abc_generators(GroupElement const &base, LetterConvention convention);

enum class CompositionOrder
{
  leftmost_last,   ///< function composition: the word "ab" is a o b
  leftmost_first,
};

struct ConventionResult
{
  LetterConvention letters;
  CompositionOrder order;
  bool equals_target;
};

/// Evaluate `word` under all four letter/order conventions and compare with `target`.
std::vector<ConventionResult> check_word_conventions(std::string_view word,
                                                     GroupElement const &base,
                                                     GroupElement const &target);

/// c^1 o (sigma^-1 o (R c^1 R) o sigma) o c^1 == s.
bool swap_from_cnots_holds();

/// f_{011,111} == c^2.
bool toffoli_is_word_swap();

} // namespace gatecalc
