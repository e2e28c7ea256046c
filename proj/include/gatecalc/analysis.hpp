#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gates.hpp"
#include "identities.hpp"

/**
 * @file analysis.hpp
 * @brief Membership tests for the proper subgroups that obstruct universality,
 * and the universality classifiers for word swaps and asynchronous ECA.
 *
 * All predicates work on the canonical finite table. For an inert gate the
 * coordinates outside its window are untouched and never read, so a property
 * quantified over {0,1}^Z holds iff it holds on the window.
 */

namespace gatecalc
{

bool is_linear(InertGate const &g);
/// g(x) + g(0) is linear in x.
bool is_affine(InertGate const &g);

/// Inert part copies each coordinate from exactly one coordinate, bijectively.
bool is_wire_permutation(GroupElement const &f);
/// f(x) = sigma^n(x) + c for a finite-support constant c.
bool is_lamplighter(GroupElement const &f);

/// Output bit at window position `out` changes when input bit `in` is flipped, for some input.
bool depends_on(InertGate const &g, unsigned out, unsigned in);

/// Every output coordinate i depends only on input coordinates <= i.
bool in_GR(InertGate const &g);
/// Every output coordinate i depends only on input coordinates >= i.
bool in_GL(InertGate const &g);

/**
 * g(x) + x lies in one coset v0 + V for all x, where V is the span of the shifts
 * of w. v0 is taken at the all-zero input. Throws if w is zero.
 */
bool in_GV(InertGate const &g, BitWord const &w);

enum class SwapVerdict
{
  universal,
  trivial,
  right_one_sided,
  left_one_sided,
  coset_preserving,
};

char const *to_string(SwapVerdict v);

struct SwapClass
{
  SwapVerdict verdict = SwapVerdict::trivial;
  BitWord difference;
  /// Generator word of V for coset_preserving.
  std::optional<BitWord> witness;
  /// Name of the proper subgroup containing {c0, f_uv, sigma}; empty if universal.
  std::string subgroup;
  /// The generators were checked against the subgroup's membership predicate.
  bool witness_verified = false;
};

/// d matches 0*0100*: a single 1 that is at neither end.
bool is_universal_pattern(BitWord const &d);

SwapClass classify_swap(BitWord const &u, BitWord const &v);

/// (u, v) if f is a word swap f_{u,v} over its canonical window, relative to its lowest cell.
std::optional<std::pair<BitWord, BitWord>> as_word_swap(InertGate const &g);

enum class EcaVerdict
{
  not_bijective,
  universal,
  non_universal,
  undetermined,
};

enum class EcaReason
{
  none,
  identity_like,
  equals_c0,
  affine,
  fixes_uniform_point,
  one_sided,
};

char const *to_string(EcaVerdict v);
char const *to_string(EcaReason r);

struct EcaClass
{
  unsigned rule = 0;
  EcaVerdict verdict = EcaVerdict::not_bijective;
  EcaReason reason = EcaReason::none;
  /// Universal only: the flip word evaluated to c0 under `certificate_convention`,
  /// and c0 o e^rule is a word swap with a universal difference pattern.
  bool certificate_verified = false;
  std::optional<LetterConvention> certificate_convention;
  std::optional<std::pair<BitWord, BitWord>> swap_pair;
};

EcaClass classify_eca(unsigned rule);

} // namespace gatecalc
