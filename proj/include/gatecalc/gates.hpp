#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitword.hpp"

/**
 * @file gates.hpp
 * @brief Elements of the group generated by the shift and local permutations
 * of the binary full shift.
 *
 * Conventions used throughout:
 *  - (sigma x)_i = x_{i+1}.
 *  - In f o g, g is applied first.
 *  - shift_conjugate(f, k) = sigma^-k o f o sigma^k; for a gate acting on the
 *    window [l, r] this is the same gate acting on [l + k, r + k]. We say the
 *    result is "f at cell k".
 *  - Tables over a window [l, r] are indexed by the MSB-first encoding of
 *    x_{[l, r]}: coordinate l is the most significant bit.
 */

namespace gatecalc
{

inline constexpr unsigned default_window_cap = 24;

/// Process-wide limit on the width of any gate table (bits).
unsigned window_cap();
void set_window_cap(unsigned cap);

class WindowCapExceeded : public Error
{
public:
  WindowCapExceeded(unsigned required, unsigned cap);
  unsigned required() const { return _required; }

private:
  unsigned _required;
};

/// A permutation table over an explicit window; input to canonicalize().
struct WindowRule
{
  int lo = 0;
  int hi = -1;
  std::vector<std::uint32_t> table;

  unsigned width() const { return static_cast<unsigned>(hi - lo + 1); }
};

/**
 * An inert element (gate) in canonical form: the window is shrunk until both
 * boundary coordinates are either changed or read by the rule. The identity is
 * the distinguished value with an empty window.
 */
class InertGate
{
public:
  InertGate() = default;

  bool is_identity() const { return !_table; }

  int lo() const { return _lo; }
  int hi() const { return _hi; }
  unsigned width() const { return is_identity() ? 0u : static_cast<unsigned>(_hi - _lo + 1); }

  /// Strong shift-invariant radius: smallest R with a window [m-R, m+R] covering the gate.
  unsigned radius() const { return width() / 2u; }
  /// Least m such that [m - R, m + R] covers the gate.
  int offset() const { return _hi - static_cast<int>(radius()); }

  std::span<std::uint32_t const> table() const;

  /// Local rule on the window [offset() - R, offset() + R] (width 2R + 1).
  std::vector<std::uint32_t> padded_rule() const;

  /// Image of the window word x (MSB-first over [lo, hi]).
  std::uint32_t operator()(std::uint32_t x) const { return (*_table)[x]; }

  /// Apply to a word over [base, base + width) that contains the gate window.
  std::uint64_t apply_embedded(std::uint64_t x, int base, unsigned width) const;

  InertGate translated(int k) const;

  bool operator==(InertGate const &other) const;

private:
  friend InertGate canonicalize_trusted(WindowRule rule);

  int _lo = 0;
  int _hi = -1;
  std::shared_ptr<std::vector<std::uint32_t> const> _table;
};

/// Normal form sigma^shift o inert.
struct GroupElement
{
  int shift = 0;
  InertGate inert;

  bool is_identity() const { return shift == 0 && inert.is_identity(); }
  bool is_inert() const { return shift == 0; }

  bool operator==(GroupElement const &) const = default;
};

GroupElement identity();

InertGate canonicalize(WindowRule rule);
/// canonicalize() without the bijectivity check.
InertGate canonicalize_trusted(WindowRule rule);

GroupElement compose(GroupElement const &f, GroupElement const &g);
GroupElement inverse(GroupElement const &f);
GroupElement shift_conjugate(GroupElement const &f, int k);
/// R o f o R where R is the reversal x_i -> x_{-i}.
GroupElement reverse_conjugate(GroupElement const &f);
/// f^k for k >= 0.
GroupElement power(GroupElement const &f, unsigned k);

InertGate compose(InertGate const &f, InertGate const &g);
InertGate inverse(InertGate const &f);
InertGate reverse_conjugate(InertGate const &f);

GroupElement from_inert(InertGate g);

GroupElement make_sigma(int power = 1);
GroupElement make_flip();                      // c^0
GroupElement make_cnot_k(unsigned k);          // c^k
GroupElement make_swap();                      // s
/// Named gates: id, sigma, c0, c1, c2, ck<k>, rc1, s|swap, e<b>.
GroupElement make_named(std::string_view name);

GroupElement make_word_swap(BitWord const &u, BitWord const &v);

class EcaNotInvertible : public Error
{
public:
  EcaNotInvertible(unsigned rule, bool left, bool right);
};

/// Asynchronous application of elementary CA rule b at cell 0.
GroupElement make_eca(unsigned rule);
bool eca_is_bijective(unsigned rule);

/// A finite configuration: word placed so that word[0] sits at coordinate anchor.
struct Placement
{
  BitWord word;
  int anchor = 0;

  bool operator==(Placement const &) const = default;
};

/**
 * Apply f to a finite configuration. The inert window must lie inside the
 * covered coordinates. The result covers the same data, re-anchored by the
 * shift power (sigma^n moves coordinate i + n to i).
 */
Placement apply(GroupElement const &f, BitWord const &x, int anchor);

std::string describe(GroupElement const &f);

} // namespace gatecalc
