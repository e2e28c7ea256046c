#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gates.hpp"

namespace gatecalc
{

/// One letter of a gate word: generator `name` applied at `cell`, optionally inverted.
struct Atom
{
  std::string name;
  int cell = 0;
  bool inverse = false;

  bool operator==(Atom const &) const = default;
  auto operator<=>(Atom const &) const = default;
};

using GeneratorDict = std::map<std::string, GroupElement, std::less<>>;

/**
 * A word over shift-conjugated generators. Atoms are listed as in function
 * composition: the leftmost atom is applied last.
 *
 * Text form: whitespace separated atoms "name[@cell][^-1]", e.g.
 * "e57@1 e57@0 e57@-1" or "c0@2 f c0@2". A string with no whitespace made only
 * of single letters or digits is read one character per atom ("abcab", "2343").
 */
class GateExpr
{
public:
  GateExpr() = default;
  explicit GateExpr(std::vector<Atom> atoms) : _atoms(std::move(atoms)) {}

  static GateExpr parse(std::string_view text);
  static GateExpr atom(std::string name, int cell = 0, bool inverse = false);

  std::vector<Atom> const &atoms() const { return _atoms; }
  std::size_t size() const { return _atoms.size(); }
  bool empty() const { return _atoms.empty(); }

  GateExpr operator*(GateExpr const &rhs) const;
  GateExpr &operator*=(GateExpr const &rhs);

  /// sigma^-k o (this) o sigma^k: every atom moves k cells.
  GateExpr shifted(int k) const;
  /// Formal inverse (reversed, each atom inverted).
  GateExpr inverted() const;
  /// Reversed word, atoms untouched.
  GateExpr reversed() const;

  std::string to_string() const;

  bool operator==(GateExpr const &) const = default;

private:
  std::vector<Atom> _atoms;
};

/// Composition of the atoms, leftmost applied last.
GroupElement evaluate_expr(GateExpr const &expr, GeneratorDict const &dict);

/// Same word, leftmost atom applied first.
GroupElement evaluate_expr_left_first(GateExpr const &expr, GeneratorDict const &dict);

/// Remove adjacent cancelling pairs (x x^-1, or x x for involutive generators) until none remain.
GateExpr peephole(GateExpr const &expr, GeneratorDict const &dict);

/// Number of adjacent cancelling pairs in the word (without repeated passes).
std::size_t count_adjacent_cancellations(GateExpr const &expr, GeneratorDict const &dict);

} // namespace gatecalc
