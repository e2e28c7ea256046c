#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic.hpp"
#include "expr.hpp"

namespace gatecalc
{

/**
 * How a production's right-hand side is laid out in the terminal string.
 * Productions are written as compositions (leftmost factor applied last);
 * `application` lists factors in the order they act, which is the layout of
 * the published gate strings. `written` copies the right-hand side verbatim.
 */
enum class ExpansionOrder
{
  application,
  written,
};

/**
 * Straight-line grammar producing implementations of the standard gates as
 * words over shift-conjugates of e^57. A terminal digit i stands for e^57 at
 * cell i, i.e. sigma^-i o e^57 o sigma^i.
 *
 * Nonterminals: N2 N3 N4 N5 (flip at cell i), C3 (CNOT), D3 D4 (reversed CNOT),
 * S3 (swap), T3 (Toffoli), E3 E4 (the barred helpers "N_i i").
 */
class Slg
{
public:
  struct Production
  {
    std::string lhs;
    std::vector<std::string> rhs; ///< nonterminal names or terminal digit runs
  };

  /// The built-in grammar; its acyclicity is checked on construction.
  static Slg const &standard();

  explicit Slg(std::vector<Production> productions);

  std::vector<Production> const &productions() const { return _productions; }
  bool is_nonterminal(std::string_view symbol) const;

  /// Unique terminal string derived from `symbol` (any nonterminal).
  std::string expand(std::string_view symbol,
                     ExpansionOrder order = ExpansionOrder::application) const;

private:
  Production const &find(std::string_view symbol) const;
  void check_acyclic() const;

  std::vector<Production> _productions;
};

/// Start symbols that denote standard gates, in the order N3 C3 T3 D3 S3.
std::span<std::string_view const> start_symbols();

/// Standard gate a start symbol implements (c0, c1, c2, rc1 or s, at cell 0).
GroupElement start_target(std::string_view start);

/// Slg::standard().expand(start) in application order, restricted to start symbols.
std::string expand(std::string_view start);

/**
 * Terminal digit string (application order) as a gate word in composition
 * order: the last digit becomes the leftmost atom.
 */
GateExpr terminal_expr(std::string_view digits);

/// Dictionary with the single generator "e57".
GeneratorDict e57_dictionary();

struct SemanticsReport
{
  std::string start;
  std::size_t length = 0;
  /// Cell k in [0, 8] with expansion == target at cell k, first digit applied first.
  std::optional<int> cell_first_applied_first;
  /// Same, reading the string the other way round (first digit applied last).
  std::optional<int> cell_first_applied_last;

  bool pass() const { return cell_first_applied_first.has_value(); }
  std::optional<int> cell() const { return cell_first_applied_first; }
};

/// Evaluate the expansion on the full shift and locate the target among its shift-conjugates.
SemanticsReport verify_semantics(std::string_view start, GroupElement const &target);

/**
 * Compose the projections to the ring of size n of the terminals and compare
 * with the projection of the target placed at `cell`.
 */
bool verify_on_ring(std::string_view start, GroupElement const &target, unsigned n, int cell);

/// Pairs of equal adjacent terminals in the expansion (each pair cancels).
std::size_t count_repeated_terminals(std::string_view digits);

} // namespace gatecalc
