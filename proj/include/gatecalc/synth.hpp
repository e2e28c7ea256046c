#pragma once

#include <map>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "expr.hpp"

/**
 * @file synth.hpp
 * @brief Straight-line programs for the NCT gates from {c0, f_uv, sigma}.
 *
 * Programs are GateExpr words over the generators "c0" (flip) and "f" (the
 * word swap being used); shifts appear as atom cells. Every program returned
 * here has been evaluated and compared with its target gate at cell 0.
 */

namespace gatecalc
{

enum class Side
{
  left,
  right,
};

class NotUniversal : public Error
{
public:
  explicit NotUniversal(SwapClass cls);
  SwapClass const &classification() const { return _cls; }

private:
  SwapClass _cls;
};

/// Dictionary {c0, f = f_{u,v}}.
GeneratorDict swap_dictionary(BitWord const &u, BitWord const &v);

/**
 * Program over {c0, f = f_{0^n, v}} for f_{0^(n-1), v'} at cell 0, where v'
 * drops the first (left) or last (right) bit of v. That bit must be 0 and
 * |v| >= 2.
 */
GateExpr eliminate_bit(BitWord const &v, Side side);

struct NctSynthesis
{
  SwapClass classification;
  GeneratorDict dict;
  /// Keys c1, rc1, s, c2.
  std::map<std::string, GateExpr> programs;
};

/// Programs for c1, R c1 R, s and c2 (all at cell 0). Throws NotUniversal otherwise.
NctSynthesis synthesize_nct(BitWord const &u, BitWord const &v);

/// The target gate for a program key (c1, rc1, s, c2).
GroupElement nct_target(std::string const &key);

struct CheckLine
{
  std::string name;
  bool pass = false;
};

/// Identities showing {c2, s, c0, sigma} and {c2, c1, Rc1R, c0, sigma} express each other.
std::vector<CheckLine> standard_generating_checks();

} // namespace gatecalc
