#include "gatecalc/identities.hpp"

namespace gatecalc
{

GeneratorDict abc_generators(GroupElement const &base, LetterConvention convention)
{
  int const a_cell = convention == LetterConvention::standard ? -1 : 1;
  return GeneratorDict{
    {"a", shift_conjugate(base, a_cell)},
    {"b", base},
    {"c", shift_conjugate(base, -a_cell)},
  };
}

std::vector<ConventionResult> check_word_conventions(std::string_view word,
                                                     GroupElement const &base,
                                                     GroupElement const &target)
{
  GateExpr const expr = GateExpr::parse(word);
  std::vector<ConventionResult> out;
  for (auto letters : {LetterConvention::standard, LetterConvention::mirrored}) {
    auto const dict = abc_generators(base, letters);
    out.push_back({letters, CompositionOrder::leftmost_last,
                   evaluate_expr(expr, dict) == target});
    out.push_back({letters, CompositionOrder::leftmost_first,
                   evaluate_expr_left_first(expr, dict) == target});
  }
  return out;
}

bool swap_from_cnots_holds()
{
  GroupElement const c1 = make_cnot_k(1);
  GroupElement const rc1 = reverse_conjugate(c1);
  GroupElement const middle = compose(make_sigma(-1), compose(rc1, make_sigma(1)));
  return compose(c1, compose(middle, c1)) == make_swap();
}

bool toffoli_is_word_swap()
{
  return make_word_swap(BitWord::from_string("011"), BitWord::from_string("111")) ==
         make_cnot_k(2);
}

} // namespace gatecalc
