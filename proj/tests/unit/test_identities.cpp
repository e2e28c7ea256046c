#include <doctest.h>

#include "gatecalc/identities.hpp"

using namespace gatecalc;

TEST_CASE("the 50-letter word gives the flip")
{
  CHECK(flip_word.size() == 50);
  GeneratorDict const abc = abc_generators(make_eca(57), LetterConvention::standard);
  CHECK(evaluate_expr(GateExpr::parse(flip_word), abc) == make_flip());
}

TEST_CASE("letter conventions")
{
  GroupElement const e = make_eca(57);
  GeneratorDict const s = abc_generators(e, LetterConvention::standard);
  // a = sigma o e o sigma^-1
  CHECK(s.at("a") == compose(compose(make_sigma(1), e), make_sigma(-1)));
  CHECK(s.at("b") == e);
  CHECK(s.at("c") == compose(compose(make_sigma(-1), e), make_sigma(1)));
  GeneratorDict const m = abc_generators(e, LetterConvention::mirrored);
  CHECK(m.at("a") == s.at("c"));
  CHECK(m.at("c") == s.at("a"));
}

TEST_CASE("every convention yields the flip because the letters are involutions")
{
  GroupElement const e = make_eca(57);
  for (auto const &letter : abc_generators(e, LetterConvention::standard))
    CHECK(compose(letter.second, letter.second).is_identity());
  auto const results = check_word_conventions(flip_word, e, make_flip());
  CHECK(results.size() == 4);
  for (auto const &r : results)
    CHECK(r.equals_target);
}

TEST_CASE("standard gate identities")
{
  CHECK(swap_from_cnots_holds());
  CHECK(toffoli_is_word_swap());
}
