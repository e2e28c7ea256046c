#include <doctest.h>

#include <functional>

#include "../support.hpp"
#include "gatecalc/search.hpp"

using namespace gatecalc;
using namespace testsupport;

namespace
{

GroupElement evaluate_word(std::vector<unsigned> const &w, std::vector<GroupElement> const &gens)
{
  GroupElement p;
  for (unsigned x : w)
    p = compose(p, gens[x]);
  return p;
}

// Lexicographically least shortest word by plain enumeration, or nullopt.
std::optional<std::vector<unsigned>> enumerate(std::vector<GroupElement> const &gens,
                                               GroupElement const &target, unsigned max_len)
{
  for (unsigned len = 0; len <= max_len; ++len) {
    std::vector<unsigned> w(len, 0);
    while (true) {
      if (evaluate_word(w, gens) == target)
        return w;
      int i = static_cast<int>(len) - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] + 1 == gens.size())
        w[static_cast<std::size_t>(i--)] = 0;
      if (i < 0)
        break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
  return std::nullopt;
}

} // namespace

TEST_CASE("BFS and MITM agree with enumeration on toy generator sets")
{
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> nd(2, 3);
    std::vector<GroupElement> gens;
    for (int i = nd(rng); i > 0; --i)
      gens.push_back(from_inert(random_gate(rng, 2, 0, 1)));
    std::uniform_int_distribution<unsigned> ld(0, 6);
    std::uniform_int_distribution<std::size_t> gd(0, gens.size() - 1);
    std::vector<unsigned> w(ld(rng));
    for (auto &x : w)
      x = static_cast<unsigned>(gd(rng));
    GroupElement const target = evaluate_word(w, gens);
    auto const expected = enumerate(gens, target, 6);
    REQUIRE(expected);

    for (auto strategy : {SearchStrategy::bfs, SearchStrategy::mitm}) {
      SearchConfig cfg;
      cfg.generators = gens;
      cfg.target = target;
      cfg.max_depth = strategy == SearchStrategy::bfs ? 6 : 3;
      cfg.strategy = strategy;
      SearchResult const r = search(cfg);
      REQUIRE(r.status == SearchStatus::found);
      CHECK(r.certified);
      CHECK(r.shortest);
      CHECK(r.word == *expected);
    }
  }
}

TEST_CASE("identity target gives the empty word")
{
  SearchConfig cfg;
  cfg.generators = {make_eca(57)};
  cfg.target = identity();
  for (auto strategy : {SearchStrategy::bfs, SearchStrategy::mitm}) {
    cfg.strategy = strategy;
    SearchResult const r = search(cfg);
    CHECK(r.status == SearchStatus::found);
    CHECK(r.word.empty());
  }
}

TEST_CASE("the flip alone cannot make the swap")
{
  SearchConfig cfg;
  cfg.generators = {make_flip()};
  cfg.target = make_swap();
  cfg.max_depth = 10;
  for (auto strategy : {SearchStrategy::bfs, SearchStrategy::mitm}) {
    cfg.strategy = strategy;
    SearchResult const r = search(cfg);
    CHECK(r.status == SearchStatus::not_found_within_depth);
    CHECK(r.stats.ball_closed);
    CHECK(r.stats.states == 2);
  }
}

TEST_CASE("ball growth for the three shifted copies of e57")
{
  GroupElement const e = make_eca(57);
  SearchConfig cfg;
  cfg.generators = {shift_conjugate(e, -1), e, shift_conjugate(e, 1)};
  cfg.target = make_flip();
  cfg.max_depth = 8;
  cfg.strategy = SearchStrategy::bfs;
  SearchResult const r = search(cfg);
  CHECK(r.status == SearchStatus::not_found_within_depth);
  CHECK(r.stats.window_lo == -2);
  CHECK(r.stats.window_hi == 2);
  // involutions, a and c commute: 1, 3, 5, 8, 13, ...
  CHECK(r.stats.layer_sizes == std::vector<std::uint64_t>{1, 3, 5, 8, 13, 21, 34, 55, 89});
}

TEST_CASE("budget exhaustion is reported")
{
  GroupElement const e = make_eca(57);
  SearchConfig cfg;
  cfg.generators = {shift_conjugate(e, -1), e, shift_conjugate(e, 1)};
  cfg.target = make_flip();
  cfg.max_depth = 25;
  cfg.memory_budget = 4u << 20;
  SearchResult const r = search(cfg);
  CHECK(r.status == SearchStatus::budget_exceeded);
  CHECK(r.stats.bytes <= cfg.memory_budget);
  CHECK(r.stats.states > 0);
}

TEST_CASE("invalid configurations")
{
  SearchConfig cfg;
  cfg.generators = {make_sigma(1)};
  cfg.target = make_flip();
  CHECK_THROWS_AS(search(cfg), Error);
  cfg.generators = {make_flip()};
  cfg.target = make_sigma(1);
  CHECK_THROWS_AS(search(cfg), Error);
  cfg.target = make_flip();
  cfg.max_depth = 0;
  CHECK_THROWS_AS(search(cfg), Error);
  cfg.max_depth = 1;
  cfg.generators = {make_cnot_k(9)};
  CHECK_THROWS_AS(search(cfg), Error);
  cfg.generators.clear();
  CHECK_THROWS_AS(search(cfg), Error);
}

TEST_CASE("byte counts and names")
{
  CHECK(parse_byte_count("512") == 512);
  CHECK(parse_byte_count("64K") == 65536);
  CHECK(parse_byte_count("8M") == 8u << 20);
  CHECK(parse_byte_count("2g") == std::uint64_t{2} << 30);
  CHECK_THROWS_AS(parse_byte_count("x"), Error);
  CHECK_THROWS_AS(parse_byte_count("G"), Error);
  CHECK_THROWS_AS(parse_byte_count(""), Error);
  CHECK(word_expr({0, 2, 1}, {"a", "b", "c"}).to_string() == "a c b");
  CHECK_THROWS_AS(word_expr({3}, {"a"}), Error);
  CHECK(parse_strategy("bfs") == SearchStrategy::bfs);
  CHECK_THROWS_AS(parse_strategy("dfs"), Error);
}
