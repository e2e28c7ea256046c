#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gatecalc/grammar.hpp"

using namespace gatecalc;

namespace
{

std::string read_fixture(std::string const &name)
{
  std::ifstream in(std::string(GATECALC_TEST_DATA) + "/strings/" + name);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", name);
  std::string s;
  in >> s;
  return s;
}

std::uint64_t fnv1a(std::string_view s)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s)
    h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

} // namespace

TEST_CASE("reference strings are intact")
{
  std::ifstream sums(std::string(GATECALC_TEST_DATA) + "/strings/checksums.txt");
  REQUIRE(sums.good());
  std::string start;
  std::size_t length = 0;
  std::string digest;
  unsigned rows = 0;
  while (sums >> start >> length >> digest) {
    std::string const s = read_fixture(start + ".txt");
    CHECK(s.size() == length);
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << fnv1a(s);
    CHECK(hex.str() == digest);
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("expansions match the reference strings byte for byte")
{
  for (auto start : start_symbols())
    CHECK_MESSAGE(expand(start) == read_fixture(std::string(start) + ".txt"), start);
}

TEST_CASE("written order differs from the reference for composite symbols")
{
  Slg const &g = Slg::standard();
  CHECK(g.expand("N3", ExpansionOrder::written) == g.expand("N3", ExpansionOrder::application));
  CHECK(g.expand("C3", ExpansionOrder::written) != read_fixture("C3.txt"));
  CHECK(g.expand("C3", ExpansionOrder::written).size() == 202);
}

TEST_CASE("expansion lengths")
{
  CHECK(expand("N3").size() == 50);
  CHECK(expand("C3").size() == 202);
  CHECK(expand("D3").size() == 302);
  CHECK(expand("S3").size() == 706);
  CHECK(expand("T3").size() == 1563);
}

TEST_CASE("unknown start symbols are rejected")
{
  CHECK_THROWS_AS(expand("E3"), Error);
  CHECK_THROWS_AS(expand("X"), Error);
  CHECK_THROWS_AS(start_target("N2"), Error);
}

TEST_CASE("grammar validation")
{
  using P = std::vector<Slg::Production>;
  CHECK_THROWS_AS(Slg(P{{"A", {"B"}}, {"B", {"A"}}}), Error);
  CHECK_THROWS_AS(Slg(P{{"A", {"Q"}}}), Error);
  Slg const g(P{{"A", {"B", "1", "B"}}, {"B", {"23"}}});
  CHECK(g.expand("A", ExpansionOrder::written) == "23123");
  CHECK(g.expand("A", ExpansionOrder::application) == "23123");
  Slg const h(P{{"A", {"B", "1"}}, {"B", {"23"}}});
  CHECK(h.expand("A", ExpansionOrder::application) == "123");
}

TEST_CASE("terminal strings compose with the first digit applied first")
{
  GateExpr const e = terminal_expr("23");
  REQUIRE(e.size() == 2);
  CHECK(e.atoms()[0] == Atom{"e57", 3, false});
  CHECK(e.atoms()[1] == Atom{"e57", 2, false});
  CHECK_THROWS_AS(terminal_expr("2a"), Error);
}

TEST_CASE("expansions implement their gates at cell 3")
{
  for (auto start : start_symbols()) {
    SemanticsReport const r = verify_semantics(start, start_target(start));
    CHECK_MESSAGE(r.pass(), start);
    CHECK(r.cell() == 3);
  }
}

TEST_CASE("expansions work on small rings")
{
  for (auto start : start_symbols())
    for (unsigned n : {4u, 5u, 7u})
      CHECK(verify_on_ring(start, start_target(start), n, 3));
  CHECK_FALSE(verify_on_ring("C3", start_target("C3"), 6, 2));
  CHECK_THROWS_AS(verify_on_ring("N3", make_flip(), 3, 3), RingTooSmall);
}

TEST_CASE("adjacent repeated terminals")
{
  CHECK(count_repeated_terminals("1223334") == 3);
  CHECK(count_repeated_terminals(expand("N3")) == 0);
}
