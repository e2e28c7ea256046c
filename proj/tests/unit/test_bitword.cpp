#include <doctest.h>

#include "gatecalc/bitword.hpp"

using namespace gatecalc;

namespace
{

std::uint64_t clmul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r = 0;
  for (unsigned i = 0; i < 64; ++i)
    if ((b >> i) & 1u)
      r ^= a << i;
  return r;
}

std::uint64_t strip(std::uint64_t p)
{
  while (p && !(p & 1u))
    p >>= 1;
  return p;
}

// p is a multiple of d in GF(2)[x, 1/x] iff strip(p) = q * strip(d) for some polynomial q.
bool divides_by_search(std::uint64_t d, std::uint64_t p)
{
  d = strip(d);
  p = strip(p);
  if (p == 0)
    return true;
  for (std::uint64_t q = 1; q < 512; ++q)
    if (clmul(q, d) == p)
      return true;
  return false;
}

} // namespace

TEST_CASE("bit words use most-significant-first encoding")
{
  BitWord const w = BitWord::from_string("110");
  CHECK(w.value() == 6);
  CHECK(w.length() == 3);
  CHECK(w[0]);
  CHECK(w[1]);
  CHECK_FALSE(w[2]);
  CHECK(w.to_string() == "110");
  CHECK(word_to_int(w) == 6);
  CHECK(int_to_word(6, 3) == w);
  CHECK(BitWord::zeros(4).to_string() == "0000");
  CHECK(w.slice(1, 2).to_string() == "10");
  CHECK(w.concat(BitWord::from_string("01")).to_string() == "11001");
  CHECK(w.with_bit(2, true).to_string() == "111");
  CHECK(w.popcount() == 2);
}

TEST_CASE("bit word round trip over all short words")
{
  for (unsigned n = 1; n <= 8; ++n)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitWord const w(v, n);
      CHECK(BitWord::from_string(w.to_string()) == w);
    }
}

TEST_CASE("bit word errors")
{
  CHECK_THROWS_AS(BitWord::from_string("012"), Error);
  CHECK_THROWS_AS(BitWord(8, 3), Error);
  CHECK_THROWS_AS(diff_set(BitWord::from_string("01"), BitWord::from_string("011")), Error);
  CHECK_THROWS_AS(BitWord::from_string("1").slice(0, 2), Error);
}

TEST_CASE("difference set marks the differing coordinates")
{
  CHECK(diff_set(BitWord::from_string("0010"), BitWord::from_string("0111")).to_string() == "0101");
  CHECK(diff_set(BitWord::from_string("11"), BitWord::from_string("11")).popcount() == 0);
}

TEST_CASE("GF(2) Laurent divisibility agrees with exhaustive search")
{
  for (std::uint64_t d = 1; d < 64; ++d)
    for (std::uint64_t p = 0; p < 256; ++p) {
      bool const expected = divides_by_search(d, p);
      CHECK_MESSAGE(gf2_divides(Gf2Poly(d, 0), Gf2Poly(p, 0)) == expected, "d=", d, " p=", p);
    }
}

TEST_CASE("GF(2) divisibility ignores monomial offsets")
{
  Gf2Poly const d(0b11, 0);              // 1 + x
  CHECK(gf2_divides(d, Gf2Poly(0b101, 7)));   // x^7 (1 + x^2) = x^7 (1 + x)^2
  CHECK(gf2_divides(Gf2Poly(0b11, -4), Gf2Poly(0b11, 3)));
  CHECK_FALSE(gf2_divides(d, Gf2Poly(0b111, -2)));
  CHECK_THROWS_AS(gf2_divides(Gf2Poly(), d), Error);
}

TEST_CASE("word to polynomial puts coordinate i at x^i")
{
  Gf2Poly const p = Gf2Poly::from_word(BitWord::from_string("0110"));
  CHECK(p.offset() == 1);
  CHECK(p.coeffs() == 0b11);
  CHECK(Gf2Poly::from_word(BitWord::zeros(3)).is_zero());
}

TEST_CASE("polynomial remainder")
{
  CHECK(gf2_mod(0b101, 0b11) == 0);
  CHECK(gf2_mod(0b111, 0b11) == 1);
  CHECK(gf2_mod(0b1, 0b10) == 1);
  for (std::uint64_t a = 0; a < 128; ++a)
    for (std::uint64_t b = 1; b < 16; ++b) {
      std::uint64_t const r = gf2_mod(a, b);
      bool const zero = r == 0;
      bool exact = false;
      for (std::uint64_t q = 0; q < 128 && !exact; ++q)
        exact = clmul(q, b) == a;
      CHECK(zero == exact);
    }
}
