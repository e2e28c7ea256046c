#include <doctest.h>

#include "../support.hpp"

using namespace gatecalc;
using namespace testsupport;

namespace
{

Config to_config(Placement const &p)
{
  Config c;
  for (unsigned i = 0; i < p.word.length(); ++i)
    c[p.anchor + static_cast<int>(i)] = p.word[i];
  return c;
}

Placement from_config(Config const &c, int lo, int hi)
{
  BitWord w = BitWord::zeros(static_cast<unsigned>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i)
    w = w.with_bit(static_cast<unsigned>(i - lo), cell(c, i));
  return Placement{w, lo};
}

// A random group element sigma^k o g.
GroupElement random_element(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> sd(-2, 2);
  GroupElement f = from_inert(random_gate(rng, 4));
  f.shift = sd(rng);
  return f;
}

Config apply_config(GroupElement const &f, Config const &x)
{ return to_config(apply(f, from_config(x, -20, 20).word, -20)); }

} // namespace

TEST_CASE("e57 has the expected local rule")
{
  GroupElement const e = make_eca(57);
  REQUIRE(e.is_inert());
  CHECK(e.inert.lo() == -1);
  CHECK(e.inert.hi() == 1);
  std::vector<std::uint32_t> const expected{2, 1, 0, 3, 6, 7, 4, 5};
  auto const t = e.inert.table();
  CHECK(std::vector<std::uint32_t>(t.begin(), t.end()) == expected);
}

TEST_CASE("asynchronous ECA tables follow the rule number bit by bit")
{
  for (unsigned rule = 0; rule < 256; ++rule) {
    if (!eca_is_bijective(rule))
      continue;
    GroupElement const e = make_eca(rule);
    for (std::uint32_t x = 0; x < 8; ++x) {
      Config c{{-1, (x >> 2) & 1}, {0, (x >> 1) & 1}, {1, x & 1}};
      Config expected = c;
      expected[0] = (rule >> x) & 1u;
      CHECK(same_config(naive_apply(e, c), expected));
    }
  }
}

TEST_CASE("exactly sixteen ECA rules are bijective")
{
  unsigned n = 0;
  for (unsigned rule = 0; rule < 256; ++rule) {
    // oracle: for every context (l, r) the map x0 -> out must be a bijection on {0, 1}
    bool bij = true;
    for (unsigned l = 0; l < 2; ++l)
      for (unsigned r = 0; r < 2; ++r) {
        unsigned const a = (rule >> (l * 4 + r)) & 1u;
        unsigned const b = (rule >> (l * 4 + 2 + r)) & 1u;
        bij = bij && a != b;
      }
    CHECK(eca_is_bijective(rule) == bij);
    n += bij;
    if (!bij)
      CHECK_THROWS_AS(make_eca(rule), EcaNotInvertible);
  }
  CHECK(n == 16);
}

TEST_CASE("named gates")
{
  CHECK(make_named("c0") == make_flip());
  CHECK(make_named("flip") == make_flip());
  CHECK(make_named("swap") == make_swap());
  CHECK(make_named("ck2") == make_cnot_k(2));
  CHECK(make_named("e57") == make_eca(57));
  CHECK(make_named("id").is_identity());
  CHECK(make_named("sigma").shift == 1);
  CHECK_THROWS_AS(make_named("zz"), Error);
  CHECK_THROWS_AS(make_named("e"), Error);

  // c^k flips cell 0 iff cells 1..k are all 1
  GroupElement const c3 = make_cnot_k(3);
  CHECK(c3.inert.lo() == 0);
  CHECK(c3.inert.hi() == 3);
  Config const ones{{1, 1}, {2, 1}, {3, 1}};
  Config flipped = ones;
  flipped[0] = 1;
  CHECK(same_config(naive_apply(c3, ones), flipped));
  Config const gap{{1, 1}, {2, 0}, {3, 1}};
  CHECK(same_config(naive_apply(c3, gap), gap));
}

TEST_CASE("canonical form shrinks to the active window and preserves the action")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    InertGate const g = random_gate(rng, 3);
    // pad with one passive cell on each side
    unsigned const w = g.width();
    if (w == 0)
      continue;
    WindowRule padded{g.lo() - 1, g.hi() + 1, std::vector<std::uint32_t>(std::size_t{1} << (w + 2))};
    for (std::uint32_t x = 0; x < padded.table.size(); ++x) {
      std::uint32_t const mid = (x >> 1) & ((1u << w) - 1u);
      padded.table[x] = (x & ~(((1u << w) - 1u) << 1)) | (g(mid) << 1);
    }
    InertGate const c = canonicalize(padded);
    CHECK(c == g);
    CHECK(c.lo() == g.lo());
    CHECK(c.hi() == g.hi());

    Config const x = random_config(rng, -8, 8);
    CHECK(same_config(naive_apply(from_inert(c), x), naive_apply(from_inert(g), x)));
  }
}

TEST_CASE("canonicalization rejects non-permutations and oversize windows")
{
  CHECK_THROWS_AS(canonicalize(WindowRule{0, 1, {0, 0, 1, 2}}), Error);
  CHECK_THROWS_AS(canonicalize(WindowRule{0, 0, {0}}), Error);
  auto const cap = window_cap();
  set_window_cap(3);
  CHECK_THROWS_AS(make_cnot_k(3), WindowCapExceeded);
  try {
    make_cnot_k(5);
  } catch (WindowCapExceeded const &e) {
    CHECK(e.required() == 6);
  }
  set_window_cap(cap);
}

TEST_CASE("identity tables canonicalize to the identity")
{
  CHECK(canonicalize(WindowRule{-2, 1, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}}).is_identity());
}

TEST_CASE("composition applies the right factor first")
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    GroupElement const f = random_element(rng);
    GroupElement const g = random_element(rng);
    Config const x = random_config(rng, -10, 10);
    CHECK(same_config(naive_apply(compose(f, g), x), naive_apply(f, naive_apply(g, x))));
    CHECK(same_config(apply_config(compose(f, g), x), naive_apply(f, naive_apply(g, x))));
  }
}

TEST_CASE("group laws")
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement const f = random_element(rng);
    GroupElement const g = random_element(rng);
    GroupElement const h = random_element(rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(compose(inverse(f), f).is_identity());
    CHECK(compose(f, identity()) == f);
    CHECK(compose(identity(), f) == f);
    CHECK(compose(f, g).shift == f.shift + g.shift);
    CHECK(inverse(compose(f, g)) == compose(inverse(g), inverse(f)));
  }
}

TEST_CASE("shift conjugation places a gate at another cell")
{
  std::mt19937_64 rng(23);
  GroupElement const sigma = make_sigma(1);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement const f = random_element(rng);
    std::uniform_int_distribution<int> kd(-5, 5);
    int const k = kd(rng);
    GroupElement manual = f;
    for (int i = 0; i < (k < 0 ? -k : k); ++i)
      manual = k > 0 ? compose(compose(inverse(sigma), manual), sigma)
                     : compose(compose(sigma, manual), inverse(sigma));
    CHECK(shift_conjugate(f, k) == manual);
    if (!f.inert.is_identity()) {
      CHECK(shift_conjugate(f, k).inert.lo() == f.inert.lo() + k);
    }
  }
}

TEST_CASE("reversal conjugation mirrors the window")
{
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement const f = random_element(rng);
    GroupElement const r = reverse_conjugate(f);
    CHECK(reverse_conjugate(r) == f);
    CHECK(r.shift == -f.shift);
    // (R f R)(x) = R(f(R x)), with (R x)_i = x_{-i}
    Config const x = random_config(rng, -10, 10);
    Config rx;
    for (auto const &[i, v] : x)
      rx[-i] = v;
    Config const fr = naive_apply(f, rx);
    Config expected;
    for (auto const &[i, v] : fr)
      expected[-i] = v;
    CHECK(same_config(naive_apply(r, x), expected));
  }
  CHECK(reverse_conjugate(make_eca(57)) == make_eca(99));
}

TEST_CASE("powers")
{
  CHECK(power(make_flip(), 2).is_identity());
  CHECK(power(make_sigma(1), 3) == make_sigma(3));
  CHECK(power(make_eca(57), 0).is_identity());
}

TEST_CASE("apply needs the whole window and re-anchors by the shift power")
{
  BitWord const x = BitWord::from_string("0110");
  CHECK_THROWS_WITH_AS(apply(make_eca(57), x, 0), "insufficient context: missing coordinates -1", Error);
  Placement const p = apply(make_eca(57), x, -1);
  CHECK(p.anchor == -1);
  Placement const s = apply(make_sigma(2), x, 0);
  CHECK(s.word == x);
  CHECK(s.anchor == -2);
}

TEST_CASE("word swap exchanges exactly two window contents")
{
  GroupElement const f = make_word_swap(BitWord::from_string("011"), BitWord::from_string("111"));
  CHECK(f == make_cnot_k(2));
  CHECK(make_word_swap(BitWord::from_string("01"), BitWord::from_string("01")).is_identity());
  CHECK_THROWS_AS(make_word_swap(BitWord::from_string("0"), BitWord::from_string("01")), Error);
}

TEST_CASE("describe")
{
  CHECK(describe(make_flip()) == "shift 0, window [0, 0], table [1 0]");
  CHECK(describe(make_sigma(1)) == "shift 1, inert identity");
}
