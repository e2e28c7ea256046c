#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "gatecalc/cyclic.hpp"

using namespace gatecalc;
using namespace testsupport;

namespace
{

// Project by simulating the n-periodic point on three periods and applying the
// translates of the gate that touch the middle period.
std::vector<std::uint32_t> simulated_projection(GroupElement const &f, unsigned n)
{
  int const N = static_cast<int>(n);
  std::vector<std::uint32_t> out(std::size_t{1} << n);
  for (std::uint32_t w = 0; w < out.size(); ++w) {
    Config x;
    for (int i = -3 * N; i < 4 * N; ++i) {
      int const r = ((i % N) + N) % N;
      x[i] = (w >> (n - 1u - static_cast<unsigned>(r))) & 1u;
    }
    for (int k = -2; k <= 2; ++k)
      x = naive_apply(shift_conjugate(from_inert(f.inert), k * N), x);
    x = naive_apply(make_sigma(f.shift), x);
    std::uint32_t y = 0;
    for (int i = 0; i < N; ++i)
      y = (y << 1) | static_cast<std::uint32_t>(cell(x, i));
    out[w] = y;
  }
  return out;
}

bool odd_by_inversions(std::span<std::uint32_t const> p)
{
  std::size_t inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inv += p[i] > p[j];
  return inv % 2 == 1;
}

std::uint64_t brute_necklaces(unsigned n)
{
  std::uint64_t count = 0;
  std::uint32_t const mask = (1u << n) - 1u;
  for (std::uint32_t w = 0; w <= mask; ++w) {
    bool least = true;
    std::uint32_t r = w;
    for (unsigned k = 1; k < n && least; ++k) {
      r = ((r << 1) | (r >> (n - 1u))) & mask;
      least = w <= r;
    }
    count += least;
  }
  return count;
}

} // namespace

TEST_CASE("rotation moves every letter one step left")
{
  CyclicPerm const r = CyclicPerm::rotation(4, 1);
  CHECK(r(word_to_int(BitWord::from_string("1000"))) == word_to_int(BitWord::from_string("0001")));
  CHECK(r(word_to_int(BitWord::from_string("0110"))) == word_to_int(BitWord::from_string("1100")));
  CHECK(compose(r, CyclicPerm::rotation(4, -1)) == CyclicPerm::identity(4));
  CHECK(CyclicPerm::rotation(5, 5) == CyclicPerm::identity(5));
}

TEST_CASE("projection formula matches a direct periodic simulation")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    GroupElement f = from_inert(random_gate(rng, 4));
    std::uniform_int_distribution<int> sd(-2, 2);
    f.shift = sd(rng);
    for (unsigned n = minimum_ring_size(f); n <= 8; ++n) {
      auto const expected = simulated_projection(f, n);
      auto const p = project_formula(f, n);
      CHECK(std::vector<std::uint32_t>(p.table().begin(), p.table().end()) == expected);
      CHECK(project_periodic(f, n) == p);
    }
  }
}

TEST_CASE("e57 wraps around the ring")
{
  for (unsigned n = 4; n <= 9; ++n)
    for (int k = 0; k < static_cast<int>(n); ++k) {
      GroupElement const g = shift_conjugate(make_eca(57), k);
      CHECK(project_formula(g, n) == project_periodic(g, n));
    }
}

TEST_CASE("sign agrees with inversion parity")
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    GroupElement f = from_inert(random_gate(rng, 3));
    std::uniform_int_distribution<int> sd(-3, 3);
    f.shift = sd(rng);
    for (unsigned n = minimum_ring_size(f); n <= 8; ++n) {
      CyclicPerm const p = project_formula(f, n);
      CHECK((sign(p) == Parity::odd) == odd_by_inversions(p.table()));
    }
  }
  for (unsigned n = 1; n <= 9; ++n)
    CHECK((sign(CyclicPerm::rotation(n, 1)) == Parity::odd) == odd_by_inversions(CyclicPerm::rotation(n, 1).table()));
}

TEST_CASE("projections of admissible gates are even")
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement const f = from_inert(random_gate(rng, 5));
    for (unsigned n = minimum_ring_size(f); n <= 9; ++n)
      CHECK(sign(project_formula(f, n)) == Parity::even);
  }
}

TEST_CASE("small rings are rejected with the minimum size")
{
  GroupElement const e = make_eca(57);
  CHECK(minimum_ring_size(e) == 4);
  try {
    project_formula(e, 3);
    FAIL("expected RingTooSmall");
  } catch (RingTooSmall const &err) {
    CHECK(err.minimum() == 4);
  }
  CHECK_THROWS_AS(project_periodic(make_cnot_k(2), 2), RingTooSmall);
  CHECK(minimum_ring_size(make_sigma(1)) == 1);
  CHECK(project_formula(make_sigma(1), 3) == CyclicPerm::rotation(3, 1));
}

TEST_CASE("necklace counts agree with brute force")
{
  for (unsigned n = 1; n <= 20; ++n) {
    std::uint64_t const brute = brute_necklaces(n);
    CHECK(necklace_count_formula(n) == brute);
    CHECK(necklace_count_orbits(n) == brute);
  }
  for (unsigned n = 1; n <= 12; ++n)
    CHECK(CyclicPerm::rotation(n, 1).cycle_count() == necklace_count_formula(n));
}

TEST_CASE("only p_2 is odd")
{
  for (unsigned n = 1; n <= 30; ++n)
    CHECK((necklace_count_formula(n) % 2 == 1) == (n == 2));
}

TEST_CASE("conjugating by a rotation moves the gate")
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    InertGate const g = random_gate(rng, 4);
    unsigned const n = std::max(minimum_ring_size(from_inert(g)), 6u);
    std::uniform_int_distribution<int> md(-9, 9);
    CHECK(check_conjugation_identity(g, n, md(rng)));
  }
}

TEST_CASE("projection is multiplicative under the interval hypothesis")
{
  std::mt19937_64 rng(21);
  unsigned checked = 0;
  for (int trial = 0; trial < 2000 && checked < 50; ++trial) {
    std::vector<GroupElement> fs;
    std::uniform_int_distribution<int> kd(1, 3);
    std::uniform_int_distribution<int> sd(-1, 1);
    for (int k = kd(rng); k > 0; --k) {
      GroupElement f = from_inert(random_gate(rng, 3, -1, 2));
      f.shift = sd(rng);
      fs.push_back(f);
    }
    if (!locality_hypothesis(fs, 9, -3))
      continue;
    auto const outcome = check_locality_homomorphism(fs, 9, -3);
    CHECK(outcome == LocalityOutcome::holds);
    ++checked;
  }
  CHECK(checked == 50);
  std::vector<GroupElement> const wide{shift_conjugate(make_eca(57), 20)};
  CHECK(check_locality_homomorphism(wide, 6, 0) == LocalityOutcome::hypothesis_not_met);
}

TEST_CASE("cycle formatting")
{
  CHECK(format_cycles(project_formula(make_flip(), 2)) == "(00 10)(01 11)");
  CHECK(format_cycles(CyclicPerm::identity(3)) == "()");
}
