#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gates.hpp"

/**
 * @file cyclic.hpp
 * @brief Projection of gates to permutations of {0,1}^n (wires on a cycle).
 *
 * A word w in {0,1}^n is encoded MSB-first: w_0 is bit n - 1 of the index.
 */

namespace gatecalc
{

inline constexpr unsigned default_ring_cap = 20;

unsigned ring_cap();
void set_ring_cap(unsigned cap);

class RingTooSmall : public Error
{
public:
  RingTooSmall(unsigned n, unsigned minimum);
  unsigned minimum() const { return _minimum; }

private:
  unsigned _minimum;
};

/// A permutation of {0,1}^n.
class CyclicPerm
{
public:
  CyclicPerm() = default;
  CyclicPerm(unsigned n, std::vector<std::uint32_t> perm);

  static CyclicPerm identity(unsigned n);
  /// sigma_n^k: (sigma_n w)_i = w_{i+1 mod n}.
  static CyclicPerm rotation(unsigned n, int k);

  unsigned n() const { return _n; }
  std::size_t size() const { return _perm.size(); }
  std::uint32_t operator()(std::uint32_t w) const { return _perm[w]; }
  std::span<std::uint32_t const> table() const { return _perm; }

  std::size_t cycle_count() const;
  std::vector<std::vector<std::uint32_t>> cycles() const;

  bool operator==(CyclicPerm const &) const = default;

private:
  unsigned _n = 0;
  std::vector<std::uint32_t> _perm;
};

/// a o b (b applied first).
CyclicPerm compose(CyclicPerm const &a, CyclicPerm const &b);
CyclicPerm inverse(CyclicPerm const &p);

enum class Parity
{
  even,
  odd,
};

Parity sign(CyclicPerm const &p);
char const *to_string(Parity p);

/// Smallest admissible ring size for f (2R + 2, or 1 for a pure shift).
unsigned minimum_ring_size(GroupElement const &f);

/// f_n computed from the local rule with the contiguous / wraparound case split.
CyclicPerm project_formula(GroupElement const &f, unsigned n);

/// f_n computed by simulating f on the n-periodic point ...www.www...
CyclicPerm project_periodic(GroupElement const &f, unsigned n);

/// Number of binary necklaces of length n, from the totient formula.
std::uint64_t necklace_count_formula(unsigned n);
/// Number of binary necklaces of length n, by enumerating one word per rotation orbit.
std::uint64_t necklace_count_orbits(unsigned n);

/// g_n o sigma_n^m == sigma_n^m o (sigma^-m g sigma^m)_n.
bool check_conjugation_identity(InertGate const &g, unsigned n, int m);

enum class LocalityOutcome
{
  holds,
  fails,
  hypothesis_not_met,
};

char const *to_string(LocalityOutcome o);

/// Interval hypothesis for the product fs[0] o ... o fs[k-1] on a ring of size n anchored at h.
bool locality_hypothesis(std::span<GroupElement const> fs, unsigned n, int h);

/// (f^1 o ... o f^k)_n == f^1_n o ... o f^k_n, when the interval hypothesis holds.
LocalityOutcome check_locality_homomorphism(std::span<GroupElement const> fs, unsigned n, int h);

std::string format_cycles(CyclicPerm const &p);

} // namespace gatecalc
