#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gatecalc/gates.hpp"

namespace testsupport
{

using namespace gatecalc;

/// Random permutation table over [lo, lo + w), canonicalized.
inline InertGate random_gate(std::mt19937_64 &rng, unsigned max_width, int lo_min = -3, int lo_max = 3)
{
  std::uniform_int_distribution<unsigned> wd(1, max_width);
  std::uniform_int_distribution<int> ld(lo_min, lo_max);
  unsigned const w = wd(rng);
  int const lo = ld(rng);
  std::vector<std::uint32_t> t(std::size_t{1} << w);
  std::iota(t.begin(), t.end(), 0u);
  std::shuffle(t.begin(), t.end(), rng);
  return canonicalize(WindowRule{lo, lo + static_cast<int>(w) - 1, std::move(t)});
}

/// A configuration with finitely many explicitly stored cells; every other cell is 0.
using Config = std::map<int, int>;

inline int cell(Config const &x, int i)
{
  auto it = x.find(i);
  return it == x.end() ? 0 : it->second;
}

/// Direct evaluation of sigma^shift o inert on a finitely supported configuration,
/// reading the window cell by cell.
inline Config naive_apply(GroupElement const &f, Config const &x)
{
  Config y = x;
  InertGate const &g = f.inert;
  if (!g.is_identity()) {
    unsigned const w = g.width();
    std::uint32_t in = 0;
    for (int i = g.lo(); i <= g.hi(); ++i)
      in = (in << 1) | static_cast<std::uint32_t>(cell(x, i));
    std::uint32_t const out = g(in);
    for (unsigned j = 0; j < w; ++j)
      y[g.lo() + static_cast<int>(j)] = (out >> (w - 1u - j)) & 1u;
  }
  // sigma^n: y'_i = y_{i+n}
  Config z;
  for (auto const &[i, v] : y)
    z[i - f.shift] = v;
  return z;
}

inline bool same_config(Config const &a, Config const &b)
{
  for (auto const &[i, v] : a)
    if (cell(b, i) != v)
      return false;
  for (auto const &[i, v] : b)
    if (cell(a, i) != v)
      return false;
  return true;
}

inline Config random_config(std::mt19937_64 &rng, int lo, int hi)
{
  Config x;
  std::bernoulli_distribution coin(0.5);
  for (int i = lo; i <= hi; ++i)
    x[i] = coin(rng);
  return x;
}

} // namespace testsupport
