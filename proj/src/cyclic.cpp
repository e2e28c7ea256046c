#include "gatecalc/cyclic.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace gatecalc
{

namespace
{

std::atomic<unsigned> g_ring_cap{default_ring_cap};

void check_ring(GroupElement const &f, unsigned n)
{
  if (n == 0 || n > ring_cap())
    throw Error("ring size " + std::to_string(n) + " outside [1, " +
                std::to_string(ring_cap()) + "]");
  unsigned const minimum = minimum_ring_size(f);
  if (n < minimum)
    throw RingTooSmall(n, minimum);
}

int mod(int a, int n)
{
  int r = a % n;
  return r < 0 ? r + n : r;
}

std::uint32_t low_mask(unsigned bits)
{ return bits >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << bits) - 1u; }

CyclicPerm project_inert_formula(InertGate const &g, unsigned n)
{
  if (g.is_identity())
    return CyclicPerm::identity(n);

  unsigned const width = 2u * g.radius() + 1u;
  auto const rule = g.padded_rule();
  unsigned const start = static_cast<unsigned>(mod(g.offset() - static_cast<int>(g.radius()), static_cast<int>(n)));

  std::vector<std::uint32_t> perm(std::size_t{1} << n);
  if (start + width <= n) {
    // window is [a, b] inside [0, n-1]
    unsigned const b = start + width - 1u;
    unsigned const sh = n - 1u - b;
    std::uint32_t const mask = low_mask(width);
    for (std::uint32_t w = 0; w < perm.size(); ++w) {
      std::uint32_t const sub = (w >> sh) & mask;
      perm[w] = (w & ~(mask << sh)) | (rule[sub] << sh);
    }
  } else {
    // window is (n-1-b, n-1] followed by [0, a)
    unsigned const b = n - start;
    unsigned const a = width - b;
    std::uint32_t const tail_mask = low_mask(b);
    std::uint32_t const head_mask = low_mask(a);
    for (std::uint32_t w = 0; w < perm.size(); ++w) {
      std::uint32_t const head = w >> (n - a);
      std::uint32_t const tail = w & tail_mask;
      std::uint32_t const u = (tail << a) | head;
      std::uint32_t const image = rule[u];
      std::uint32_t const new_tail = image >> a;
      std::uint32_t const new_head = image & head_mask;
      std::uint32_t const middle = w & ~(head_mask << (n - a)) & ~tail_mask;
      perm[w] = (new_head << (n - a)) | middle | new_tail;
    }
  }
  return CyclicPerm(n, std::move(perm));
}

} // anonymous namespace

unsigned ring_cap()
{ return g_ring_cap.load(std::memory_order_relaxed); }

void set_ring_cap(unsigned cap)
{
  if (cap == 0 || cap > 28)
    throw Error("ring cap must be in [1, 28]");
  g_ring_cap.store(cap, std::memory_order_relaxed);
}

RingTooSmall::RingTooSmall(unsigned n, unsigned minimum)
  : Error("ring too small: n = " + std::to_string(n) + ", minimum is " +
          std::to_string(minimum)),
    _minimum(minimum)
{}

CyclicPerm::CyclicPerm(unsigned n, std::vector<std::uint32_t> perm)
  : _n(n), _perm(std::move(perm))
{
  if (n == 0 || n > 28)
    throw Error("ring size " + std::to_string(n) + " unsupported");
  if (_perm.size() != (std::size_t{1} << n))
    throw Error("permutation size does not match 2^n");
  std::vector<bool> seen(_perm.size(), false);
  for (auto v : _perm) {
    if (v >= _perm.size() || seen[v])
      throw Error("not a permutation");
    seen[v] = true;
  }
}

CyclicPerm CyclicPerm::identity(unsigned n)
{
  std::vector<std::uint32_t> p(std::size_t{1} << n);
  std::iota(p.begin(), p.end(), 0u);
  return CyclicPerm(n, std::move(p));
}

CyclicPerm CyclicPerm::rotation(unsigned n, int k)
{
  unsigned const r = static_cast<unsigned>(mod(k, static_cast<int>(n)));
  std::uint32_t const mask = low_mask(n);
  std::vector<std::uint32_t> p(std::size_t{1} << n);
  for (std::uint32_t w = 0; w < p.size(); ++w)
    p[w] = r == 0 ? w : (((w << r) | (w >> (n - r))) & mask);
  return CyclicPerm(n, std::move(p));
}

std::size_t CyclicPerm::cycle_count() const
{
  std::vector<bool> seen(_perm.size(), false);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < _perm.size(); ++s) {
    if (seen[s])
      continue;
    ++count;
    for (std::uint32_t x = s; !seen[x]; x = _perm[x])
      seen[x] = true;
  }
  return count;
}

std::vector<std::vector<std::uint32_t>> CyclicPerm::cycles() const
{
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(_perm.size(), false);
  for (std::uint32_t s = 0; s < _perm.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = s; !seen[x]; x = _perm[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CyclicPerm compose(CyclicPerm const &a, CyclicPerm const &b)
{
  if (a.n() != b.n())
    throw Error("composing permutations of different ring sizes");
  std::vector<std::uint32_t> p(a.size());
  for (std::uint32_t w = 0; w < p.size(); ++w)
    p[w] = a(b(w));
  return CyclicPerm(a.n(), std::move(p));
}

CyclicPerm inverse(CyclicPerm const &p)
{
  std::vector<std::uint32_t> q(p.size());
  for (std::uint32_t w = 0; w < q.size(); ++w)
    q[p(w)] = w;
  return CyclicPerm(p.n(), std::move(q));
}

Parity sign(CyclicPerm const &p)
{ return (p.size() - p.cycle_count()) % 2u == 0 ? Parity::even : Parity::odd; }

char const *to_string(Parity p)
{ return p == Parity::even ? "even" : "odd"; }

unsigned minimum_ring_size(GroupElement const &f)
{ return f.inert.is_identity() ? 1u : 2u * f.inert.radius() + 2u; }

CyclicPerm project_formula(GroupElement const &f, unsigned n)
{
  check_ring(f, n);
  CyclicPerm const g = project_inert_formula(f.inert, n);
  if (f.shift == 0)
    return g;
  return compose(CyclicPerm::rotation(n, f.shift), g);
}

CyclicPerm project_periodic(GroupElement const &f, unsigned n)
{
  check_ring(f, n);

  int const N = static_cast<int>(n);
  InertGate const &g = f.inert;
  std::vector<std::uint32_t> perm(std::size_t{1} << n);
  // cells [-n, 2n) of the periodic point
  std::vector<unsigned char> buf(3u * n);
  auto cell = [&](int i) -> unsigned char & { return buf[static_cast<std::size_t>(i + N)]; };

  int const lo = g.is_identity() ? 0 : mod(g.lo(), N);
  int const width = static_cast<int>(g.width());

  for (std::uint32_t w = 0; w < perm.size(); ++w) {
    for (int i = -N; i < 2 * N; ++i)
      cell(i) = (w >> (n - 1u - static_cast<unsigned>(mod(i, N)))) & 1u;

    if (!g.is_identity()) {
      for (int copy = -1; copy <= 1; ++copy) {
        int const first = lo + copy * N;
        int const last = first + width - 1;
        if (first < -N || last >= 2 * N)
          continue;
        std::uint32_t x = 0;
        for (int c = first; c <= last; ++c)
          x = (x << 1u) | cell(c);
        std::uint32_t v = g(x);
        for (int c = last; c >= first; --c) {
          cell(c) = v & 1u;
          v >>= 1u;
        }
      }
    }

    // (sigma^k y)_i = y_{i+k}
    std::uint32_t out = 0;
    for (int i = 0; i < N; ++i)
      out = (out << 1u) | cell(mod(i + f.shift, N));
    perm[w] = out;
  }
  return CyclicPerm(n, std::move(perm));
}

std::uint64_t necklace_count_formula(unsigned n)
{
  if (n < 1 || n > 32)
    throw Error("necklace count supports 1 <= n <= 32");

  auto totient = [](unsigned d) {
    unsigned result = d;
    for (unsigned p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        while (d % p == 0)
          d /= p;
        result -= result / p;
      }
    }
    if (d > 1)
      result -= result / d;
    return result;
  };

  std::uint64_t sum = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0)
      sum += std::uint64_t{totient(d)} << (n / d);
  return sum / n;
}

namespace
{

// Prenecklace generation (Fredricksen-Kessler-Maiorana): every rotation orbit
// has exactly one lexicographically least member, visited once.
void enumerate_necklaces(std::vector<unsigned char> &a, unsigned t, unsigned p, unsigned n,
                         std::uint64_t &count)
{
  if (t > n) {
    if (n % p == 0)
      ++count;
    return;
  }
  a[t] = a[t - p];
  enumerate_necklaces(a, t + 1, p, n, count);
  if (a[t - p] == 0) {
    a[t] = 1;
    enumerate_necklaces(a, t + 1, t, n, count);
  }
}

} // anonymous namespace

std::uint64_t necklace_count_orbits(unsigned n)
{
  if (n < 1 || n > 32)
    throw Error("necklace count supports 1 <= n <= 32");
  std::vector<unsigned char> a(n + 1, 0);
  std::uint64_t count = 0;
  enumerate_necklaces(a, 1, 1, n, count);
  return count;
}

bool check_conjugation_identity(InertGate const &g, unsigned n, int m)
{
  GroupElement const ge = from_inert(g);
  CyclicPerm const rot = CyclicPerm::rotation(n, m);
  CyclicPerm const lhs = compose(project_formula(ge, n), rot);
  CyclicPerm const rhs = compose(rot, project_formula(shift_conjugate(ge, m), n));
  return lhs == rhs;
}

char const *to_string(LocalityOutcome o)
{
  switch (o) {
    case LocalityOutcome::holds:
      return "holds";
    case LocalityOutcome::fails:
      return "fails";
    default:
      return "hypothesis not met";
  }
}

bool locality_hypothesis(std::span<GroupElement const> fs, unsigned n, int h)
{
  int t = 0;
  for (auto const &f : fs)
    t += std::abs(f.shift);

  int const first = h;
  int const last = h + static_cast<int>(n) - 1;
  for (auto const &f : fs) {
    if (f.is_identity())
      return false;
    if (f.inert.is_identity())
      continue;
    int const R = static_cast<int>(f.inert.radius());
    int const m = f.inert.offset();
    if (m - t - R < first || m + t + R > last)
      return false;
  }
  return true;
}

LocalityOutcome check_locality_homomorphism(std::span<GroupElement const> fs, unsigned n, int h)
{
  if (!locality_hypothesis(fs, n, h))
    return LocalityOutcome::hypothesis_not_met;

  GroupElement product;
  CyclicPerm projected = CyclicPerm::identity(n);
  for (auto const &f : fs) {
    product = compose(product, f);
    projected = compose(projected, project_formula(f, n));
  }
  return project_formula(product, n) == projected ? LocalityOutcome::holds
                                                  : LocalityOutcome::fails;
}

std::string format_cycles(CyclicPerm const &p)
{
  auto word = [&](std::uint32_t w) {
    std::string s(p.n(), '0');
    for (unsigned i = 0; i < p.n(); ++i)
      if ((w >> (p.n() - 1u - i)) & 1u)
        s[i] = '1';
    return s;
  };

  std::ostringstream os;
  bool any = false;
  for (auto const &c : p.cycles()) {
    if (c.size() < 2)
      continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << word(c[i]);
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

} // namespace gatecalc
