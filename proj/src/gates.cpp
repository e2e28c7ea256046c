#include "gatecalc/gates.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>

namespace gatecalc
{

namespace
{

std::atomic<unsigned> g_window_cap{default_window_cap};

void check_width(unsigned width)
{
  if (width > window_cap())
    throw WindowCapExceeded(width, window_cap());
}

std::uint32_t reverse_bits(std::uint32_t x, unsigned width)
{
  std::uint32_t r = 0;
  for (unsigned i = 0; i < width; ++i) {
    r = (r << 1u) | (x & 1u);
    x >>= 1u;
  }
  return r;
}

// Coordinate at bit position b never changes and never influences the rest.
bool removable(std::vector<std::uint32_t> const &t, unsigned b)
{
  std::uint32_t const m = std::uint32_t{1} << b;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if ((t[x] & m) != (x & m))
      return false;
    if (t[x ^ m] != (t[x] ^ m))
      return false;
  }
  return true;
}

std::vector<std::uint32_t> drop_bit(std::vector<std::uint32_t> const &t, unsigned b)
{
  std::uint32_t const low = (std::uint32_t{1} << b) - 1u;
  std::vector<std::uint32_t> r(t.size() / 2u);
  for (std::uint32_t y = 0; y < r.size(); ++y) {
    std::uint32_t const x = ((y & ~low) << 1u) | (y & low);
    std::uint32_t const v = t[x];
    r[y] = ((v >> 1u) & ~low) | (v & low);
  }
  return r;
}

} // anonymous namespace

unsigned window_cap()
{ return g_window_cap.load(std::memory_order_relaxed); }

void set_window_cap(unsigned cap)
{
  if (cap == 0 || cap > 30)
    throw Error("window cap must be in [1, 30]");
  g_window_cap.store(cap, std::memory_order_relaxed);
}

WindowCapExceeded::WindowCapExceeded(unsigned required, unsigned cap)
  : Error("window cap exceeded: need width " + std::to_string(required) +
          ", cap is " + std::to_string(cap)),
    _required(required)
{}

std::span<std::uint32_t const> InertGate::table() const
{
  if (!_table)
    return {};
  return {_table->data(), _table->size()};
}

std::vector<std::uint32_t> InertGate::padded_rule() const
{
  if (is_identity())
    return {0u};

  unsigned const w = width();
  unsigned const full = 2u * radius() + 1u;
  std::uint32_t const mask = (std::uint32_t{1} << w) - 1u;
  std::vector<std::uint32_t> r(std::size_t{1} << full);
  for (std::uint32_t y = 0; y < r.size(); ++y)
    r[y] = (y & ~mask) | (*_table)[y & mask];
  return r;
}

std::uint64_t InertGate::apply_embedded(std::uint64_t x, int base, unsigned width) const
{
  if (is_identity())
    return x;
  unsigned const sh = width - 1u - static_cast<unsigned>(_hi - base);
  std::uint64_t const mask = (std::uint64_t{1} << this->width()) - 1u;
  std::uint64_t const sub = (x >> sh) & mask;
  return (x & ~(mask << sh)) | (std::uint64_t{(*_table)[sub]} << sh);
}

InertGate InertGate::translated(int k) const
{
  InertGate r = *this;
  if (!is_identity()) {
    r._lo += k;
    r._hi += k;
  }
  return r;
}

bool InertGate::operator==(InertGate const &other) const
{
  if (is_identity() || other.is_identity())
    return is_identity() == other.is_identity();
  return _lo == other._lo && _hi == other._hi &&
         (_table == other._table || *_table == *other._table);
}

GroupElement identity()
{ return {}; }

InertGate canonicalize(WindowRule rule)
{
  if (rule.hi < rule.lo) {
    if (!rule.table.empty() && !(rule.table.size() == 1 && rule.table[0] == 0))
      throw Error("not a permutation");
    return InertGate{};
  }

  unsigned const w = rule.width();
  check_width(w);
  if (rule.table.size() != (std::size_t{1} << w))
    throw Error("table size " + std::to_string(rule.table.size()) +
                " does not match window width " + std::to_string(w));

  std::vector<bool> seen(rule.table.size(), false);
  for (std::uint32_t v : rule.table) {
    if (v >= seen.size() || seen[v])
      throw Error("not a permutation");
    seen[v] = true;
  }
  return canonicalize_trusted(std::move(rule));
}

InertGate canonicalize_trusted(WindowRule rule)
{
  int lo = rule.lo;
  int hi = rule.hi;
  std::vector<std::uint32_t> t = std::move(rule.table);

  while (lo <= hi) {
    unsigned const w = static_cast<unsigned>(hi - lo + 1);
    if (removable(t, w - 1u)) {
      t = drop_bit(t, w - 1u);
      ++lo;
    } else if (removable(t, 0u)) {
      t = drop_bit(t, 0u);
      --hi;
    } else {
      break;
    }
  }

  InertGate g;
  if (lo > hi)
    return g;
  g._lo = lo;
  g._hi = hi;
  g._table = std::make_shared<std::vector<std::uint32_t> const>(std::move(t));
  return g;
}

InertGate compose(InertGate const &f, InertGate const &g)
{
  if (g.is_identity())
    return f;
  if (f.is_identity())
    return g;

  int const lo = std::min(f.lo(), g.lo());
  int const hi = std::max(f.hi(), g.hi());
  unsigned const w = static_cast<unsigned>(hi - lo + 1);
  check_width(w);

  WindowRule rule{lo, hi, std::vector<std::uint32_t>(std::size_t{1} << w)};
  for (std::uint64_t x = 0; x < rule.table.size(); ++x)
    rule.table[x] = static_cast<std::uint32_t>(
      f.apply_embedded(g.apply_embedded(x, lo, w), lo, w));
  return canonicalize_trusted(std::move(rule));
}

InertGate inverse(InertGate const &f)
{
  if (f.is_identity())
    return f;
  auto const t = f.table();
  WindowRule rule{f.lo(), f.hi(), std::vector<std::uint32_t>(t.size())};
  for (std::uint32_t x = 0; x < t.size(); ++x)
    rule.table[t[x]] = x;
  return canonicalize_trusted(std::move(rule));
}

InertGate reverse_conjugate(InertGate const &f)
{
  if (f.is_identity())
    return f;
  unsigned const w = f.width();
  auto const t = f.table();
  WindowRule rule{-f.hi(), -f.lo(), std::vector<std::uint32_t>(t.size())};
  for (std::uint32_t x = 0; x < t.size(); ++x)
    rule.table[reverse_bits(x, w)] = reverse_bits(t[x], w);
  return canonicalize_trusted(std::move(rule));
}

GroupElement from_inert(InertGate g)
{ return GroupElement{0, std::move(g)}; }

GroupElement compose(GroupElement const &f, GroupElement const &g)
{
  // (s^a f)(s^b g) = s^(a+b) (s^-b f s^b) g
  return GroupElement{f.shift + g.shift, compose(f.inert.translated(g.shift), g.inert)};
}

GroupElement inverse(GroupElement const &f)
{
  // (s^a f)^-1 = f^-1 s^-a = s^-a (s^a f^-1 s^-a)
  return GroupElement{-f.shift, inverse(f.inert).translated(-f.shift)};
}

GroupElement shift_conjugate(GroupElement const &f, int k)
{ return GroupElement{f.shift, f.inert.translated(k)}; }

GroupElement reverse_conjugate(GroupElement const &f)
{ return GroupElement{-f.shift, reverse_conjugate(f.inert)}; }

GroupElement power(GroupElement const &f, unsigned k)
{
  GroupElement r;
  GroupElement base = f;
  while (k) {
    if (k & 1u)
      r = compose(r, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return r;
}

GroupElement make_sigma(int power)
{ return GroupElement{power, {}}; }

GroupElement make_flip()
{ return from_inert(canonicalize_trusted({0, 0, {1u, 0u}})); }

GroupElement make_cnot_k(unsigned k)
{
  check_width(k + 1u);
  unsigned const w = k + 1u;
  std::uint32_t const controls = (std::uint32_t{1} << k) - 1u;
  std::uint32_t const target = std::uint32_t{1} << k;
  WindowRule rule{0, static_cast<int>(k), std::vector<std::uint32_t>(std::size_t{1} << w)};
  for (std::uint32_t x = 0; x < rule.table.size(); ++x)
    rule.table[x] = (x & controls) == controls ? x ^ target : x;
  return from_inert(canonicalize_trusted(std::move(rule)));
}

GroupElement make_swap()
{ return from_inert(canonicalize_trusted({0, 1, {0b00u, 0b10u, 0b01u, 0b11u}})); }

GroupElement make_named(std::string_view name)
{
  auto parse_uint = [&](std::string_view digits) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || p != digits.data() + digits.size() || digits.empty())
      throw Error("unknown gate name '" + std::string(name) + "'");
    return v;
  };

  if (name == "id")
    return identity();
  if (name == "sigma")
    return make_sigma(1);
  if (name == "c0" || name == "flip")
    return make_flip();
  if (name == "c1")
    return make_cnot_k(1);
  if (name == "c2")
    return make_cnot_k(2);
  if (name == "rc1")
    return reverse_conjugate(make_cnot_k(1));
  if (name == "s" || name == "swap")
    return make_swap();
  if (name.starts_with("ck"))
    return make_cnot_k(parse_uint(name.substr(2)));
  if (name.starts_with("c") && name.size() > 1)
    return make_cnot_k(parse_uint(name.substr(1)));
  if (name.starts_with("e") && name.size() > 1)
    return make_eca(parse_uint(name.substr(1)));
  throw Error("unknown gate name '" + std::string(name) + "'");
}

GroupElement make_word_swap(BitWord const &u, BitWord const &v)
{
  if (u.length() != v.length())
    throw Error("unequal lengths");
  if (u.empty())
    throw Error("word swap needs words of length >= 1");

  unsigned const w = u.length();
  check_width(w);
  WindowRule rule{0, static_cast<int>(w) - 1, std::vector<std::uint32_t>(std::size_t{1} << w)};
  for (std::uint32_t x = 0; x < rule.table.size(); ++x)
    rule.table[x] = x;
  auto const a = static_cast<std::uint32_t>(u.value());
  auto const b = static_cast<std::uint32_t>(v.value());
  std::swap(rule.table[a], rule.table[b]);
  return from_inert(canonicalize_trusted(std::move(rule)));
}

EcaNotInvertible::EcaNotInvertible(unsigned rule, bool left, bool right)
  : Error("e^" + std::to_string(rule) + " not invertible: context (x_-1, x_1) = (" +
          std::to_string(int(left)) + ", " + std::to_string(int(right)) +
          ") does not permute x_0")
{}

namespace
{

bool eca_out(unsigned rule, std::uint32_t neighborhood)
{ return (rule >> neighborhood) & 1u; }

} // anonymous namespace

bool eca_is_bijective(unsigned rule)
{
  if (rule > 255)
    throw Error("ECA rule out of range: " + std::to_string(rule));
  for (std::uint32_t ctx = 0; ctx < 4; ++ctx) {
    std::uint32_t const l = (ctx >> 1u) << 2u;
    std::uint32_t const r = ctx & 1u;
    if (eca_out(rule, l | r) == eca_out(rule, l | 2u | r))
      return false;
  }
  return true;
}

GroupElement make_eca(unsigned rule)
{
  if (rule > 255)
    throw Error("ECA rule out of range: " + std::to_string(rule));

  for (std::uint32_t ctx = 0; ctx < 4; ++ctx) {
    std::uint32_t const l = (ctx >> 1u) << 2u;
    std::uint32_t const r = ctx & 1u;
    if (eca_out(rule, l | r) == eca_out(rule, l | 2u | r))
      throw EcaNotInvertible(rule, l != 0, r != 0);
  }

  WindowRule t{-1, 1, std::vector<std::uint32_t>(8)};
  for (std::uint32_t x = 0; x < 8; ++x)
    t.table[x] = (x & 0b101u) | (std::uint32_t{eca_out(rule, x)} << 1u);
  return from_inert(canonicalize_trusted(std::move(t)));
}

Placement apply(GroupElement const &f, BitWord const &x, int anchor)
{
  int const first = anchor;
  int const last = anchor + static_cast<int>(x.length()) - 1;
  auto const &g = f.inert;

  std::uint64_t image = x.value();
  if (!g.is_identity()) {
    std::vector<int> missing;
    for (int c = g.lo(); c <= g.hi(); ++c)
      if (c < first || c > last)
        missing.push_back(c);
    if (!missing.empty()) {
      std::ostringstream os;
      os << "insufficient context: missing coordinates";
      for (int c : missing)
        os << ' ' << c;
      throw Error(os.str());
    }
    image = g.apply_embedded(x.value(), first, x.length());
  }
  return Placement{BitWord(image, x.length()), anchor - f.shift};
}

std::string describe(GroupElement const &f)
{
  std::ostringstream os;
  os << "shift " << f.shift;
  if (f.inert.is_identity()) {
    os << ", inert identity";
    return os.str();
  }
  os << ", window [" << f.inert.lo() << ", " << f.inert.hi() << "], table [";
  auto const t = f.inert.table();
  for (std::size_t i = 0; i < t.size(); ++i)
    os << (i ? " " : "") << t[i];
  os << ']';
  return os.str();
}

} // namespace gatecalc
