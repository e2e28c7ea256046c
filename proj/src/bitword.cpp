#include "gatecalc/bitword.hpp"

#include <bit>

namespace gatecalc
{

namespace
{

std::uint64_t low_mask(unsigned length)
{ return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1u; }

} // anonymous namespace

BitWord::BitWord(std::uint64_t value, unsigned length)
  : _value(value), _length(length)
{
  if (length > max_length)
    throw Error("word length " + std::to_string(length) + " exceeds 64");
  if (value & ~low_mask(length))
    throw Error("value " + std::to_string(value) + " out of range for length " +
                std::to_string(length));
}

BitWord BitWord::from_string(std::string_view s)
{
  if (s.size() > max_length)
    throw Error("word longer than 64 bits");

  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw Error("invalid bit character '" + std::string(1, c) + "'");
    v = (v << 1u) | static_cast<std::uint64_t>(c == '1');
  }
  return BitWord(v, static_cast<unsigned>(s.size()));
}

BitWord BitWord::with_bit(unsigned i, bool b) const
{
  std::uint64_t const m = std::uint64_t{1} << (_length - 1u - i);
  BitWord r = *this;
  r._value = b ? (_value | m) : (_value & ~m);
  return r;
}

unsigned BitWord::popcount() const
{ return static_cast<unsigned>(std::popcount(_value)); }

BitWord BitWord::slice(unsigned first, unsigned count) const
{
  if (first + count > _length)
    throw Error("slice out of range");
  unsigned const drop = _length - first - count;
  return BitWord((_value >> drop) & low_mask(count), count);
}

BitWord BitWord::concat(BitWord const &rhs) const
{
  if (_length + rhs._length > max_length)
    throw Error("concatenation longer than 64 bits");
  std::uint64_t const hi = rhs._length >= 64 ? 0 : _value << rhs._length;
  return BitWord(hi | rhs._value, _length + rhs._length);
}

std::string BitWord::to_string() const
{
  std::string s(_length, '0');
  for (unsigned i = 0; i < _length; ++i)
    if ((*this)[i])
      s[i] = '1';
  return s;
}

BitWord diff_set(BitWord const &u, BitWord const &v)
{
  if (u.length() != v.length())
    throw Error("unequal lengths");
  return BitWord(u.value() ^ v.value(), u.length());
}

std::uint64_t word_to_int(BitWord const &w)
{ return w.value(); }

BitWord int_to_word(std::uint64_t k, unsigned length)
{ return BitWord(k, length); }

Gf2Poly::Gf2Poly(std::uint64_t coeffs, int offset)
{
  if (coeffs == 0)
    return;
  int const tz = std::countr_zero(coeffs);
  _coeffs = coeffs >> tz;
  _offset = offset + tz;
}

Gf2Poly Gf2Poly::from_word(BitWord const &w, int offset)
{
  std::uint64_t c = 0;
  for (unsigned i = 0; i < w.length(); ++i)
    if (w[i])
      c |= std::uint64_t{1} << i;
  return Gf2Poly(c, offset);
}

int Gf2Poly::degree_span() const
{ return _coeffs == 0 ? -1 : 63 - std::countl_zero(_coeffs); }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b)
{
  if (b == 0)
    throw Error("division by the zero polynomial");

  int const db = 63 - std::countl_zero(b);
  while (a != 0) {
    int const da = 63 - std::countl_zero(a);
    if (da < db)
      break;
    a ^= b << (da - db);
  }
  return a;
}

bool gf2_divides(Gf2Poly const &divisor, Gf2Poly const &dividend)
{
  if (divisor.is_zero())
    throw Error("zero divisor");
  // Both are normalized to a nonzero constant term, so the powers of x that
  // were stripped are units in the Laurent ring.
  return gf2_mod(dividend.coeffs(), divisor.coeffs()) == 0;
}

} // namespace gatecalc
