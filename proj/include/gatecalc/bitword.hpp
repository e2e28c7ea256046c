#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gatecalc
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * A finite binary word of length at most 64.
 *
 * Bit order convention (used by every table in the library): index 0 is the
 * most significant bit of the integer encoding. The word "110" encodes 6.
 */
class BitWord
{
public:
  static constexpr unsigned max_length = 64;

  BitWord() = default;

  /// Word of the given length whose MSB-first encoding is `value`.
  BitWord(std::uint64_t value, unsigned length);

  static BitWord from_string(std::string_view s);
  static BitWord zeros(unsigned length) { return BitWord(0, length); }

  unsigned length() const { return _length; }
  bool empty() const { return _length == 0; }
  std::uint64_t value() const { return _value; }

  bool operator[](unsigned i) const
  { return (_value >> (_length - 1u - i)) & 1u; }

  BitWord with_bit(unsigned i, bool b) const;
  unsigned popcount() const;

  /// Subword [first, first + count).
  BitWord slice(unsigned first, unsigned count) const;
  BitWord concat(BitWord const &rhs) const;

  std::string to_string() const;

  bool operator==(BitWord const &) const = default;

private:
  std::uint64_t _value = 0;
  unsigned _length = 0;
};

/// Characteristic word of the coordinates where u and v differ.
BitWord diff_set(BitWord const &u, BitWord const &v);

std::uint64_t word_to_int(BitWord const &w);
BitWord int_to_word(std::uint64_t k, unsigned length);

/**
 * Laurent polynomial over GF(2). Coefficient of x^(offset + i) is bit i of
 * `coeffs` (LSB = lowest exponent). Normalized: the lowest stored coefficient
 * is 1 unless the polynomial is zero, in which case coeffs == 0 and offset == 0.
 */
class Gf2Poly
{
public:
  Gf2Poly() = default;
  Gf2Poly(std::uint64_t coeffs, int offset);

  /// Coordinate i of the word becomes the coefficient of x^i.
  static Gf2Poly from_word(BitWord const &w, int offset = 0);

  bool is_zero() const { return _coeffs == 0; }
  std::uint64_t coeffs() const { return _coeffs; }
  int offset() const { return _offset; }
  int degree_span() const;

  bool operator==(Gf2Poly const &) const = default;

private:
  std::uint64_t _coeffs = 0;
  int _offset = 0;
};

/// dividend == 0 mod divisor in GF(2)[x, 1/x]. Throws on a zero divisor.
bool gf2_divides(Gf2Poly const &divisor, Gf2Poly const &dividend);

/// Remainder of a by b in GF(2)[x] (plain polynomials, bit i = x^i).
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b);

} // namespace gatecalc
