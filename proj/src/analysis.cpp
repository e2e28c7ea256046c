#include "gatecalc/analysis.hpp"

#include <vector>

namespace gatecalc
{

namespace
{

std::uint32_t bit_of(unsigned width, unsigned position)
{ return std::uint32_t{1} << (width - 1u - position); }

// The inert parts of c0, f_{u,v} and sigma.
std::vector<InertGate> swap_generators(BitWord const &u, BitWord const &v)
{ return {make_flip().inert, make_word_swap(u, v).inert, make_sigma().inert}; }

} // anonymous namespace

bool is_affine(InertGate const &g)
{
  if (g.is_identity())
    return true;
  unsigned const w = g.width();
  std::uint32_t const c = g(0);
  std::vector<std::uint32_t> column(w);
  for (unsigned j = 0; j < w; ++j)
    column[j] = g(bit_of(w, j)) ^ c;

  for (std::uint32_t x = 0; x < (std::uint32_t{1} << w); ++x) {
    std::uint32_t expected = 0;
    for (unsigned j = 0; j < w; ++j)
      if (x & bit_of(w, j))
        expected ^= column[j];
    if ((g(x) ^ c) != expected)
      return false;
  }
  return true;
}

bool is_linear(InertGate const &g)
{ return g.is_identity() || (g(0) == 0 && is_affine(g)); }

bool is_wire_permutation(GroupElement const &f)
{
  InertGate const &g = f.inert;
  if (g.is_identity())
    return true;

  unsigned const w = g.width();
  std::uint32_t const size = std::uint32_t{1} << w;
  std::vector<bool> used(w, false);
  for (unsigned p = 0; p < w; ++p) {
    std::optional<unsigned> source;
    for (unsigned q = 0; q < w && !source; ++q) {
      bool copies = true;
      for (std::uint32_t x = 0; x < size && copies; ++x)
        copies = ((g(x) & bit_of(w, p)) != 0) == ((x & bit_of(w, q)) != 0);
      if (copies)
        source = q;
    }
    if (!source || used[*source])
      return false;
    used[*source] = true;
  }
  return true;
}

bool is_lamplighter(GroupElement const &f)
{
  InertGate const &g = f.inert;
  if (g.is_identity())
    return true;
  std::uint32_t const c = g(0);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << g.width()); ++x)
    if (g(x) != (x ^ c))
      return false;
  return true;
}

bool depends_on(InertGate const &g, unsigned out, unsigned in)
{
  if (g.is_identity())
    return out == in;
  unsigned const w = g.width();
  std::uint32_t const ob = bit_of(w, out);
  std::uint32_t const ib = bit_of(w, in);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << w); ++x)
    if ((g(x) & ob) != (g(x ^ ib) & ob))
      return true;
  return false;
}

bool in_GR(InertGate const &g)
{
  unsigned const w = g.width();
  for (unsigned p = 0; p < w; ++p)
    for (unsigned q = p + 1; q < w; ++q)
      if (depends_on(g, p, q))
        return false;
  return true;
}

bool in_GL(InertGate const &g)
{
  unsigned const w = g.width();
  for (unsigned p = 0; p < w; ++p)
    for (unsigned q = 0; q < p; ++q)
      if (depends_on(g, p, q))
        return false;
  return true;
}

bool in_GV(InertGate const &g, BitWord const &w)
{
  Gf2Poly const divisor = Gf2Poly::from_word(w);
  if (divisor.is_zero())
    throw Error("G_V membership needs a nonzero generator word");
  if (g.is_identity())
    return true;

  unsigned const width = g.width();
  std::uint32_t const v0 = g(0);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << width); ++x) {
    BitWord const displacement(g(x) ^ x ^ v0, width);
    if (!gf2_divides(divisor, Gf2Poly::from_word(displacement)))
      return false;
  }
  return true;
}

char const *to_string(SwapVerdict v)
{
  switch (v) {
    case SwapVerdict::universal:
      return "Universal";
    case SwapVerdict::trivial:
      return "Trivial";
    case SwapVerdict::right_one_sided:
      return "RightOneSided";
    case SwapVerdict::left_one_sided:
      return "LeftOneSided";
    default:
      return "CosetPreserving";
  }
}

bool is_universal_pattern(BitWord const &d)
{
  unsigned const n = d.length();
  if (n < 3 || d.popcount() != 1)
    return false;
  return !d[0] && !d[n - 1];
}

SwapClass classify_swap(BitWord const &u, BitWord const &v)
{
  SwapClass c;
  c.difference = diff_set(u, v);
  BitWord const &d = c.difference;
  unsigned const n = d.length();
  if (n == 0)
    throw Error("word swap needs words of length >= 1");

  if (d.popcount() == 0) {
    c.verdict = SwapVerdict::trivial;
    c.subgroup = "lamplighter";
    c.witness_verified = make_word_swap(u, v).is_identity();
    for (auto const &g : swap_generators(u, v))
      c.witness_verified = c.witness_verified && is_lamplighter(from_inert(g));
    return c;
  }

  if (is_universal_pattern(d)) {
    c.verdict = SwapVerdict::universal;
    return c;
  }

  auto const gens = swap_generators(u, v);
  bool all = true;
  if (d.popcount() == 1 && d[n - 1]) {
    c.verdict = SwapVerdict::right_one_sided;
    c.subgroup = "G_R";
    for (auto const &g : gens)
      all = all && in_GR(g);
  } else if (d.popcount() == 1) {
    c.verdict = SwapVerdict::left_one_sided;
    c.subgroup = "G_L";
    for (auto const &g : gens)
      all = all && in_GL(g);
  } else {
    c.verdict = SwapVerdict::coset_preserving;
    c.subgroup = "G_V";
    c.witness = d;
    for (auto const &g : gens)
      all = all && in_GV(g, d);
  }
  c.witness_verified = all;
  return c;
}

std::optional<std::pair<BitWord, BitWord>> as_word_swap(InertGate const &g)
{
  if (g.is_identity())
    return std::nullopt;
  std::vector<std::uint32_t> moved;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << g.width()); ++x)
    if (g(x) != x)
      moved.push_back(x);
  if (moved.size() != 2 || g(moved[0]) != moved[1])
    return std::nullopt;
  return std::pair{BitWord(moved[0], g.width()), BitWord(moved[1], g.width())};
}

char const *to_string(EcaVerdict v)
{
  switch (v) {
    case EcaVerdict::not_bijective:
      return "NotBijective";
    case EcaVerdict::universal:
      return "Universal";
    case EcaVerdict::non_universal:
      return "NonUniversal";
    default:
      return "Undetermined";
  }
}

char const *to_string(EcaReason r)
{
  switch (r) {
    case EcaReason::none:
      return "none";
    case EcaReason::identity_like:
      return "identity-like";
    case EcaReason::equals_c0:
      return "equals-c0";
    case EcaReason::affine:
      return "affine";
    case EcaReason::fixes_uniform_point:
      return "fixes-uniform-point";
    default:
      return "one-sided";
  }
}

EcaClass classify_eca(unsigned rule)
{
  if (rule > 255)
    throw Error("ECA rule out of range: " + std::to_string(rule));

  EcaClass c;
  c.rule = rule;
  if (!eca_is_bijective(rule))
    return c;

  GroupElement const e = make_eca(rule);
  InertGate const &g = e.inert;
  c.verdict = EcaVerdict::non_universal;

  if (g.is_identity()) {
    c.reason = EcaReason::identity_like;
    return c;
  }
  if (e == make_flip()) {
    c.reason = EcaReason::equals_c0;
    return c;
  }
  std::uint32_t const ones = (std::uint32_t{1} << g.width()) - 1u;
  if (g(0) == 0 || g(ones) == ones) {
    c.reason = EcaReason::fixes_uniform_point;
    return c;
  }
  if (is_affine(g)) {
    c.reason = EcaReason::affine;
    return c;
  }
  if (in_GL(g) || in_GR(g)) {
    c.reason = EcaReason::one_sided;
    return c;
  }

  // Certificate: e generates the flip, and c0 o e is a universal word swap.
  GroupElement const flip = make_flip();
  auto const expr = GateExpr::parse(flip_word);
  LetterConvention const preferred = e == reverse_conjugate(make_eca(57))
                                       ? LetterConvention::mirrored
                                       : LetterConvention::standard;
  for (auto conv : {preferred, preferred == LetterConvention::standard
                                 ? LetterConvention::mirrored
                                 : LetterConvention::standard}) {
    if (evaluate_expr(expr, abc_generators(e, conv)) == flip) {
      c.certificate_convention = conv;
      break;
    }
  }
  c.swap_pair = as_word_swap(compose(flip, e).inert);
  bool const swap_ok = c.swap_pair &&
                       classify_swap(c.swap_pair->first, c.swap_pair->second).verdict ==
                         SwapVerdict::universal;

  c.certificate_verified = c.certificate_convention.has_value() && swap_ok;
  c.verdict = c.certificate_verified ? EcaVerdict::universal : EcaVerdict::undetermined;
  return c;
}

} // namespace gatecalc
