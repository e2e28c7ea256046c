#include "gatecalc/synth.hpp"

namespace gatecalc
{

namespace
{

GateExpr flip_at(int cell)
{ return GateExpr::atom("c0", cell); }

// E evaluates to f_{0^len, w} at cell 0 with w[0] == 0. Result: f_{0^(len-1), w[1..]} at cell 0.
GateExpr eliminate_left(GateExpr const &e)
{ return (flip_at(0) * e * flip_at(0) * e).shifted(-1); }

// Same, with w[len-1] == 0; drops the last bit.
GateExpr eliminate_right(GateExpr const &e, unsigned len)
{
  GateExpr const flip = flip_at(static_cast<int>(len) - 1);
  return flip * e * flip * e;
}

GateExpr reduce(GateExpr e, unsigned len, unsigned left, unsigned right)
{
  for (unsigned i = 0; i < left; ++i, --len)
    e = eliminate_left(e);
  for (unsigned i = 0; i < right; ++i, --len)
    e = eliminate_right(e, len);
  return e;
}

} // anonymous namespace

NotUniversal::NotUniversal(SwapClass cls)
  : Error(std::string("word swap is not universal: ") + to_string(cls.verdict)),
    _cls(std::move(cls))
{}

GeneratorDict swap_dictionary(BitWord const &u, BitWord const &v)
{ return GeneratorDict{{"c0", make_flip()}, {"f", make_word_swap(u, v)}}; }

GateExpr eliminate_bit(BitWord const &v, Side side)
{
  unsigned const n = v.length();
  if (n < 2)
    throw Error("nothing to eliminate into: pattern of length " + std::to_string(n));
  unsigned const border = side == Side::left ? 0u : n - 1u;
  if (v[border])
    throw Error("border bit of " + v.to_string() + " is 1 and cannot be eliminated");

  GateExpr const f = GateExpr::atom("f");
  return side == Side::left ? eliminate_left(f) : eliminate_right(f, n);
}

GroupElement nct_target(std::string const &key)
{
  if (key == "c1")
    return make_cnot_k(1);
  if (key == "rc1")
    return reverse_conjugate(make_cnot_k(1));
  if (key == "s")
    return make_swap();
  if (key == "c2")
    return make_cnot_k(2);
  throw Error("unknown NCT gate '" + key + "'");
}

NctSynthesis synthesize_nct(BitWord const &u, BitWord const &v)
{
  NctSynthesis out;
  out.classification = classify_swap(u, v);
  if (out.classification.verdict != SwapVerdict::universal)
    throw NotUniversal(out.classification);

  unsigned const n = u.length();
  BitWord const &d = out.classification.difference;
  unsigned p = 0;
  while (!d[p])
    ++p;
  unsigned const q = n - 1u - p;

  // conjugate u to 0^n: f_{0^n, d} = C f_{u,v} C
  GateExpr conj;
  for (unsigned i = 0; i < n; ++i)
    if (u[i])
      conj *= flip_at(static_cast<int>(i));
  GateExpr const base = conj * GateExpr::atom("f") * conj;

  GateExpr const e01 = reduce(base, n, p - 1u, q);        // f_{00,01}
  GateExpr const e10 = reduce(base, n, p, q - 1u);        // f_{00,10}
  GateExpr const e010 = reduce(base, n, p - 1u, q - 1u);  // f_{000,010}

  GateExpr const rc1 = (flip_at(0) * e01 * flip_at(0)).shifted(-1);
  GateExpr const c1 = flip_at(1) * e10 * flip_at(1);
  GateExpr const s = c1 * rc1.shifted(1) * c1;
  GateExpr const c2 = s * flip_at(0) * flip_at(2) * e010 * flip_at(2) * flip_at(0) * s;

  out.dict = swap_dictionary(u, v);
  for (auto const &[key, prog] : {std::pair{"c1", c1}, {"rc1", rc1}, {"s", s}, {"c2", c2}}) {
    GateExpr const cleaned = peephole(prog, out.dict);
    if (evaluate_expr(cleaned, out.dict) != nct_target(key))
      throw Error(std::string("internal error: synthesized ") + key + " failed verification for (" +
                  u.to_string() + ", " + v.to_string() + ")");
    out.programs.emplace(key, cleaned);
  }
  return out;
}

std::vector<CheckLine> standard_generating_checks()
{
  GeneratorDict const dict{
    {"c0", make_flip()},
    {"c1", make_cnot_k(1)},
    {"rc1", reverse_conjugate(make_cnot_k(1))},
    {"c2", make_cnot_k(2)},
    {"s", make_swap()},
  };
  auto holds = [&](std::string_view expr, GroupElement const &target) {
    return evaluate_expr(GateExpr::parse(expr), dict) == target;
  };

  std::vector<CheckLine> out;
  out.push_back({"c1 (sigma^-1 Rc1R sigma) c1 = s", swap_from_cnots_holds()});
  out.push_back({"f_{011,111} = c2", toffoli_is_word_swap()});
  out.push_back({"s s = id", holds("s s", identity())});
  out.push_back({"c1 = c2 c0@2 c2 c0@2", holds("c2 c0@2 c2 c0@2", make_cnot_k(1))});
  out.push_back({"Rc1R = s@-1 c1@-1 s@-1",
                 holds("s@-1 c2@-1 c0@1 c2@-1 c0@1 s@-1", reverse_conjugate(make_cnot_k(1)))});
  out.push_back({"s = c1 rc1@1 c1", holds("c1 rc1@1 c1", make_swap())});
  return out;
}

} // namespace gatecalc
