#include "gatecalc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gatecalc
{

namespace
{

Atom parse_atom(std::string_view tok)
{
  Atom a;
  if (tok.ends_with("^-1")) {
    a.inverse = true;
    tok.remove_suffix(3);
  } else if (tok.ends_with("'")) {
    a.inverse = true;
    tok.remove_suffix(1);
  }

  auto const at = tok.find('@');
  if (at != std::string_view::npos) {
    auto const digits = tok.substr(at + 1);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), a.cell);
    if (ec != std::errc{} || p != digits.data() + digits.size())
      throw Error("bad cell in atom '" + std::string(tok) + "'");
    tok = tok.substr(0, at);
  }
  if (tok.empty())
    throw Error("empty generator name");
  a.name = std::string(tok);
  return a;
}

GroupElement const &lookup(GeneratorDict const &dict, std::string const &name)
{
  auto it = dict.find(name);
  if (it == dict.end())
    throw Error("unknown generator '" + name + "'");
  return it->second;
}

GroupElement atom_value(GeneratorDict const &dict, Atom const &a)
{
  GroupElement g = shift_conjugate(lookup(dict, a.name), a.cell);
  return a.inverse ? inverse(g) : g;
}

bool cancels(GeneratorDict const &dict, Atom const &x, Atom const &y)
{
  if (x.name != y.name || x.cell != y.cell)
    return false;
  if (x.inverse != y.inverse)
    return true;
  GroupElement const &g = lookup(dict, x.name);
  return compose(g, g).is_identity();
}

} // anonymous namespace

GateExpr GateExpr::parse(std::string_view text)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i)
      tokens.push_back(text.substr(i, j - i));
    i = j;
  }

  GateExpr e;
  if (tokens.size() == 1) {
    auto const tok = tokens.front();
    bool const letters = std::all_of(tok.begin(), tok.end(), [](char c) {
      return std::islower(static_cast<unsigned char>(c));
    });
    bool const digits = std::all_of(tok.begin(), tok.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    // a single named generator such as "c0" or "sigma" is still one atom
    if ((letters && tok.size() > 1 && tok != "sigma" && tok != "swap" && tok != "flip") || digits) {
      for (char c : tok)
        e._atoms.push_back(Atom{std::string(1, c), 0, false});
      return e;
    }
  }
  for (auto tok : tokens)
    e._atoms.push_back(parse_atom(tok));
  return e;
}

GateExpr GateExpr::atom(std::string name, int cell, bool inverse)
{ return GateExpr({Atom{std::move(name), cell, inverse}}); }

GateExpr GateExpr::operator*(GateExpr const &rhs) const
{
  GateExpr r = *this;
  r *= rhs;
  return r;
}

GateExpr &GateExpr::operator*=(GateExpr const &rhs)
{
  _atoms.insert(_atoms.end(), rhs._atoms.begin(), rhs._atoms.end());
  return *this;
}

GateExpr GateExpr::shifted(int k) const
{
  GateExpr r = *this;
  for (auto &a : r._atoms)
    a.cell += k;
  return r;
}

GateExpr GateExpr::inverted() const
{
  GateExpr r = reversed();
  for (auto &a : r._atoms)
    a.inverse = !a.inverse;
  return r;
}

GateExpr GateExpr::reversed() const
{
  GateExpr r = *this;
  std::reverse(r._atoms.begin(), r._atoms.end());
  return r;
}

std::string GateExpr::to_string() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < _atoms.size(); ++i) {
    auto const &a = _atoms[i];
    os << (i ? " " : "") << a.name;
    if (a.cell != 0)
      os << '@' << a.cell;
    if (a.inverse)
      os << "^-1";
  }
  return os.str();
}

GroupElement evaluate_expr(GateExpr const &expr, GeneratorDict const &dict)
{
  GroupElement r;
  for (auto const &a : expr.atoms())
    r = compose(r, atom_value(dict, a));
  return r;
}

GroupElement evaluate_expr_left_first(GateExpr const &expr, GeneratorDict const &dict)
{
  GroupElement r;
  for (auto const &a : expr.atoms())
    r = compose(atom_value(dict, a), r);
  return r;
}

GateExpr peephole(GateExpr const &expr, GeneratorDict const &dict)
{
  std::vector<Atom> out;
  out.reserve(expr.size());
  for (auto const &a : expr.atoms()) {
    if (!out.empty() && cancels(dict, out.back(), a))
      out.pop_back();
    else
      out.push_back(a);
  }
  return GateExpr(std::move(out));
}

std::size_t count_adjacent_cancellations(GateExpr const &expr, GeneratorDict const &dict)
{
  std::size_t n = 0;
  auto const &atoms = expr.atoms();
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
    if (cancels(dict, atoms[i], atoms[i + 1]))
      ++n;
  return n;
}

} // namespace gatecalc
