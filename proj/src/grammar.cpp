#include "gatecalc/grammar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace gatecalc
{

namespace
{

constexpr std::array<std::string_view, 5> k_starts{"N3", "C3", "T3", "D3", "S3"};

std::vector<std::string> tokens(std::string_view rhs)
{
  std::vector<std::string> out;
  std::istringstream is{std::string(rhs)};
  for (std::string t; is >> t;)
    out.push_back(t);
  return out;
}

std::vector<Slg::Production> standard_productions()
{
  std::vector<std::pair<std::string_view, std::string_view>> const rules{
    {"T3", "S3 N3 E4 N3 S3"},
    {"S3", "C3 D4 C3"},
    {"C3", "E3 N2 E3 N2"},
    {"D3", "N2 E3 N4 E3 N2 N4"},
    {"D4", "N3 E4 N5 E4 N3 N5"},
    {"E3", "N3 3"},
    {"E4", "N4 4"},
    {"N2", "12312321212132121212323121321232323231232321213232"},
    {"N3", "23423432323243232323434232432343434342343432324343"},
    {"N4", "34534543434354343434545343543454545453454543435454"},
    {"N5", "45645654545465454545656454654565656564565654546565"},
  };

  std::vector<Slg::Production> out;
  for (auto const &[lhs, rhs] : rules)
    out.push_back({std::string(lhs), tokens(rhs)});
  return out;
}

bool is_terminal_run(std::string_view s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

void check_start(std::string_view start)
{
  if (std::find(k_starts.begin(), k_starts.end(), start) == k_starts.end())
    throw Error("unknown start symbol '" + std::string(start) +
                "' (expected one of N3 C3 T3 D3 S3)");
}

} // anonymous namespace

Slg const &Slg::standard()
{
  static Slg const g(standard_productions());
  return g;
}

Slg::Slg(std::vector<Production> productions)
  : _productions(std::move(productions))
{
  for (auto const &p : _productions) {
    for (auto const &sym : p.rhs) {
      if (!is_nonterminal(sym) && !is_terminal_run(sym))
        throw Error("production " + p.lhs + " uses undefined symbol '" + sym + "'");
    }
  }
  check_acyclic();
}

bool Slg::is_nonterminal(std::string_view symbol) const
{
  return std::any_of(_productions.begin(), _productions.end(),
                     [&](Production const &p) { return p.lhs == symbol; });
}

Slg::Production const &Slg::find(std::string_view symbol) const
{
  for (auto const &p : _productions)
    if (p.lhs == symbol)
      return p;
  throw Error("unknown nonterminal '" + std::string(symbol) + "'");
}

void Slg::check_acyclic() const
{
  enum class Mark { none, active, done };
  std::map<std::string, Mark, std::less<>> marks;

  auto visit = [&](auto &self, std::string const &sym) -> void {
    auto &m = marks[sym];
    if (m == Mark::done)
      return;
    if (m == Mark::active)
      throw Error("grammar is not straight-line: cycle through " + sym);
    m = Mark::active;
    for (auto const &s : find(sym).rhs)
      if (is_nonterminal(s))
        self(self, s);
    marks[sym] = Mark::done;
  };

  for (auto const &p : _productions)
    visit(visit, p.lhs);
}

std::string Slg::expand(std::string_view symbol, ExpansionOrder order) const
{
  auto const &rhs = find(symbol).rhs;
  std::string out;
  auto append = [&](std::string const &s) { out += is_nonterminal(s) ? expand(s, order) : s; };
  if (order == ExpansionOrder::written)
    std::for_each(rhs.begin(), rhs.end(), append);
  else
    std::for_each(rhs.rbegin(), rhs.rend(), append);
  return out;
}

std::span<std::string_view const> start_symbols()
{ return k_starts; }

GroupElement start_target(std::string_view start)
{
  check_start(start);
  switch (start.front()) {
    case 'N':
      return make_flip();
    case 'C':
      return make_cnot_k(1);
    case 'T':
      return make_cnot_k(2);
    case 'D':
      return reverse_conjugate(make_cnot_k(1));
    default:
      return make_swap();
  }
}

std::string expand(std::string_view start)
{
  check_start(start);
  return Slg::standard().expand(start);
}

GateExpr terminal_expr(std::string_view digits)
{
  std::vector<Atom> atoms;
  atoms.reserve(digits.size());
  for (char c : std::string(digits.rbegin(), digits.rend())) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("terminal strings contain digits only");
    atoms.push_back(Atom{"e57", c - '0', false});
  }
  return GateExpr(std::move(atoms));
}

GeneratorDict e57_dictionary()
{ return GeneratorDict{{"e57", make_eca(57)}}; }

SemanticsReport verify_semantics(std::string_view start, GroupElement const &target)
{
  std::string const digits = expand(start);
  GateExpr const expr = terminal_expr(digits);
  auto const dict = e57_dictionary();

  auto locate = [&](GroupElement const &value) -> std::optional<int> {
    for (int k = 0; k <= 8; ++k)
      if (value == shift_conjugate(target, k))
        return k;
    return std::nullopt;
  };

  SemanticsReport r;
  r.start = std::string(start);
  r.length = digits.size();
  r.cell_first_applied_first = locate(evaluate_expr(expr, dict));
  r.cell_first_applied_last = locate(evaluate_expr_left_first(expr, dict));
  return r;
}

bool verify_on_ring(std::string_view start, GroupElement const &target, unsigned n, int cell)
{
  if (n < 4)
    throw RingTooSmall(n, 4);

  std::string const digits = expand(start);
  GroupElement const e57 = make_eca(57);
  std::array<std::optional<CyclicPerm>, 10> terminals;

  // the string is in application order: each digit acts after the previous ones
  CyclicPerm product = CyclicPerm::identity(n);
  for (char c : digits) {
    int const i = c - '0';
    auto &t = terminals[static_cast<std::size_t>(i)];
    if (!t)
      t = project_formula(shift_conjugate(e57, i), n);
    product = compose(*t, product);
  }
  return product == project_formula(shift_conjugate(target, cell), n);
}

std::size_t count_repeated_terminals(std::string_view digits)
{
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < digits.size(); ++i)
    if (digits[i] == digits[i + 1])
      ++n;
  return n;
}

} // namespace gatecalc
