#include "gatecalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>

#include "gatecalc/acceptance.hpp"
#include "gatecalc/analysis.hpp"
#include "gatecalc/cyclic.hpp"
#include "gatecalc/grammar.hpp"
#include "gatecalc/identities.hpp"
#include "gatecalc/search.hpp"
#include "gatecalc/serialize.hpp"
#include "gatecalc/synth.hpp"

namespace gatecalc::cli
{

namespace
{

using nlohmann::json;

constexpr char const *schema = "gatecalc/1";

struct Globals
{
  bool json = false;
  unsigned window_cap = 24;
  bool mirrored = false;
  std::string swap;
};

std::pair<BitWord, BitWord> parse_pair(std::string const &text)
{
  auto const comma = text.find(',');
  if (comma == std::string::npos)
    throw Error("expected U,V but got '" + text + "'");
  return {BitWord::from_string(text.substr(0, comma)), BitWord::from_string(text.substr(comma + 1))};
}

bool all_digits(std::string const &s)
{
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

// Names resolve as: a/b/c (shift-conjugates of e57), digit strings k (e57 at cell k),
// f (the --swap pair), then the built-in gate names.
GeneratorDict dictionary_for(GateExpr const &expr, Globals const &g)
{
  GeneratorDict dict;
  GeneratorDict const abc = abc_generators(
    make_eca(57), g.mirrored ? LetterConvention::mirrored : LetterConvention::standard);
  for (auto const &atom : expr.atoms()) {
    auto const &name = atom.name;
    if (dict.contains(name))
      continue;
    if (auto it = abc.find(name); it != abc.end())
      dict.emplace(name, it->second);
    else if (all_digits(name))
      dict.emplace(name, shift_conjugate(make_eca(57), std::stoi(name)));
    else if (name == "f") {
      if (g.swap.empty())
        throw Error("generator 'f' needs --swap U,V");
      auto const [u, v] = parse_pair(g.swap);
      dict.emplace(name, make_word_swap(u, v));
    } else
      dict.emplace(name, make_named(name));
  }
  return dict;
}

GroupElement evaluate_text(std::string const &text, Globals const &g)
{
  GateExpr const e = GateExpr::parse(text);
  if (e.empty())
    throw Error("empty gate expression");
  return evaluate_expr(e, dictionary_for(e, g));
}

std::string join(std::vector<std::string> const &parts)
{
  std::string out;
  for (auto const &p : parts)
    out += (out.empty() ? "" : " ") + p;
  return out;
}

json header(char const *command)
{ return json{{"schema", schema}, {"command", command}}; }

void emit(std::ostream &out, json const &j)
{ out << j.dump(2) << "\n"; }

// ---- gate -------------------------------------------------------------------

struct GateArgs
{
  std::vector<std::string> expr;
  bool left_first = false;
  std::string apply;
  int anchor = 0;
};

int cmd_gate(GateArgs const &a, Globals const &g, std::ostream &out)
{
  std::string const text = join(a.expr);
  GateExpr const e = GateExpr::parse(text);
  if (e.empty())
    throw Error("empty gate expression");
  GeneratorDict const dict = dictionary_for(e, g);
  GroupElement const f = a.left_first ? evaluate_expr_left_first(e, dict) : evaluate_expr(e, dict);

  std::optional<Placement> placed;
  if (!a.apply.empty())
    placed = apply(f, BitWord::from_string(a.apply), a.anchor);

  if (g.json) {
    json j = header("gate");
    j["expr"] = e.to_string();
    j["gate"] = gate_to_json(f);
    if (placed)
      j["apply"] = {{"input", a.apply}, {"anchor", a.anchor},
                    {"output", placed->word.to_string()}, {"output_anchor", placed->anchor}};
    emit(out, j);
  } else {
    out << describe(f) << "\n";
    if (placed)
      out << "apply " << a.apply << " @" << a.anchor << " -> " << placed->word.to_string() << " @"
          << placed->anchor << "\n";
  }
  return exit_ok;
}

// ---- classify ---------------------------------------------------------------

std::string swap_summary(SwapClass const &c)
{
  std::ostringstream os;
  os << to_string(c.verdict);
  if (c.verdict != SwapVerdict::universal) {
    os << " (" << c.subgroup;
    if (c.witness)
      os << ", w = " << c.witness->to_string();
    os << (c.witness_verified ? ", membership verified)" : ", membership NOT verified)");
  }
  return os.str();
}

int cmd_classify_swap(std::string const &u_text, std::string const &v_text, Globals const &g,
                      std::ostream &out)
{
  BitWord const u = BitWord::from_string(u_text);
  BitWord const v = BitWord::from_string(v_text);
  SwapClass const c = classify_swap(u, v);
  bool const ok = c.verdict == SwapVerdict::universal || c.witness_verified;
  if (g.json) {
    json j = header("classify swap");
    j["u"] = u_text;
    j["v"] = v_text;
    j["difference"] = c.difference.to_string();
    j["verdict"] = to_string(c.verdict);
    j["subgroup"] = c.subgroup;
    j["witness"] = c.witness ? json(c.witness->to_string()) : json(nullptr);
    j["witness_verified"] = c.witness_verified;
    emit(out, j);
  } else {
    out << swap_summary(c) << "\n";
  }
  return ok ? exit_ok : exit_failed;
}

std::string eca_summary(EcaClass const &c)
{
  std::string s = to_string(c.verdict);
  if (c.verdict == EcaVerdict::universal)
    s += c.certificate_verified ? " (certificate verified)" : " (certificate NOT verified)";
  else if (c.verdict == EcaVerdict::non_universal)
    s += std::string(" (") + to_string(c.reason) + ")";
  return s;
}

json eca_json(EcaClass const &c)
{
  json j{{"rule", c.rule}, {"verdict", to_string(c.verdict)}, {"reason", to_string(c.reason)},
         {"certificate_verified", c.certificate_verified}};
  if (c.certificate_convention)
    j["certificate_letters"] =
      *c.certificate_convention == LetterConvention::standard ? "standard" : "mirrored";
  if (c.swap_pair)
    j["swap_pair"] = {c.swap_pair->first.to_string(), c.swap_pair->second.to_string()};
  return j;
}

int cmd_classify_eca(std::optional<unsigned> rule, Globals const &g, std::ostream &out)
{
  std::vector<EcaClass> classes;
  if (rule)
    classes.push_back(classify_eca(*rule));
  else
    for (unsigned r = 0; r < 256; ++r)
      if (eca_is_bijective(r))
        classes.push_back(classify_eca(r));

  bool ok = true;
  for (auto const &c : classes)
    ok = ok && !(c.verdict == EcaVerdict::universal && !c.certificate_verified);

  if (g.json) {
    json j = header("classify eca");
    j["rules"] = json::array();
    for (auto const &c : classes)
      j["rules"].push_back(eca_json(c));
    emit(out, j);
  } else if (rule) {
    out << eca_summary(classes.front()) << "\n";
  } else {
    for (auto const &c : classes)
      out << "rule " << c.rule << ": " << eca_summary(c) << "\n";
  }
  return ok ? exit_ok : exit_failed;
}

// ---- synthesize -------------------------------------------------------------

int cmd_synthesize(std::string const &u_text, std::string const &v_text, Globals const &g,
                   std::ostream &out, std::ostream &err)
{
  BitWord const u = BitWord::from_string(u_text);
  BitWord const v = BitWord::from_string(v_text);
  try {
    NctSynthesis const s = synthesize_nct(u, v);
    if (g.json) {
      json j = header("synthesize");
      j["u"] = u_text;
      j["v"] = v_text;
      j["generators"] = {{"c0", gate_to_json(s.dict.at("c0"))}, {"f", gate_to_json(s.dict.at("f"))}};
      j["programs"] = json::object();
      for (auto const &[key, prog] : s.programs)
        j["programs"][key] = {{"length", prog.size()}, {"expr", prog.to_string()}, {"verified", true}};
      emit(out, j);
    } else {
      out << "f = f_{" << u_text << "," << v_text << "}; all programs verified at cell 0\n";
      for (auto const &key : {"c1", "rc1", "s", "c2"}) {
        auto const &prog = s.programs.at(key);
        out << key << " (" << prog.size() << " gates): " << prog.to_string() << "\n";
      }
    }
    return exit_ok;
  } catch (NotUniversal const &e) {
    if (g.json) {
      json j = header("synthesize");
      j["u"] = u_text;
      j["v"] = v_text;
      j["error"] = "NotUniversal";
      j["verdict"] = to_string(e.classification().verdict);
      j["subgroup"] = e.classification().subgroup;
      emit(out, j);
    } else {
      err << "not universal: " << swap_summary(e.classification()) << "\n";
    }
    return exit_failed;
  }
}

// ---- project ----------------------------------------------------------------

struct ProjectArgs
{
  std::vector<std::string> gate;
  unsigned n = 0;
  std::string method = "formula";
  bool cycles = false;
};

int cmd_project(ProjectArgs const &a, Globals const &g, std::ostream &out)
{
  if (a.n > ring_cap())
    throw Error("ring size " + std::to_string(a.n) + " exceeds the cap " + std::to_string(ring_cap()));
  GroupElement const f = evaluate_text(join(a.gate), g);
  CyclicPerm const p = a.method == "periodic" ? project_periodic(f, a.n) : project_formula(f, a.n);
  bool agree = true;
  if (a.method == "both")
    agree = p == project_periodic(f, a.n);

  if (g.json) {
    json j = header("project");
    j["gate"] = gate_to_json(f);
    j["n"] = a.n;
    j["method"] = a.method;
    j["parity"] = to_string(sign(p));
    j["cycle_count"] = p.cycle_count();
    if (a.method == "both")
      j["methods_agree"] = agree;
    if (a.cycles)
      j["cycles"] = format_cycles(p);
    j["table"] = std::vector<std::uint32_t>(p.table().begin(), p.table().end());
    emit(out, j);
  } else {
    out << "n = " << a.n << ", " << to_string(sign(p)) << " permutation, " << p.cycle_count()
        << " cycles\n";
    if (a.method == "both")
      out << "formula and periodic projections " << (agree ? "agree" : "DISAGREE") << "\n";
    if (a.cycles)
      out << format_cycles(p) << "\n";
  }
  return agree ? exit_ok : exit_failed;
}

// ---- parity -----------------------------------------------------------------

int cmd_parity(unsigned max_n, Globals const &g, std::ostream &out)
{
  if (max_n < 1 || max_n > ring_cap())
    throw Error("--max-n must lie in [1, " + std::to_string(ring_cap()) + "]");
  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  text << "n   p_n      p_n parity  sign(sigma_n)\n";
  for (unsigned n = 1; n <= max_n; ++n) {
    std::uint64_t const p = necklace_count_formula(n);
    std::uint64_t const orbits = necklace_count_orbits(n);
    Parity const s = sign(CyclicPerm::rotation(n, 1));
    bool const row_ok = p == orbits && (((std::uint64_t{1} << n) - p) % 2 == 1) == (s == Parity::odd);
    ok = ok && row_ok;
    char const *parity = p % 2 ? "odd" : "even";
    rows.push_back({{"n", n}, {"p_n", p}, {"orbit_count", orbits}, {"p_n_parity", parity},
                    {"sigma_sign", to_string(s)}, {"consistent", row_ok}});
    text << n << std::string(n < 10 ? 3 : 2, ' ') << p << std::string(9 - std::to_string(p).size(), ' ')
         << parity << std::string(12 - std::string(parity).size(), ' ') << to_string(s)
         << (row_ok ? "" : "  INCONSISTENT") << "\n";
  }
  if (g.json) {
    json j = header("parity");
    j["rows"] = rows;
    emit(out, j);
  } else {
    out << text.str();
  }
  return ok ? exit_ok : exit_failed;
}

// ---- grammar ----------------------------------------------------------------

ExpansionOrder parse_order(std::string const &s)
{
  if (s == "application")
    return ExpansionOrder::application;
  if (s == "written")
    return ExpansionOrder::written;
  throw Error("unknown expansion order '" + s + "' (expected application or written)");
}

int cmd_grammar_expand(std::string const &start, std::string const &order, Globals const &g,
                       std::ostream &out)
{
  start_target(start);
  std::string const s = Slg::standard().expand(start, parse_order(order));
  if (g.json) {
    json j = header("grammar expand");
    j["start"] = start;
    j["order"] = order;
    j["length"] = s.size();
    j["adjacent_repeats"] = count_repeated_terminals(s);
    j["string"] = s;
    emit(out, j);
  } else {
    out << s << "\n";
  }
  return exit_ok;
}

int cmd_grammar_verify(std::vector<std::string> starts, std::optional<unsigned> ring,
                       std::optional<int> cell, Globals const &g, std::ostream &out)
{
  if (starts.empty())
    for (auto s : start_symbols())
      starts.emplace_back(s);

  bool ok = true;
  json results = json::array();
  for (auto const &start : starts) {
    GroupElement const target = start_target(start);
    SemanticsReport const r = verify_semantics(start, target);
    json row{{"start", start}, {"length", r.length}};
    row["cell"] = r.cell() ? json(*r.cell()) : json(nullptr);
    row["cell_other_order"] =
      r.cell_first_applied_last ? json(*r.cell_first_applied_last) : json(nullptr);

    bool pass = r.pass();
    std::optional<int> const at = cell ? cell : r.cell();
    if (ring) {
      pass = at && verify_on_ring(start, target, *ring, *at);
      row["ring"] = *ring;
      row["ring_cell"] = at ? json(*at) : json(nullptr);
    } else if (cell) {
      pass = pass && *r.cell() == *cell;
    }
    row["pass"] = pass;
    ok = ok && pass;
    results.push_back(row);

    if (!g.json) {
      out << start << ": " << (pass ? "pass" : "FAIL") << " (" << r.length << " terminals";
      if (at)
        out << ", cell " << *at;
      if (ring)
        out << ", ring n = " << *ring;
      out << ")\n";
    }
  }
  if (g.json) {
    json j = header("grammar verify");
    j["results"] = results;
    j["pass"] = ok;
    emit(out, j);
  }
  return ok ? exit_ok : exit_failed;
}

// ---- search -----------------------------------------------------------------

struct SearchArgs
{
  std::vector<std::string> gens;
  std::string target;
  std::string strategy = "mitm";
  unsigned max_depth = 10;
  std::string mem = "2G";
  std::vector<std::string> names;
};

int cmd_search(SearchArgs const &a, Globals const &g, std::ostream &out)
{
  SearchConfig cfg;
  for (auto const &s : a.gens)
    cfg.generators.push_back(evaluate_text(s, g));
  cfg.target = evaluate_text(a.target, g);
  cfg.max_depth = a.max_depth;
  cfg.memory_budget = parse_byte_count(a.mem);
  cfg.strategy = parse_strategy(a.strategy);

  std::vector<std::string> names = a.names.empty() ? a.gens : a.names;
  if (names.size() != a.gens.size())
    throw Error("--names needs one name per generator");

  SearchResult const r = search(cfg);
  std::string const word = word_expr(r.word, names).to_string();
  if (g.json) {
    json j = header("search");
    j["status"] = to_string(r.status);
    j["strategy"] = a.strategy;
    j["max_depth"] = a.max_depth;
    j["generators"] = names;
    j["word"] = word;
    j["word_indices"] = r.word;
    j["length"] = r.word.size();
    j["certified"] = r.certified;
    j["shortest"] = r.shortest;
    j["stats"] = {{"window", {r.stats.window_lo, r.stats.window_hi}},
                  {"states", r.stats.states},
                  {"bytes", r.stats.bytes},
                  {"depth_completed", r.stats.depth_completed},
                  {"layer_sizes", r.stats.layer_sizes},
                  {"ball_closed", r.stats.ball_closed},
                  {"seconds", r.stats.seconds}};
    emit(out, j);
  } else {
    out << to_string(r.status);
    if (r.status == SearchStatus::found)
      out << ": length " << r.word.size() << (r.certified ? ", certified" : "")
          << (r.shortest ? ", shortest" : "") << "\n" << (word.empty() ? "(empty word)" : word);
    out << "\nwindow [" << r.stats.window_lo << ", " << r.stats.window_hi << "], " << r.stats.states
        << " states, " << r.stats.bytes << " bytes, depth " << r.stats.depth_completed
        << (r.stats.ball_closed ? " (ball closed)" : "") << ", " << r.stats.seconds << " s\n";
  }
  return r.status == SearchStatus::found ? exit_ok : exit_failed;
}

// ---- verify-all -------------------------------------------------------------

int cmd_verify_all(std::string const &mem, bool stretch, std::vector<unsigned> const &only,
                   Globals const &g, std::ostream &out)
{
  AcceptanceOptions opts;
  opts.search_budget = parse_byte_count(mem);

  std::vector<CriterionReport> reports;
  if (only.empty())
    reports = run_acceptance(opts);
  else
    for (unsigned id : only)
      reports.push_back(run_criterion(id, opts));
  if (stretch)
    reports.push_back(run_flip_lower_bound(opts));

  bool ok = true;
  json rows = json::array();
  for (auto const &r : reports) {
    ok = ok && r.pass();
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"correct", r.correct},
                    {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    if (!g.json) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << (r.pass() ? "PASS " : "FAIL ") << (r.id ? std::to_string(r.id) : std::string("S"))
           << (r.id >= 10 ? " " : "  ") << r.title << " [" << r.seconds << "s / " << r.limit_seconds
           << "s]\n      " << r.detail << "\n";
      out << line.str();
    }
  }
  if (g.json) {
    json j = header("verify-all");
    j["criteria"] = rows;
    j["pass"] = ok;
    emit(out, j);
  } else {
    out << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  }
  return ok ? exit_ok : exit_failed;
}

} // anonymous namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Reversible gate calculus on {0,1}^Z: gates, classification, synthesis, search",
               "gatecalc"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--window-cap", g.window_cap, "Largest gate window width")
    ->envname("GATECALC_WINDOW_CAP")
    ->check(CLI::Range(1u, 28u));
  app.add_flag("--mirrored", g.mirrored, "Exchange the letters a and c");
  app.add_option("--swap", g.swap, "Word swap pair U,V bound to the generator name f");

  GateArgs gate_args;
  auto *gate = app.add_subcommand("gate", "Evaluate a gate expression (leftmost factor applied last)");
  gate->add_option("expr", gate_args.expr, "Expression, e.g. \"c1 rc1@1 c1\" or an {a,b,c} word")
    ->required();
  gate->add_flag("--left-first", gate_args.left_first, "Apply the leftmost factor first");
  gate->add_option("--apply", gate_args.apply, "Apply the gate to this finite word");
  gate->add_option("--anchor", gate_args.anchor, "Cell of the first letter of --apply");

  auto *classify = app.add_subcommand("classify", "Universality classification");
  classify->require_subcommand(1);
  std::string u_text;
  std::string v_text;
  auto *cls_swap = classify->add_subcommand("swap", "Classify the word swap f_{u,v}");
  cls_swap->add_option("--u", u_text, "Word u")->required();
  cls_swap->add_option("--v", v_text, "Word v")->required();
  std::optional<unsigned> rule;
  auto *cls_eca = classify->add_subcommand("eca", "Classify the asynchronous ECA e^rule");
  auto *rule_opt = cls_eca->add_option("--rule", rule, "Wolfram rule number")->check(CLI::Range(0u, 255u));
  bool all_rules = false;
  cls_eca->add_flag("--all", all_rules, "All bijective rules")->excludes(rule_opt);

  auto *synth = app.add_subcommand("synthesize", "Programs for c1, Rc1R, s, c2 from {c0, f_{u,v}}");
  synth->add_option("--u", u_text, "Word u")->required();
  synth->add_option("--v", v_text, "Word v")->required();

  ProjectArgs project_args;
  auto *project = app.add_subcommand("project", "Project a gate to the ring of size n");
  project->add_option("--gate", project_args.gate, "Gate expression")->required()->expected(1, -1);
  project->add_option("--n", project_args.n, "Ring size")->required();
  project->add_option("--method", project_args.method, "formula, periodic or both")
    ->check(CLI::IsMember({"formula", "periodic", "both"}));
  project->add_flag("--cycles", project_args.cycles, "Print the cycle decomposition");

  unsigned max_n = 16;
  auto *parity = app.add_subcommand("parity", "Necklace counts and the sign of the ring rotation");
  parity->add_option("--max-n", max_n, "Largest ring size");

  auto *grammar = app.add_subcommand("grammar", "Straight-line grammar for the ECA 57 programs");
  grammar->require_subcommand(1);
  std::string start;
  std::string order = "application";
  auto *g_expand = grammar->add_subcommand("expand", "Expand a start symbol to its terminal string");
  g_expand->add_option("--start", start, "N3, C3, T3, D3 or S3")->required();
  g_expand->add_option("--order", order, "application (default) or written");
  std::vector<std::string> starts;
  std::optional<unsigned> ring;
  std::optional<int> cell;
  auto *g_verify = grammar->add_subcommand("verify", "Check expansions against their target gates");
  g_verify->add_option("--start", starts, "Start symbols (default: all)");
  g_verify->add_option("--ring", ring, "Check on the ring of this size instead of on Z");
  g_verify->add_option("--cell", cell, "Anchor cell (default: located on Z)");

  SearchArgs search_args;
  auto *search_cmd = app.add_subcommand("search", "Shortest word over inert generators for a target");
  search_cmd->add_option("--gen", search_args.gens, "Generators, e.g. e57@1,e57@0,e57@-1")
    ->required()
    ->delimiter(',');
  search_cmd->add_option("--target", search_args.target, "Target expression")->required();
  search_cmd->add_option("--strategy", search_args.strategy, "bfs or mitm")
    ->check(CLI::IsMember({"bfs", "mitm"}));
  search_cmd->add_option("--max-depth", search_args.max_depth, "BFS depth, or ball radius for mitm")
    ->check(CLI::Range(1u, 255u));
  search_cmd->add_option("--mem", search_args.mem, "Memory budget, e.g. 512M or 2G")->envname("GATECALC_MEM");
  search_cmd->add_option("--names", search_args.names, "Display names for the generators")->delimiter(',');

  std::string verify_mem = "2G";
  bool stretch = false;
  std::vector<unsigned> only;
  auto *verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_all->add_option("--mem", verify_mem, "Memory budget for the search criterion")
    ->envname("GATECALC_MEM");
  verify_all->add_flag("--stretch", stretch, "Also establish that no shorter word gives the flip");
  verify_all->add_option("--only", only, "Run only these criteria")
    ->delimiter(',')
    ->check(CLI::Range(1u, acceptance_count));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    set_window_cap(g.window_cap);
    if (gate->parsed())
      return cmd_gate(gate_args, g, out);
    if (cls_swap->parsed())
      return cmd_classify_swap(u_text, v_text, g, out);
    if (cls_eca->parsed()) {
      if (!rule && !all_rules)
        throw Error("classify eca needs --rule or --all");
      return cmd_classify_eca(rule, g, out);
    }
    if (synth->parsed())
      return cmd_synthesize(u_text, v_text, g, out, err);
    if (project->parsed())
      return cmd_project(project_args, g, out);
    if (parity->parsed())
      return cmd_parity(max_n, g, out);
    if (g_expand->parsed())
      return cmd_grammar_expand(start, order, g, out);
    if (g_verify->parsed())
      return cmd_grammar_verify(starts, ring, cell, g, out);
    if (search_cmd->parsed())
      return cmd_search(search_args, g, out);
    if (verify_all->parsed())
      return cmd_verify_all(verify_mem, stretch, only, g, out);
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << app.help();
  return exit_usage;
}

int run(int argc, char const *const *argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace gatecalc::cli
