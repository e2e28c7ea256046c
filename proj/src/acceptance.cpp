#include "gatecalc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "gatecalc/analysis.hpp"
#include "gatecalc/cyclic.hpp"
#include "gatecalc/grammar.hpp"
#include "gatecalc/identities.hpp"
#include "gatecalc/search.hpp"
#include "gatecalc/synth.hpp"

namespace gatecalc
{

namespace
{

struct Outcome
{
  bool correct = false;
  std::string detail;
};

InertGate random_inert(std::mt19937_64 &rng, unsigned max_width)
{
  std::uniform_int_distribution<unsigned> width_dist(1, max_width);
  std::uniform_int_distribution<int> lo_dist(-3, 3);
  unsigned const w = width_dist(rng);
  int const lo = lo_dist(rng);
  std::vector<std::uint32_t> table(std::size_t{1} << w);
  std::iota(table.begin(), table.end(), 0u);
  std::shuffle(table.begin(), table.end(), rng);
  return canonicalize(WindowRule{lo, lo + static_cast<int>(w) - 1, std::move(table)});
}

SearchConfig flip_search_config(AcceptanceOptions const &opts)
{
  GroupElement const e = make_eca(57);
  SearchConfig cfg;
  cfg.generators = {shift_conjugate(e, -1), e, shift_conjugate(e, 1)};
  cfg.target = make_flip();
  cfg.max_depth = 25;
  cfg.memory_budget = opts.search_budget;
  cfg.strategy = SearchStrategy::mitm;
  return cfg;
}

Outcome appendix_word(AcceptanceOptions const &)
{
  auto const results = check_word_conventions(flip_word, make_eca(57), make_flip());
  unsigned orders = 0;
  std::ostringstream os;
  for (auto const &r : results) {
    if (r.letters != LetterConvention::standard)
      continue;
    orders += r.equals_target;
    os << (r.order == CompositionOrder::leftmost_last ? "leftmost-last" : "leftmost-first") << "="
       << (r.equals_target ? "c0" : "other") << " ";
  }
  os << "(" << orders << " of 2 orders give c0; the letters are involutions, so the reversed word is the inverse of c0, which is c0)";
  return {orders == 1, os.str()};
}

Outcome grammar_golden(AcceptanceOptions const &)
{
  // lengths and FNV-1a digests of the reference strings
  struct Ref
  {
    std::string_view start;
    std::size_t length;
    std::uint64_t digest;
  };
  static constexpr Ref refs[] = {
    {"N3", 50, 0x5b9d5228e11732b3ULL},
    {"C3", 202, 0xaa298830a1b85b3bULL},
    {"T3", 1563, 0xb6cf6cbba1a0a3ebULL},
    {"D3", 302, 0x2fd8187cfa79a077ULL},
    {"S3", 706, 0xdffe4b7d20a2cb35ULL},
  };
  auto fnv = [](std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s)
      h = (h ^ c) * 0x100000001b3ULL;
    return h;
  };
  bool ok = true;
  std::ostringstream os;
  for (auto const &r : refs) {
    std::string const e = expand(r.start);
    bool const match = e.size() == r.length && fnv(e) == r.digest;
    ok = ok && match;
    os << r.start << ":" << e.size() << (match ? " " : "(mismatch) ");
  }
  return {ok, os.str()};
}

Outcome grammar_semantics(AcceptanceOptions const &)
{
  std::optional<int> cell;
  bool ok = true;
  std::ostringstream os;
  for (auto start : start_symbols()) {
    auto const r = verify_semantics(start, start_target(start));
    if (!r.pass() || (cell && *cell != *r.cell()))
      ok = false;
    if (r.pass() && !cell)
      cell = r.cell();
    os << start << "@" << (r.pass() ? std::to_string(*r.cell()) : "none") << " ";
  }
  os << "(anchor cell " << (cell ? std::to_string(*cell) : "none") << ")";
  return {ok, os.str()};
}

Outcome grammar_ring(AcceptanceOptions const &)
{
  unsigned checked = 0;
  bool ok = true;
  std::ostringstream os;
  for (auto start : start_symbols()) {
    auto const r = verify_semantics(start, start_target(start));
    if (!r.pass()) {
      ok = false;
      os << start << ": no anchor cell ";
      continue;
    }
    for (unsigned n = 4; n <= 12; ++n, ++checked) {
      if (!verify_on_ring(start, start_target(start), n, *r.cell())) {
        ok = false;
        os << start << " fails at n=" << n << " ";
      }
    }
  }
  os << checked << " (start, n) pairs checked for n in [4, 12]";
  return {ok, os.str()};
}

Outcome projection_cross(AcceptanceOptions const &opts)
{
  std::mt19937_64 rng(opts.seed);
  unsigned projections = 0;
  unsigned mismatches = 0;
  unsigned odd = 0;
  for (unsigned i = 0; i < 500; ++i) {
    GroupElement const g = from_inert(random_inert(rng, 5));
    for (unsigned n = minimum_ring_size(g); n <= 10; ++n) {
      CyclicPerm const p = project_formula(g, n);
      mismatches += !(p == project_periodic(g, n));
      odd += sign(p) == Parity::odd;
      ++projections;
    }
  }
  std::ostringstream os;
  os << projections << " projections of 500 random gates; " << mismatches << " formula/periodic mismatches, "
     << odd << " odd";
  return {mismatches == 0 && odd == 0, os.str()};
}

Outcome necklace_parity(AcceptanceOptions const &)
{
  bool ok = true;
  std::ostringstream os;
  for (unsigned n = 1; n <= 20; ++n) {
    std::uint64_t const p = necklace_count_formula(n);
    if (p != necklace_count_orbits(n)) {
      ok = false;
      os << "count mismatch at n=" << n << " ";
    }
    bool const even = p % 2 == 0;
    if (even != (n != 2)) {
      ok = false;
      os << "parity of p_" << n << " unexpected ";
    }
    if (n <= 16) {
      bool const odd_sign = ((std::uint64_t{1} << n) - p) % 2 == 1;
      if (odd_sign != (sign(CyclicPerm::rotation(n, 1)) == Parity::odd)) {
        ok = false;
        os << "sign mismatch at n=" << n << " ";
      }
    }
  }
  os << "p_1..p_20 agree; odd only at n=2; sign(sigma_n) checked to n=16";
  return {ok, os.str()};
}

Outcome swap_exhaustive(AcceptanceOptions const &)
{
  unsigned pairs = 0;
  unsigned universal = 0;
  unsigned problems = 0;
  std::ostringstream os;
  for (unsigned n = 1; n <= 6; ++n) {
    std::uint32_t const size = 1u << n;
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = 0; b < size; ++b, ++pairs) {
        BitWord const u(a, n);
        BitWord const v(b, n);
        SwapClass const c = classify_swap(u, v);
        bool const pattern = is_universal_pattern(diff_set(u, v));
        bool ok = (c.verdict == SwapVerdict::universal) == pattern;
        if (c.verdict == SwapVerdict::universal) {
          ++universal;
          try {
            auto const s = synthesize_nct(u, v);
            for (auto const &[key, prog] : s.programs)
              ok = ok && evaluate_expr(prog, s.dict) == nct_target(key);
            ok = ok && s.programs.size() == 4;
          } catch (Error const &) {
            ok = false;
          }
        } else {
          ok = ok && c.witness_verified;
          if (c.verdict == SwapVerdict::coset_preserving)
            ok = ok && c.witness && *c.witness == diff_set(u, v);
        }
        if (!ok && problems++ < 3)
          os << "(" << u.to_string() << "," << v.to_string() << ") ";
      }
    }
  }
  os << pairs << " pairs, " << universal << " universal with 4 certified programs each, " << problems
     << " problems";
  return {problems == 0, os.str()};
}

Outcome eca_exhaustive(AcceptanceOptions const &)
{
  unsigned bijective = 0;
  std::vector<unsigned> universal;
  bool certificates = true;
  for (unsigned r = 0; r < 256; ++r) {
    EcaClass const c = classify_eca(r);
    if (c.verdict == EcaVerdict::not_bijective)
      continue;
    ++bijective;
    if (c.verdict == EcaVerdict::universal) {
      universal.push_back(r);
      certificates = certificates && c.certificate_verified;
    }
  }
  bool const r51 = classify_eca(51).reason == EcaReason::equals_c0;
  bool const r105 = classify_eca(105).reason == EcaReason::affine;

  std::ostringstream os;
  os << bijective << " bijective; universal {";
  for (std::size_t i = 0; i < universal.size(); ++i)
    os << (i ? "," : "") << universal[i];
  os << "}; 51 " << to_string(classify_eca(51).reason) << "; 105 " << to_string(classify_eca(105).reason);
  return {bijective == 16 && universal == std::vector<unsigned>{57, 99} && certificates && r51 && r105,
          os.str()};
}

Outcome gate_identities(AcceptanceOptions const &)
{
  bool const eq1 = swap_from_cnots_holds();
  bool const toffoli = toffoli_is_word_swap();
  std::ostringstream os;
  os << "c1 (sigma^-1 Rc1R sigma) c1 = s: " << (eq1 ? "holds" : "fails")
     << "; f_{011,111} = c2: " << (toffoli ? "holds" : "fails");
  return {eq1 && toffoli, os.str()};
}

Outcome ring_lemmas(AcceptanceOptions const &opts)
{
  std::mt19937_64 rng(opts.seed ^ 0xc0ffee);
  unsigned conj_fail = 0;
  for (unsigned i = 0; i < 200; ++i) {
    InertGate const g = random_inert(rng, 4);
    unsigned const lo = minimum_ring_size(from_inert(g));
    std::uniform_int_distribution<unsigned> n_dist(std::max(lo, 2u), std::max(lo, 10u));
    std::uniform_int_distribution<int> m_dist(-12, 12);
    conj_fail += !check_conjugation_identity(g, n_dist(rng), m_dist(rng));
  }

  unsigned instances = 0;
  unsigned attempts = 0;
  unsigned loc_fail = 0;
  std::uniform_int_distribution<unsigned> k_dist(1, 4);
  std::uniform_int_distribution<int> shift_dist(-1, 1);
  std::uniform_int_distribution<unsigned> n_dist(8, 10);
  while (instances < 100 && attempts < 100000) {
    ++attempts;
    std::vector<GroupElement> fs;
    for (unsigned k = k_dist(rng); k > 0; --k) {
      GroupElement f = from_inert(random_inert(rng, 3));
      f.shift = shift_dist(rng);
      fs.push_back(f);
    }
    unsigned const n = n_dist(rng);
    std::uniform_int_distribution<int> h_dist(-6, 0);
    int const h = h_dist(rng);
    LocalityOutcome outcome;
    try {
      outcome = check_locality_homomorphism(fs, n, h);
    } catch (RingTooSmall const &) {
      continue;
    }
    if (outcome == LocalityOutcome::hypothesis_not_met)
      continue;
    ++instances;
    loc_fail += outcome == LocalityOutcome::fails;
  }

  std::ostringstream os;
  os << "conjugation identity: " << conj_fail << "/200 failures; locality: " << instances
     << " instances meeting the hypothesis, " << loc_fail << " failures";
  return {conj_fail == 0 && instances == 100 && loc_fail == 0, os.str()};
}

Outcome flip_search(AcceptanceOptions const &opts)
{
  SearchResult const r = search(flip_search_config(opts));
  std::ostringstream os;
  os << to_string(r.status);
  if (r.status == SearchStatus::found)
    os << ": length " << r.word.size() << ", " << (r.certified ? "re-evaluates to c0" : "NOT certified")
       << ", word " << word_expr(r.word, {"a", "b", "c"}).to_string();
  os << "; ball " << r.stats.states << " states, " << r.stats.bytes << " bytes";
  bool const ok = (r.status == SearchStatus::found && r.certified && r.word.size() <= 50) ||
                  r.status == SearchStatus::budget_exceeded;
  return {ok, os.str()};
}

struct Criterion
{
  char const *title;
  double limit;
  Outcome (*run)(AcceptanceOptions const &);
};

constexpr Criterion k_criteria[acceptance_count] = {
  {"50-letter word over {a,b,c} is c0 under exactly one composition order", 1.0, appendix_word},
  {"grammar expansions match the reference strings", 1.0, grammar_golden},
  {"grammar expansions evaluate to c0, c1, Rc1R, s, c2 at one anchor cell", 10.0, grammar_semantics},
  {"grammar expansions are correct on rings n = 4..12", 60.0, grammar_ring},
  {"projection formula matches periodic projection; projections are even", 60.0, projection_cross},
  {"necklace counts and the parity of sigma_n", 30.0, necklace_parity},
  {"word swap classification, |u| <= 6, both directions", 300.0, swap_exhaustive},
  {"ECA classification over rules 0..255", 10.0, eca_exhaustive},
  {"swap from CNOTs, Toffoli as a word swap", 1.0, gate_identities},
  {"conjugation identity and locality homomorphism on rings", 60.0, ring_lemmas},
  {"radius-25 meet-in-the-middle search for c0", 120.0, flip_search},
};

CriterionReport timed(unsigned id, char const *title, double limit,
                      std::function<Outcome()> const &body)
{
  CriterionReport r;
  r.id = id;
  r.title = title;
  r.limit_seconds = limit;
  auto const t0 = std::chrono::steady_clock::now();
  try {
    Outcome const o = body();
    r.correct = o.correct;
    r.detail = o.detail;
  } catch (std::exception const &e) {
    r.correct = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // anonymous namespace

CriterionReport run_criterion(unsigned id, AcceptanceOptions const &opts)
{
  if (id < 1 || id > acceptance_count)
    throw Error("acceptance criterion " + std::to_string(id) + " does not exist (1.." +
                std::to_string(acceptance_count) + ")");
  Criterion const &c = k_criteria[id - 1];
  return timed(id, c.title, c.limit, [&] { return c.run(opts); });
}

std::vector<CriterionReport> run_acceptance(AcceptanceOptions const &opts)
{
  std::vector<CriterionReport> out;
  for (unsigned id = 1; id <= acceptance_count; ++id)
    out.push_back(run_criterion(id, opts));
  return out;
}

CriterionReport run_flip_lower_bound(AcceptanceOptions const &opts)
{
  return timed(0, "no word of length <= 49 over {a,b,c} equals c0", 600.0, [&] {
    SearchResult const r = search(flip_search_config(opts));
    std::ostringstream os;
    os << to_string(r.status);
    if (r.status == SearchStatus::found)
      os << "; shortest word has length " << r.word.size()
         << (r.shortest ? " (complete ball, minimum over all words of length <= 50)" : "");
    else if (r.status == SearchStatus::budget_exceeded)
      os << "; bound not established within " << opts.search_budget << " bytes";
    bool const ok = r.status == SearchStatus::found && r.certified && r.shortest && r.word.size() == 50;
    return Outcome{ok, os.str()};
  });
}

} // namespace gatecalc
