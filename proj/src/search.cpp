#include "gatecalc/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <limits>
#include <memory>
#include <optional>

namespace gatecalc
{

namespace
{

using Table = std::array<std::uint8_t, 256>;

std::uint64_t mix(std::uint64_t h)
{
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t hash_bytes(std::uint8_t const *p, std::size_t n)
{
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
  while (n >= 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, p, 8);
    h = mix(h ^ chunk);
    p += 8;
    n -= 8;
  }
  std::uint64_t tail = 0;
  std::memcpy(&tail, p, n);
  return mix(h ^ tail ^ (std::uint64_t{n} << 56));
}

class Packer
{
public:
  explicit Packer(unsigned width)
    : _width(width), _entries(1u << width), _bytes((width * _entries + 7u) / 8u)
  {}

  unsigned entries() const { return _entries; }
  unsigned bytes() const { return _bytes; }

  void pack(Table const &t, std::uint8_t *out) const
  {
    std::memset(out, 0, _bytes);
    unsigned bit = 0;
    for (unsigned i = 0; i < _entries; ++i)
      for (unsigned b = 0; b < _width; ++b, ++bit)
        if ((t[i] >> b) & 1u)
          out[bit >> 3] |= static_cast<std::uint8_t>(1u << (bit & 7u));
  }

  void unpack(std::uint8_t const *in, Table &t) const
  {
    unsigned bit = 0;
    for (unsigned i = 0; i < _entries; ++i) {
      std::uint8_t v = 0;
      for (unsigned b = 0; b < _width; ++b, ++bit)
        v |= static_cast<std::uint8_t>(((in[bit >> 3] >> (bit & 7u)) & 1u) << b);
      t[i] = v;
    }
  }

private:
  unsigned _width;
  unsigned _entries;
  unsigned _bytes;
};

// Visited set: packed tables with parent links, stored in fixed-size chunks.
class Ball
{
public:
  static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

  Ball(unsigned packed_bytes, std::uint64_t budget)
    : _packed(packed_bytes), _record(packed_bytes + 5u), _budget(budget)
  {}

  std::uint64_t size() const { return _count; }
  std::uint64_t bytes() const { return _chunks.size() * chunk_bytes() + _slots.size() * 4u; }

  std::uint8_t const *state(std::uint32_t i) const { return record(i); }

  std::uint32_t parent(std::uint32_t i) const
  {
    std::uint32_t p;
    std::memcpy(&p, record(i) + _packed, 4);
    return p;
  }

  unsigned generator(std::uint32_t i) const { return record(i)[_packed + 4]; }

  std::uint32_t find(std::uint8_t const *packed) const
  {
    if (_slots.empty())
      return none;
    std::uint64_t const mask = _slots.size() - 1u;
    for (std::uint64_t s = hash_bytes(packed, _packed) & mask;; s = (s + 1u) & mask) {
      std::uint32_t const v = _slots[s];
      if (v == 0)
        return none;
      if (std::memcmp(record(v - 1u), packed, _packed) == 0)
        return v - 1u;
    }
  }

  enum class Insert { added, present, over_budget };

  Insert insert(std::uint8_t const *packed, std::uint32_t parent, unsigned gen)
  {
    if ((_count + 1u) * 4u > _slots.size() * 3u && !grow_slots())
      return Insert::over_budget;

    std::uint64_t const mask = _slots.size() - 1u;
    std::uint64_t s = hash_bytes(packed, _packed) & mask;
    for (;; s = (s + 1u) & mask) {
      std::uint32_t const v = _slots[s];
      if (v == 0)
        break;
      if (std::memcmp(record(v - 1u), packed, _packed) == 0)
        return Insert::present;
    }

    if (_count == std::uint64_t{none} - 1u)
      return Insert::over_budget;
    if (_count % chunk_states == 0) {
      if (bytes() + chunk_bytes() > _budget)
        return Insert::over_budget;
      _chunks.push_back(std::make_unique<std::uint8_t[]>(chunk_bytes()));
    }
    auto const index = static_cast<std::uint32_t>(_count++);
    std::uint8_t *r = record(index);
    std::memcpy(r, packed, _packed);
    std::memcpy(r + _packed, &parent, 4);
    r[_packed + 4] = static_cast<std::uint8_t>(gen);
    _slots[s] = index + 1u;
    return Insert::added;
  }

private:
  static constexpr std::uint64_t chunk_states = std::uint64_t{1} << 16;

  std::uint64_t chunk_bytes() const { return chunk_states * _record; }

  std::uint8_t *record(std::uint32_t i) const
  { return _chunks[i / chunk_states].get() + (i % chunk_states) * _record; }

  bool grow_slots()
  {
    std::uint64_t const cap = _slots.empty() ? 1024u : _slots.size() * 2u;
    if (bytes() + cap * 4u > _budget)
      return false;
    std::vector<std::uint32_t> slots(cap, 0);
    std::uint64_t const mask = cap - 1u;
    for (std::uint64_t i = 0; i < _count; ++i) {
      auto const idx = static_cast<std::uint32_t>(i);
      std::uint64_t s = hash_bytes(record(idx), _packed) & mask;
      while (slots[s] != 0)
        s = (s + 1u) & mask;
      slots[s] = idx + 1u;
    }
    _slots = std::move(slots);
    return true;
  }

  unsigned _packed;
  unsigned _record;
  std::uint64_t _budget;
  std::uint64_t _count = 0;
  std::vector<std::unique_ptr<std::uint8_t[]>> _chunks;
  std::vector<std::uint32_t> _slots;
};

Table embed(InertGate const &g, int lo, unsigned width)
{
  Table t{};
  for (std::uint32_t x = 0; x < (1u << width); ++x)
    t[x] = static_cast<std::uint8_t>(g.apply_embedded(x, lo, width));
  return t;
}

std::vector<unsigned> word_of(Ball const &ball, std::uint32_t i)
{
  std::vector<unsigned> w;
  for (; i != 0; i = ball.parent(i))
    w.push_back(ball.generator(i));
  std::reverse(w.begin(), w.end());
  return w;
}

GroupElement evaluate_word(std::vector<unsigned> const &word, std::vector<GroupElement> const &gens)
{
  GroupElement product = identity();
  for (unsigned x : word)
    product = compose(product, gens[x]);
  return product;
}

} // anonymous namespace

char const *to_string(SearchStrategy s)
{ return s == SearchStrategy::bfs ? "bfs" : "mitm"; }

char const *to_string(SearchStatus s)
{
  switch (s) {
    case SearchStatus::found:
      return "Found";
    case SearchStatus::not_found_within_depth:
      return "NotFoundWithinDepth";
    default:
      return "BudgetExceeded";
  }
}

SearchStrategy parse_strategy(std::string_view text)
{
  if (text == "bfs")
    return SearchStrategy::bfs;
  if (text == "mitm")
    return SearchStrategy::mitm;
  throw Error("unknown search strategy '" + std::string(text) + "' (expected bfs or mitm)");
}

SearchResult search(SearchConfig const &cfg)
{
  auto const start = std::chrono::steady_clock::now();

  if (cfg.max_depth < 1)
    throw Error("search depth must be at least 1");
  if (cfg.generators.empty())
    throw Error("search needs at least one generator");
  if (cfg.generators.size() > 255)
    throw Error("search supports at most 255 generators");
  for (auto const &g : cfg.generators)
    if (!g.is_inert())
      throw Error("search generators must be inert; " + describe(g) + " shifts the configuration");
  if (!cfg.target.is_inert())
    throw Error("search target must be inert");

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  auto widen = [&](InertGate const &g) {
    if (!g.is_identity()) {
      lo = std::min(lo, g.lo());
      hi = std::max(hi, g.hi());
    }
  };
  for (auto const &g : cfg.generators)
    widen(g.inert);
  widen(cfg.target.inert);
  if (lo > hi)
    lo = hi = 0;
  auto const width = static_cast<unsigned>(hi - lo + 1);
  if (width > search_window_limit)
    throw Error("common search window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "] is wider than " + std::to_string(search_window_limit));

  Packer const packer(width);
  unsigned const n = packer.entries();
  std::vector<Table> gens;
  for (auto const &g : cfg.generators)
    gens.push_back(embed(g.inert, lo, width));
  Table const target = embed(cfg.target.inert, lo, width);

  SearchResult result;
  result.stats.window_lo = lo;
  result.stats.window_hi = hi;
  auto finish = [&](Ball const &ball) {
    result.stats.states = ball.size();
    result.stats.bytes = ball.bytes();
    result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.status == SearchStatus::found) {
      result.certified = evaluate_word(result.word, cfg.generators) == cfg.target;
      if (!result.certified)
        throw Error("internal error: search result failed certification");
      result.shortest = true;
    }
    return result;
  };

  Ball ball(packer.bytes(), cfg.memory_budget);
  std::vector<std::uint8_t> packed(packer.bytes());
  std::vector<std::uint8_t> target_packed(packer.bytes());
  packer.pack(target, target_packed.data());

  Table t{};
  for (unsigned x = 0; x < n; ++x)
    t[x] = static_cast<std::uint8_t>(x);
  packer.pack(t, packed.data());
  if (ball.insert(packed.data(), Ball::none, 0) == Ball::Insert::over_budget) {
    result.status = SearchStatus::budget_exceeded;
    return finish(ball);
  }
  result.stats.layer_sizes.push_back(1);
  if (packed == target_packed) {
    result.status = SearchStatus::found;
    return finish(ball);
  }

  bool const bfs = cfg.strategy == SearchStrategy::bfs;
  std::uint64_t layer_begin = 0;
  Table next{};
  for (unsigned depth = 1; depth <= cfg.max_depth; ++depth) {
    std::uint64_t const layer_end = ball.size();
    for (std::uint64_t i = layer_begin; i < layer_end; ++i) {
      auto const parent = static_cast<std::uint32_t>(i);
      packer.unpack(ball.state(parent), t);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        for (unsigned x = 0; x < n; ++x)
          next[x] = t[gens[j][x]];
        packer.pack(next, packed.data());
        auto const r = ball.insert(packed.data(), parent, static_cast<unsigned>(j));
        if (r == Ball::Insert::over_budget) {
          result.status = SearchStatus::budget_exceeded;
          return finish(ball);
        }
        if (bfs && r == Ball::Insert::added && packed == target_packed) {
          result.status = SearchStatus::found;
          result.word = word_of(ball, static_cast<std::uint32_t>(ball.size() - 1u));
          return finish(ball);
        }
      }
    }
    layer_begin = layer_end;
    result.stats.layer_sizes.push_back(ball.size() - layer_end);
    result.stats.depth_completed = depth;
    if (ball.size() == layer_end) {
      result.stats.ball_closed = true;
      break;
    }
  }

  if (bfs) {
    result.status = SearchStatus::not_found_within_depth;
    return finish(ball);
  }

  // target = g o h with g, h in the ball: probe g = target o h^-1
  std::vector<std::uint64_t> layer_end;
  std::uint64_t acc = 0;
  for (auto s : result.stats.layer_sizes)
    layer_end.push_back(acc += s);
  auto depth_of = [&](std::uint64_t i) {
    return static_cast<unsigned>(std::upper_bound(layer_end.begin(), layer_end.end(), i) -
                                 layer_end.begin());
  };

  std::optional<std::vector<unsigned>> best;
  Table inv{};
  for (std::uint64_t i = 0; i < ball.size(); ++i) {
    unsigned const dh = depth_of(i);
    if (best && dh > best->size())
      break;
    auto const h = static_cast<std::uint32_t>(i);
    packer.unpack(ball.state(h), t);
    for (unsigned x = 0; x < n; ++x)
      inv[t[x]] = static_cast<std::uint8_t>(x);
    for (unsigned x = 0; x < n; ++x)
      next[x] = target[inv[x]];
    packer.pack(next, packed.data());
    std::uint32_t const g = ball.find(packed.data());
    if (g == Ball::none)
      continue;
    if (best && depth_of(g) + dh > best->size())
      continue;
    std::vector<unsigned> w = word_of(ball, g);
    auto const tail = word_of(ball, h);
    w.insert(w.end(), tail.begin(), tail.end());
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best))
      best = std::move(w);
  }

  if (best) {
    result.status = SearchStatus::found;
    result.word = std::move(*best);
  } else {
    result.status = SearchStatus::not_found_within_depth;
  }
  return finish(ball);
}

GateExpr word_expr(std::vector<unsigned> const &word, std::vector<std::string> const &names)
{
  GateExpr e;
  for (unsigned x : word) {
    if (x >= names.size())
      throw Error("generator index " + std::to_string(x) + " has no name");
    e *= GateExpr::atom(names[x]);
  }
  return e;
}

std::uint64_t parse_byte_count(std::string_view text)
{
  if (text.empty())
    throw Error("empty byte count");
  std::uint64_t mult = 1;
  switch (text.back()) {
    case 'k':
    case 'K':
      mult = std::uint64_t{1} << 10;
      break;
    case 'm':
    case 'M':
      mult = std::uint64_t{1} << 20;
      break;
    case 'g':
    case 'G':
      mult = std::uint64_t{1} << 30;
      break;
    default:
      break;
  }
  std::string_view digits = mult == 1 ? text : text.substr(0, text.size() - 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("invalid byte count '" + std::string(text) + "'");
  std::uint64_t v = 0;
  for (char c : digits) {
    if (v > (std::numeric_limits<std::uint64_t>::max() - 9u) / 10u)
      throw Error("byte count out of range '" + std::string(text) + "'");
    v = v * 10u + static_cast<std::uint64_t>(c - '0');
  }
  if (v > std::numeric_limits<std::uint64_t>::max() / mult)
    throw Error("byte count out of range '" + std::string(text) + "'");
  return v * mult;
}

} // namespace gatecalc
