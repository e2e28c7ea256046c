#include <doctest.h>

#include "../support.hpp"
#include "gatecalc/serialize.hpp"

using namespace gatecalc;

TEST_CASE("gate records round trip")
{
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement f = from_inert(testsupport::random_gate(rng, 4));
    f.shift = trial % 5 - 2;
    nlohmann::json const j = gate_to_json(f);
    CHECK(gate_from_json(j) == f);
    CHECK(gate_from_json(nlohmann::json::parse(j.dump())) == f);
  }
}

TEST_CASE("gate record layout")
{
  nlohmann::json const j = gate_to_json(make_eca(57));
  CHECK(j["shift_power"] == 0);
  CHECK(j["window_lo"] == -1);
  CHECK(j["window_hi"] == 1);
  CHECK(j["table"] == nlohmann::json::array({2, 1, 0, 3, 6, 7, 4, 5}));

  nlohmann::json const s = gate_to_json(make_sigma(-1));
  CHECK(s["shift_power"] == -1);
  CHECK(s["window_lo"] == 0);
  CHECK(s["window_hi"] == -1);
  CHECK(s["table"].empty());
}

TEST_CASE("non-canonical records are canonicalized")
{
  nlohmann::json const j{{"shift_power", 0}, {"window_lo", 0}, {"window_hi", 1}, {"table", {2, 3, 0, 1}}};
  CHECK(gate_from_json(j) == make_flip());
}

TEST_CASE("malformed records")
{
  using nlohmann::json;
  CHECK_THROWS_AS(gate_from_json(json{{"shift_power", 0}}), Error);
  CHECK_THROWS_AS(gate_from_json(json{{"shift_power", 0}, {"window_lo", 0}, {"window_hi", 0}, {"table", {0, 0}}}), Error);
  CHECK_THROWS_AS(gate_from_json(json{{"shift_power", 0}, {"window_lo", 0}, {"window_hi", 1}, {"table", {0, 1}}}), Error);
  CHECK_THROWS_AS(gate_from_json(json{{"shift_power", 0}, {"window_lo", 0}, {"window_hi", -1}, {"table", {0}}}), Error);
  CHECK_THROWS_AS(gate_from_json(json{{"shift_power", "x"}, {"window_lo", 0}, {"window_hi", -1}, {"table", json::array()}}), Error);
}
