#pragma once

#include <json.hpp>

#include "gates.hpp"

/**
 * @file serialize.hpp
 * @brief Gate records {shift_power, window_lo, window_hi, table}.
 *
 * Tables list images MSB-first over [window_lo, window_hi]. The identity inert
 * part is written with window_lo = 0, window_hi = -1 and an empty table.
 */

namespace gatecalc
{

nlohmann::json gate_to_json(GroupElement const &f);

/// Validates the record and canonicalizes; throws Error on malformed input.
GroupElement gate_from_json(nlohmann::json const &j);

} // namespace gatecalc
