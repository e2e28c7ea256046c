#include "gatecalc/serialize.hpp"

namespace gatecalc
{

nlohmann::json gate_to_json(GroupElement const &f)
{
  nlohmann::json j;
  j["shift_power"] = f.shift;
  if (f.inert.is_identity()) {
    j["window_lo"] = 0;
    j["window_hi"] = -1;
    j["table"] = nlohmann::json::array();
    return j;
  }
  j["window_lo"] = f.inert.lo();
  j["window_hi"] = f.inert.hi();
  auto const t = f.inert.table();
  j["table"] = std::vector<std::uint32_t>(t.begin(), t.end());
  return j;
}

GroupElement gate_from_json(nlohmann::json const &j)
{
  try {
    int const shift = j.at("shift_power").get<int>();
    int const lo = j.at("window_lo").get<int>();
    int const hi = j.at("window_hi").get<int>();
    auto table = j.at("table").get<std::vector<std::uint32_t>>();

    GroupElement f;
    f.shift = shift;
    if (hi < lo) {
      if (!table.empty())
        throw Error("empty window with a non-empty table");
      return f;
    }
    auto const width = static_cast<unsigned>(hi - lo + 1);
    if (width > window_cap())
      throw WindowCapExceeded(width, window_cap());
    if (table.size() != (std::size_t{1} << width))
      throw Error("table has " + std::to_string(table.size()) + " entries, window needs " +
                  std::to_string(std::size_t{1} << width));
    f.inert = canonicalize(WindowRule{lo, hi, std::move(table)});
    return f;
  } catch (nlohmann::json::exception const &e) {
    throw Error(std::string("malformed gate record: ") + e.what());
  }
}

} // namespace gatecalc
