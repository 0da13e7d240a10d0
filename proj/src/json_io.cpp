#include "schubert/json_io.hpp"

#include "schubert/error.hpp"

namespace schubert {

nlohmann::json to_json(const Permutation& w) {
  return {{"n", w.size()}, {"values", std::vector<int>(w.values().begin(), w.values().end())}};
}

Permutation permutation_from_json(const nlohmann::json& j) {
  try {
    auto values = j.at("values").get<std::vector<int>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(values.size()))
      throw ParseError("permutation JSON: n does not match the number of values");
    return Permutation(std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("permutation JSON: ") + e.what());
  }
}

nlohmann::json to_json(const RankMatrix& r) { return {{"n", r.size()}, {"entries", r.to_rows()}}; }

RankMatrix rank_matrix_from_json(const nlohmann::json& j) {
  try {
    return RankMatrix::from_entries(j.at("entries").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rank matrix JSON: ") + e.what());
  }
}

nlohmann::json to_json(const PillarEntry& p) { return {{"row", p.row}, {"col", p.col}, {"value", p.value}}; }

nlohmann::json to_json(const std::vector<PillarEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : entries) out.push_back(to_json(p));
  return out;
}

nlohmann::json to_json(const PillarSet& ps) { return {{"n", ps.size()}, {"pillars", to_json(ps.pillars())}}; }

PillarSet pillar_set_from_json(const nlohmann::json& j) {
  try {
    std::vector<PillarEntry> pillars;
    for (const auto& p : j.at("pillars"))
      pillars.push_back({p.at("row").get<int>(), p.at("col").get<int>(), p.at("value").get<int>()});
    return PillarSet(j.at("n").get<int>(), std::move(pillars));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pillar set JSON: ") + e.what());
  }
}

}  // namespace schubert
