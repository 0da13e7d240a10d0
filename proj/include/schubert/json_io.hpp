#pragma once

#include <json.hpp>

#include "schubert/classification.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pillar_set.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

/// {"n": 4, "values": [4, 2, 3, 1]}
nlohmann::json to_json(const Permutation& w);
Permutation permutation_from_json(const nlohmann::json& j);

/// {"n": 4, "entries": [[...], ...]} with the full (n+1)x(n+1) table.
nlohmann::json to_json(const RankMatrix& r);
RankMatrix rank_matrix_from_json(const nlohmann::json& j);

/// {"row": 2, "col": 2, "value": 1}
nlohmann::json to_json(const PillarEntry& p);
nlohmann::json to_json(const std::vector<PillarEntry>& entries);

/// {"n": 9, "pillars": [{"row": 2, "col": 2, "value": 1}, ...]}
nlohmann::json to_json(const PillarSet& ps);
PillarSet pillar_set_from_json(const nlohmann::json& j);

}  // namespace schubert
