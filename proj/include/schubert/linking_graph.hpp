#pragma once

#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/pillar_set.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

/// Graph on the pillar entries of a rank matrix. Two pillars are related
/// when their intervals [min(i,j), max(i,j)] share an interior point; the
/// connected components are the linked classes L_1, ..., L_s.
struct LinkingGraph {
  std::vector<PillarEntry> vertices;       // lexicographic order
  std::vector<std::pair<int, int>> edges;  // (a, b) with a < b
  /// Vertex indices per class, ascending. Classes are sorted by the
  /// endpoints of their intervals, left to right.
  std::vector<std::vector<int>> components;
  /// The interval I_t spanned by each class.
  std::vector<std::pair<int, int>> intervals;

  int class_count() const { return static_cast<int>(components.size()); }
};

/// [min(i,j), max(i,j)].
std::pair<int, int> pillar_interval(const PillarEntry& p);

bool related(const PillarEntry& a, const PillarEntry& b);

LinkingGraph linking_graph(const PillarSet& ps);
LinkingGraph linking_graph(const Permutation& w);

}  // namespace schubert
