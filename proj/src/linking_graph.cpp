#include "schubert/linking_graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "schubert/union_find.hpp"

namespace schubert {

std::pair<int, int> pillar_interval(const PillarEntry& p) {
  return {std::min(p.row, p.col), std::max(p.row, p.col)};
}

bool related(const PillarEntry& a, const PillarEntry& b) {
  const auto [alo, ahi] = pillar_interval(a);
  const auto [blo, bhi] = pillar_interval(b);
  // Closed integer intervals share an interior point iff their overlap has
  // positive length.
  return std::max(alo, blo) < std::min(ahi, bhi);
}

LinkingGraph linking_graph(const PillarSet& ps) {
  LinkingGraph g;
  g.vertices = ps.pillars();
  const std::size_t m = g.vertices.size();
  UnionFind sets(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (related(g.vertices[a], g.vertices[b])) {
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        sets.unite(a, b);
      }

  std::map<std::size_t, std::vector<int>> by_root;
  for (std::size_t a = 0; a < m; ++a) by_root[sets.find(a)].push_back(static_cast<int>(a));

  struct Entry {
    std::pair<int, int> interval;
    std::vector<int> members;
  };
  std::vector<Entry> classes;
  for (auto& [root, members] : by_root) {
    std::pair<int, int> iv = pillar_interval(g.vertices[static_cast<std::size_t>(members.front())]);
    for (int v : members) {
      const auto [lo, hi] = pillar_interval(g.vertices[static_cast<std::size_t>(v)]);
      iv.first = std::min(iv.first, lo);
      iv.second = std::max(iv.second, hi);
    }
    classes.push_back({iv, std::move(members)});
  }
  std::sort(classes.begin(), classes.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.interval, a.members.front()) < std::tie(b.interval, b.members.front());
  });
  for (auto& c : classes) {
    g.intervals.push_back(c.interval);
    g.components.push_back(std::move(c.members));
  }
  return g;
}

LinkingGraph linking_graph(const Permutation& w) { return linking_graph(PillarSet::of(w)); }

}  // namespace schubert
