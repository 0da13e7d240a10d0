#include "schubert/classification.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "schubert/error.hpp"
#include "schubert/linking_graph.hpp"
#include "schubert/parallel.hpp"
#include "schubert/transposition.hpp"
#include "schubert/union_find.hpp"

namespace schubert {

std::vector<std::uint32_t> Classification::class_of_rank() const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(factorial(n)), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& w : classes[c]) out[static_cast<std::size_t>(lex_rank(w))] = static_cast<std::uint32_t>(c);
  return out;
}

Classification classify_all(int n, const ClassifyOptions& options) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
  if (n > options.max_n)
    throw ResourceLimit("classification of S_" + std::to_string(n) + " exceeds the cap n <= " +
                        std::to_string(options.max_n));
  const std::vector<Permutation> perms = all_permutations(n);
  const std::uint64_t total = perms.size();

  // neighbours[k]: lex ranks reached from perms[k] by transposing one class.
  std::vector<std::vector<std::uint32_t>> neighbours(perms.size());
  parallel_ranges(total, resolve_jobs(options.jobs), [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const Permutation& w = perms[static_cast<std::size_t>(k)];
      const int s = linking_graph(w).class_count();
      for (int t = 1; t <= s; ++t) {
        const auto outcome = partial_transpose(w, {t});
        if (outcome.kind != OutcomeKind::SamePermutationClass) continue;
        neighbours[static_cast<std::size_t>(k)].push_back(static_cast<std::uint32_t>(lex_rank(*outcome.result)));
      }
    }
  });

  UnionFind sets(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (auto other : neighbours[k]) sets.unite(k, other);

  // Roots are minimal lex ranks, so perms[root] is the representative.
  std::map<std::size_t, std::vector<Permutation>> grouped;
  for (std::size_t k = 0; k < perms.size(); ++k) grouped[sets.find(k)].push_back(perms[k]);

  Classification out;
  out.n = n;
  for (auto& [root, members] : grouped) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& a, const auto& b) {
    const int da = Classification::dimension(a);
    const int db = Classification::dimension(b);
    if (da != db) return da < db;
    return a.front() < b.front();
  });
  return out;
}

std::vector<std::size_t> non_power_of_two_classes(const Classification& c) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    if (!std::has_single_bit(c.classes[k].size())) out.push_back(k);
  return out;
}

std::vector<KnownGap> known_gaps(const Classification& c, int jobs) {
  const std::vector<std::uint32_t> class_of = c.class_of_rank();
  const std::vector<Permutation> perms = all_permutations(c.n);
  std::vector<std::vector<KnownGap>> found(perms.size());

  parallel_ranges(perms.size(), resolve_jobs(jobs), [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const Permutation& w = perms[static_cast<std::size_t>(k)];
      const LinkingGraph g = linking_graph(w);
      const std::size_t m = g.vertices.size();
      std::vector<int> class_index(m);
      for (std::size_t t = 0; t < g.components.size(); ++t)
        for (int v : g.components[t]) class_index[static_cast<std::size_t>(v)] = static_cast<int>(t);

      std::map<Permutation, std::vector<PillarEntry>> partners;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        // Skip unions of whole classes; those are admissible.
        bool admissible = true;
        for (std::size_t a = 0; a < m && admissible; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (class_index[a] == class_index[b] && ((mask >> a & 1U) != (mask >> b & 1U))) {
              admissible = false;
              break;
            }
        if (admissible) continue;

        std::vector<int> indices;
        std::vector<PillarEntry> moved;
        for (std::size_t a = 0; a < m; ++a)
          if (mask >> a & 1U) {
            indices.push_back(static_cast<int>(a));
            moved.push_back(g.vertices[a]);
          }
        const auto outcome = partial_transpose_pillars(w, indices);
        if (outcome.kind != OutcomeKind::SamePermutationClass) continue;
        const Permutation& other = *outcome.result;
        if (!(w < other)) continue;
        if (class_of[static_cast<std::size_t>(lex_rank(w))] == class_of[static_cast<std::size_t>(lex_rank(other))])
          continue;
        partners.try_emplace(other, std::move(moved));
      }
      for (auto& [other, moved] : partners)
        found[static_cast<std::size_t>(k)].push_back({w, other, std::move(moved)});
    }
  });

  std::vector<KnownGap> out;
  for (auto& chunk : found)
    for (auto& gap : chunk) out.push_back(std::move(gap));
  return out;
}

}  // namespace schubert
