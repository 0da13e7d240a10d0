#include "schubert/transposition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::SamePermutationClass:
      return "SamePermutationClass";
    case OutcomeKind::DifferentLength:
      return "DifferentLength";
    case OutcomeKind::NoRankMatrix:
      return "NoRankMatrix";
  }
  return "?";
}

PillarSet transpose_pillars(const PillarSet& ps, const std::vector<int>& pillar_indices) {
  std::vector<PillarEntry> moved = ps.pillars();
  std::vector<bool> done(moved.size(), false);
  for (int idx : pillar_indices) {
    if (idx < 0 || idx >= static_cast<int>(moved.size()))
      throw IndexOutOfRange("pillar index " + std::to_string(idx) + " out of range");
    if (done[static_cast<std::size_t>(idx)]) continue;
    done[static_cast<std::size_t>(idx)] = true;
    auto& p = moved[static_cast<std::size_t>(idx)];
    std::swap(p.row, p.col);
  }
  return PillarSet(ps.size(), std::move(moved));
}

TranspositionOutcome partial_transpose_pillars(const Permutation& w,
                                               const std::vector<int>& pillar_indices) {
  const PillarSet ps = PillarSet::of(w);
  TranspositionOutcome out;
  try {
    const Permutation result = reconstruct(transpose_pillars(ps, pillar_indices));
    out.kind = result.length() == w.length() ? OutcomeKind::SamePermutationClass
                                             : OutcomeKind::DifferentLength;
    out.result = result;
  } catch (const InvalidPillarSet& e) {
    out.kind = OutcomeKind::NoRankMatrix;
    out.reason = e.what();
  }
  return out;
}

TranspositionOutcome partial_transpose(const Permutation& w, const std::vector<int>& classes) {
  const LinkingGraph g = linking_graph(w);
  std::vector<int> indices;
  for (int t : classes) {
    if (t < 1 || t > g.class_count())
      throw IndexOutOfRange("class index " + std::to_string(t) + " outside 1.." +
                            std::to_string(g.class_count()));
    const auto& members = g.components[static_cast<std::size_t>(t - 1)];
    indices.insert(indices.end(), members.begin(), members.end());
  }
  return partial_transpose_pillars(w, indices);
}

ElementaryTrace elementary_partial_transpose_trace(const Permutation& w, int t) {
  const LinkingGraph g = linking_graph(w);
  const int s = g.class_count();
  if (t < 1 || t > s)
    throw IndexOutOfRange("class index " + std::to_string(t) + " outside 1.." + std::to_string(s));
  const int n = w.size();

  int a = 0;
  for (int c = 0; c < t; ++c) a = std::max(a, g.intervals[static_cast<std::size_t>(c)].second);
  int b = n;
  for (int c = t; c < s; ++c)
    for (int v : g.components[static_cast<std::size_t>(c)]) {
      const auto& p = g.vertices[static_cast<std::size_t>(v)];
      if (p.row == p.col && p.row <= a) continue;
      b = std::min(b, std::min(p.row, p.col));
    }

  ElementaryTrace trace{w, t, a, b, std::vector<int>(static_cast<std::size_t>(n), 0), {}, w};
  std::vector<int> next(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    const int v = w(k);
    if (k <= a && v <= a) {
      trace.kept[static_cast<std::size_t>(k - 1)] = v;
      next[static_cast<std::size_t>(v - 1)] = k;
    }
  }
  for (int k = 1; k <= n; ++k) {
    const int v = w(k);
    if (k > b && v > b) {
      trace.kept[static_cast<std::size_t>(k - 1)] = v;
      if (next[static_cast<std::size_t>(k - 1)] != 0)
        throw Error("elementary transposition: blocks overlap at position " + std::to_string(k));
      next[static_cast<std::size_t>(k - 1)] = v;
    }
  }
  trace.inverted = next;

  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : next) used[static_cast<std::size_t>(v)] = v != 0;
  int value = n;
  for (auto& slot : next) {
    if (slot != 0) continue;
    while (used[static_cast<std::size_t>(value)]) --value;
    slot = value;
    used[static_cast<std::size_t>(value)] = true;
  }
  trace.result = Permutation(std::move(next));
  return trace;
}

Permutation elementary_partial_transpose(const Permutation& w, int t) {
  return elementary_partial_transpose_trace(w, t).result;
}

std::string ElementaryTrace::to_string() const {
  const int n = source.size();
  auto word = [&](const std::vector<int>& v) {
    std::ostringstream out;
    for (int k = 0; k < n; ++k) {
      if (k) out << ' ';
      if (k == transposed_bound) out << "| ";
      if (v[static_cast<std::size_t>(k)] == 0)
        out << '.';
      else
        out << v[static_cast<std::size_t>(k)];
    }
    return out.str();
  };
  std::vector<int> src(source.values().begin(), source.values().end());
  std::vector<int> res(result.values().begin(), result.values().end());
  return word(src) + " -> " + word(kept) + " -> " + word(inverted) + " -> " + word(res);
}

std::vector<Permutation> cone_class(const Permutation& w) {
  std::set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    const Permutation u = queue.front();
    queue.pop_front();
    const LinkingGraph g = linking_graph(u);
    const int s = g.class_count();
    if (s > 24) throw ResourceLimit("too many linked classes for an exhaustive closure");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<int> classes;
      for (int c = 0; c < s; ++c)
        if (mask >> c & 1U) classes.push_back(c + 1);
      const auto outcome = partial_transpose(u, classes);
      if (outcome.kind != OutcomeKind::SamePermutationClass) continue;
      if (seen.insert(*outcome.result).second) queue.push_back(*outcome.result);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace schubert
