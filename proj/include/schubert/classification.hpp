#pragma once

#include <cstdint>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

struct ClassifyOptions {
  int jobs = 0;   // 0: hardware concurrency
  int max_n = 8;  // larger n raises ResourceLimit
};

/// Partition of S_n into classes of permutations related by chains of
/// admissible partial transpositions. Members of a class are sorted, the
/// first one is its representative, and classes are sorted by
/// (dimension, representative).
struct Classification {
  int n = 0;
  std::vector<std::vector<Permutation>> classes;

  static int dimension(const std::vector<Permutation>& cls) { return cls.front().length(); }

  /// Index into `classes` for each permutation, by lex_rank.
  std::vector<std::uint32_t> class_of_rank() const;
};

/// Deterministic for any worker count: each worker computes the
/// single-class transpositions of a contiguous block of S_n and the results
/// are merged in index order by union-find.
Classification classify_all(int n, const ClassifyOptions& options = {});

/// Indices of classes whose size is not a power of two.
std::vector<std::size_t> non_power_of_two_classes(const Classification& c);

/// Two permutations of equal length whose pillar sets differ by transposing a
/// subset of pillars that is not a union of linked classes, and which the
/// classification keeps apart. These are candidates for coincidences of
/// tangent cones beyond what admissible transpositions explain.
struct KnownGap {
  Permutation first;   // lexicographically smaller
  Permutation second;
  std::vector<PillarEntry> transposed;  // pillars of `first` that were moved
};

std::vector<KnownGap> known_gaps(const Classification& c, int jobs = 0);

}  // namespace schubert
