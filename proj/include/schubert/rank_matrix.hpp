#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// Largest n for which rank matrices are supported (entries are 16-bit).
inline constexpr int kMaxRank = 255;

/// An entry r_ij of a rank matrix singled out by a local pattern. Used for
/// both pillar and essential entries. Ordered lexicographically by position.
struct PillarEntry {
  int row = 0;
  int col = 0;
  int value = 0;

  friend bool operator==(const PillarEntry&, const PillarEntry&) = default;
  friend std::strong_ordering operator<=>(const PillarEntry& a, const PillarEntry& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    if (auto c = a.col <=> b.col; c != 0) return c;
    return a.value <=> b.value;
  }
};

/// The (n+1)x(n+1) matrix r_ij = dim(V_i ∩ C^j), 0 <= i, j <= n.
class RankMatrix {
 public:
  /// Takes a full (n+1)x(n+1) table and checks every rank-matrix axiom;
  /// throws InvalidRankMatrix on failure.
  static RankMatrix from_entries(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * (n_ + 1) + j)];
  }

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  friend RankMatrix rank_matrix(const Permutation& w);
  friend RankMatrix transpose(const RankMatrix& r);
  RankMatrix(int n, std::vector<std::int16_t> entries) : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<std::int16_t> entries_;
};

/// r_ij = #{k <= i : w(k) <= j}.
RankMatrix rank_matrix(const Permutation& w);

/// Recovers w from the local 2x2 patterns a a / a a+1. Throws
/// InvalidRankMatrix if an axiom fails or the dots are not a permutation.
Permutation permutation_from_rank_matrix(const RankMatrix& r);

/// Empty when every axiom holds, otherwise a description of the first
/// violation found.
std::string rank_matrix_violation(const RankMatrix& r);

RankMatrix transpose(const RankMatrix& r);

/// Pillar entries in lexicographic order, detected by
/// w(i) <= j < w(i+1) and w^-1(j) <= i < w^-1(j+1).
std::vector<PillarEntry> pillar_entries(const Permutation& w);
std::vector<PillarEntry> pillar_entries(const RankMatrix& r);

/// Essential entries in lexicographic order, detected by
/// w(i) > j >= w(i+1) and w^-1(j) > i >= w^-1(j+1).
std::vector<PillarEntry> essential_entries(const Permutation& w);
std::vector<PillarEntry> essential_entries(const RankMatrix& r);

/// Text table of the matrix. Cells holding a dot of the permutation carry a
/// leading '*', pillar entries render as "(v)" and essential ones as "[v]".
std::string render(const RankMatrix& r);

}  // namespace schubert
