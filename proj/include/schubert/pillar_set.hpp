#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

/// A candidate set of pillar entries for S_n, kept in lexicographic order
/// (left to right in each row, rows top to bottom).
///
/// Construction enforces only the local bounds every pillar satisfies:
/// 1 <= row, col <= n-1, 1 <= value <= min(row, col), row + col - value < n,
/// and distinct positions. Whether some permutation realizes the set is
/// decided by reconstruct().
class PillarSet {
 public:
  PillarSet(int n, std::vector<PillarEntry> pillars);

  /// The pillar set of r(w).
  static PillarSet of(const Permutation& w);

  /// Parses "n=9; 2,2=1; 6,4=2; 6,7=4". Throws ParseError or
  /// InvalidPillarSet.
  static PillarSet parse(std::string_view text);

  int size() const { return n_; }
  const std::vector<PillarEntry>& pillars() const { return pillars_; }
  bool empty() const { return pillars_.empty(); }

  std::string to_string() const;

  friend bool operator==(const PillarSet&, const PillarSet&) = default;

 private:
  int n_;
  std::vector<PillarEntry> pillars_;
};

/// One step of the reconstruction: the dots placed for pillar `pillar`
/// (an index into PillarSet::pillars(), or -1 for the final fill step).
struct ReconstructionStep {
  int pillar = -1;
  int already_inside = 0;  // dots found inside NW at the start of the step
  std::vector<std::pair<int, int>> dots;  // (row, column), in placement order
};

struct Reconstruction {
  Permutation permutation;
  /// k_i, the number of dots added at step i (one per pillar).
  std::vector<int> increments;
  std::vector<ReconstructionStep> steps;
};

/// Rebuilds the unique w whose pillar set is `ps`. Step i counts the L dots
/// already inside the north-west region of pillar i and adds K_i - L dots on
/// its free lines, anti-diagonally starting from the lowest free row and the
/// rightmost free column; the final step fills the whole grid the same way.
/// Any impossible request, and any mismatch between the pillars of the
/// result and `ps`, throws InvalidPillarSet.
Reconstruction reconstruct_with_trace(const PillarSet& ps);
Permutation reconstruct(const PillarSet& ps);

/// K_i recomputed from the increments: k_i plus the sum of k_j over earlier
/// pillars j lying weakly north-west of pillar i.
std::vector<int> values_from_increments(const PillarSet& ps, const std::vector<int>& increments);

/// codim C_w = sum_i k_i (K_i + n - p_i - q_i).
int codim_from_pillars(const PillarSet& ps);

/// trc_t(w): the permutation whose pillar set is the union of the first t
/// linked classes of w. Throws IndexOutOfRange for t outside 1..s and
/// InvalidPillarSet when no permutation has that pillar set.
Permutation truncate(const Permutation& w, int t);

/// The permutation with the single pillar r_ij = a, written out directly:
/// (n, ..., n+1-i+a, j, ..., j-a+1, n-i+a, ..., j+1, j-a, ..., 1).
Permutation single_pillar_permutation(int i, int j, int a, int n);

}  // namespace schubert
