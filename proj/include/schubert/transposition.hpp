#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/linking_graph.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pillar_set.hpp"

namespace schubert {

enum class OutcomeKind {
  SamePermutationClass,  // realized by a permutation of the same length
  DifferentLength,       // realized, but the length changed
  NoRankMatrix,          // no permutation has the transposed pillar set
};

const char* to_string(OutcomeKind kind);

struct TranspositionOutcome {
  OutcomeKind kind = OutcomeKind::NoRankMatrix;
  std::optional<Permutation> result;
  std::string reason;  // why reconstruction rejected, for NoRankMatrix
};

/// Moves every listed pillar (0-based index into ps.pillars()) from (i,j)
/// to (j,i), keeping its value. Throws IndexOutOfRange for a bad index and
/// InvalidPillarSet if two pillars land on one cell.
PillarSet transpose_pillars(const PillarSet& ps, const std::vector<int>& pillar_indices);

/// Admissible partial transposition: transposes the whole linked classes
/// listed (1-based, in the left-to-right class order) and classifies the
/// result. Throws IndexOutOfRange for a class outside 1..s.
TranspositionOutcome partial_transpose(const Permutation& w, const std::vector<int>& classes);

/// Transposes an arbitrary subset of pillars, admissible or not. Exists to
/// reproduce the failure modes of non-admissible transpositions.
TranspositionOutcome partial_transpose_pillars(const Permutation& w,
                                               const std::vector<int>& pillar_indices);

/// The stages of the direct three-step computation of trp_t(w). Each stage is
/// a one-line word where 0 marks a position not yet filled.
struct ElementaryTrace {
  Permutation source;
  int t = 0;
  int transposed_bound = 0;  // A: rows and columns 1..A form the transposed block
  int fixed_bound = 0;       // B: rows and columns B+1..n form the fixed block
  std::vector<int> kept;
  std::vector<int> inverted;
  Permutation result;

  /// "2 3 | 4 1 -> 2 . | 4 . -> . 1 | 4 . -> 3 1 | 4 2", with the bar after
  /// position A.
  std::string to_string() const;
};

/// trp_t(w), the permutation whose pillars are those of w with the classes
/// L_1, ..., L_t transposed, computed without reconstruction:
///  1. keep the dots of w inside the block [1..A]x[1..A] and inside
///     [B+1..n]x[B+1..n], where A is the right end of I_1 ∪ ... ∪ I_t and B is
///     the left end of the remaining classes (diagonal pillars inside [1..A]
///     are indifferent to transposition and are not counted towards B);
///  2. reflect the kept dots of the first block, writing k at position w(k);
///  3. fill the free positions with the unused values in decreasing order.
/// Throws IndexOutOfRange for t outside 1..s.
ElementaryTrace elementary_partial_transpose_trace(const Permutation& w, int t);
Permutation elementary_partial_transpose(const Permutation& w, int t);

/// Closure of {w} under admissible partial transpositions, sorted. Every
/// subset of classes of every member is tried until no new permutation
/// appears.
std::vector<Permutation> cone_class(const Permutation& w);

}  // namespace schubert
