#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "schubert/equations.hpp"
#include "schubert/permutation.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

/// Values of the coordinates x_ij (i > j) of the unitriangular chart, indexed
/// by Variable::index(). modulus = q for a point over F_q, 0 for an integer
/// point (ranks then taken over the rationals).
struct CoordinatePoint {
  int n = 0;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> values;

  static CoordinatePoint zero(int n, std::int64_t modulus);
  std::int64_t at(int i, int j) const;
  /// Full n x n matrix X.
  std::vector<std::vector<std::int64_t>> matrix() const;
};

/// Rank over F_p (p prime) by Gaussian elimination.
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p);
/// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_exact(std::vector<std::vector<std::int64_t>> m);

/// Numeric M_ij at a point; rank of it, over the point's field.
std::vector<std::vector<std::int64_t>> submatrix_at(const CoordinatePoint& x, int i, int j);
int submatrix_rank(const CoordinatePoint& x, int i, int j);

enum class Semantics { Cell, Variety };
const char* to_string(Semantics s);

/// Cell: rank(M_ij) = i - r_ij; variety: rank(M_ij) <= i - r_ij; checked at
/// the pillar positions of w or at every 1 <= i, j <= n-1.
bool rank_condition_holds(const CoordinatePoint& x, const Permutation& w, Scope scope, Semantics semantics);

/// r_ij = i - rank(M_ij), i.e. the rank matrix of the flag at x.
RankMatrix point_rank_matrix(const CoordinatePoint& x);

inline constexpr std::uint64_t kDefaultPointBudget = 400'000'000;

/// Number of points of F_q^{n(n-1)/2}; throws ResourceLimit when it exceeds
/// `budget` and IndexOutOfRange when q is not 2, 3 or 5.
std::uint64_t point_count(int n, std::int64_t q, std::uint64_t budget = kDefaultPointBudget);

/// The point with the given index in the sweep order: mixed radix q,
/// little-endian over coordinates x21, x31, x32, x41, ...
CoordinatePoint point_at(int n, std::int64_t q, std::uint64_t index);

/// Exact number of F_q points satisfying rank_condition_holds.
std::uint64_t count_solutions(const Permutation& w, std::int64_t q, Scope scope, Semantics semantics,
                              std::uint64_t budget = kDefaultPointBudget, int jobs = 0);

using PointPredicate = std::function<bool(const CoordinatePoint&)>;

/// Result of sweeping two membership predicates over the same points.
struct SweepComparison {
  std::uint64_t points = 0;
  std::uint64_t first_count = 0;
  std::uint64_t second_count = 0;
  /// Smallest point index where the predicates disagree, if any.
  std::optional<std::uint64_t> first_divergence;
  bool identical() const { return !first_divergence; }
};

/// Streams both predicates over every point of F_q^{n(n-1)/2}; nothing is
/// materialized. The predicates must be safe to call concurrently.
SweepComparison compare_solution_sets(int n, std::int64_t q, const PointPredicate& first,
                                      const PointPredicate& second, std::uint64_t budget = kDefaultPointBudget,
                                      int jobs = 0);

/// Pillar-scope against all-scope variety membership for w.
SweepComparison compare_pillar_sufficiency(const Permutation& w, std::int64_t q,
                                           std::uint64_t budget = kDefaultPointBudget, int jobs = 0);

/// x_ab = 0 for every a - b > 1.
bool in_coxeter_linear_space(const CoordinatePoint& x);

}  // namespace schubert
