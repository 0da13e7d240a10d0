#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Dense matrix of polynomials.
using SymbolicMatrix = std::vector<std::vector<Polynomial>>;

/// Entry (a, b) of the lower unitriangular coordinate matrix X: 1 on the
/// diagonal, 0 above it, x_ab below it.
Polynomial coordinate_entry(int a, int b);

/// M_ij: rows j+1..n and columns 1..i of X, so entry (r, c) (1-based) is
/// X[j+r][c]. Throws IndexOutOfRange unless 1 <= i, j <= n-1.
SymbolicMatrix submatrix(int i, int j, int n);

/// A minor of a matrix: rows and columns as bitmasks of 0-based indices.
struct Minor {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  Polynomial value;
};

/// Determinants of all size-k minors whose rows include `required_rows`
/// and whose columns include `required_cols`, in ascending (rows, cols)
/// order. Shared subminors are expanded once.
std::vector<Minor> minors(const SymbolicMatrix& m, int k, std::uint32_t required_rows = 0,
                          std::uint32_t required_cols = 0);

enum class Scope { Pillar, All };
const char* to_string(Scope s);

/// The rank condition rank(M_ij) <= bound at one position, with bound =
/// i - r_ij, expressed as the vanishing of the size-(bound+1) minors.
struct MinorCondition {
  int i = 0;
  int j = 0;
  int bound = 0;
  /// Nonzero minors, deduplicated up to sign. Empty when the condition
  /// holds identically.
  std::vector<Polynomial> generators;
};

struct MinorSystem {
  Permutation w;
  Scope scope = Scope::Pillar;
  std::vector<MinorCondition> conditions;  // lexicographic by (i, j)

  /// Union of the generators of all conditions, deduplicated up to sign,
  /// in the order first met.
  std::vector<Polynomial> generators() const;
};

/// Lowest-degree homogeneous parts of the generators, deduplicated up to
/// sign. They vanish on the tangent cone; they cut it out exactly only when
/// the generators form a standard basis, which is not checked here.
std::vector<Polynomial> initial_forms(const MinorSystem& system);

/// Equations of the Schubert variety of w near the standard flag, from the
/// pillar positions only or from every position 1 <= i, j <= n-1.
MinorSystem minor_system(const Permutation& w, Scope scope);

/// For i > j, M_ij carries a unit lower-triangular block in its first i-j
/// rows and last i-j columns. A size-r minor that contains that block has as
/// lowest-degree part the complementary minor, which lives in M_ji. True iff
/// these lowest-degree parts match the size-(r-i+j) minors of M_ji one to
/// one, up to sign. Throws IndexOutOfRange unless 1 <= j < i <= n-1 and
/// i-j <= r <= min(n-j, i).
bool duality_check(int i, int j, int n, int r);

}  // namespace schubert
