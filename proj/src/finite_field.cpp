#include "schubert/finite_field.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

int coordinate_count(int n) { return n * (n - 1) / 2; }

}  // namespace

CoordinatePoint CoordinatePoint::zero(int n, std::int64_t modulus) {
  return {n, modulus, std::vector<std::int64_t>(static_cast<std::size_t>(coordinate_count(n)), 0)};
}

std::int64_t CoordinatePoint::at(int i, int j) const {
  if (i == j) return 1;
  if (j > i) return 0;
  return values[static_cast<std::size_t>(Variable{i, j}.index())];
}

std::vector<std::vector<std::int64_t>> CoordinatePoint::matrix() const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = at(i, j);
  return m;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (auto& row : m)
    for (auto& v : row) v = mod(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse_mod(m[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = mod(m[r][k] - f * m[rank][k], p);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_exact(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  __int128 previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / previous;
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<std::vector<std::int64_t>> submatrix_at(const CoordinatePoint& x, int i, int j) {
  if (i < 1 || j < 1 || i > x.n - 1 || j > x.n - 1) throw IndexOutOfRange("M_ij needs 1 <= i, j <= n-1");
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(x.n - j), std::vector<std::int64_t>(static_cast<std::size_t>(i)));
  for (int r = 1; r <= x.n - j; ++r)
    for (int c = 1; c <= i; ++c) m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = x.at(j + r, c);
  return m;
}

int submatrix_rank(const CoordinatePoint& x, int i, int j) {
  auto m = submatrix_at(x, i, j);
  return x.modulus > 0 ? rank_mod_p(std::move(m), x.modulus) : rank_exact(std::move(m));
}

const char* to_string(Semantics s) { return s == Semantics::Cell ? "cell" : "variety"; }

bool rank_condition_holds(const CoordinatePoint& x, const Permutation& w, Scope scope, Semantics semantics) {
  const int n = w.size();
  if (x.n != n) throw IndexOutOfRange("point and permutation differ in n");
  const RankMatrix r = rank_matrix(w);
  auto check = [&](int i, int j) {
    const int rank = submatrix_rank(x, i, j);
    const int bound = i - r(i, j);
    return semantics == Semantics::Cell ? rank == bound : rank <= bound;
  };
  if (scope == Scope::Pillar) {
    for (const auto& p : pillar_entries(w))
      if (!check(p.row, p.col)) return false;
    return true;
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (!check(i, j)) return false;
  return true;
}

RankMatrix point_rank_matrix(const CoordinatePoint& x) {
  const int n = x.n;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      int value = 0;
      if (i == 0 || j == 0)
        value = 0;
      else if (i == n)
        value = j;
      else if (j == n)
        value = i;
      else
        value = i - submatrix_rank(x, i, j);
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    }
  }
  return RankMatrix::from_entries(rows);
}

std::uint64_t point_count(int n, std::int64_t q, std::uint64_t budget) {
  if (q != 2 && q != 3 && q != 5) throw IndexOutOfRange("q must be 2, 3 or 5");
  std::uint64_t total = 1;
  for (int k = 0; k < coordinate_count(n); ++k) {
    total *= static_cast<std::uint64_t>(q);
    if (total > budget)
      throw ResourceLimit("F_" + std::to_string(q) + " sweep over " + std::to_string(coordinate_count(n)) +
                          " coordinates exceeds the budget of " + std::to_string(budget) + " points");
  }
  return total;
}

CoordinatePoint point_at(int n, std::int64_t q, std::uint64_t index) {
  CoordinatePoint x = CoordinatePoint::zero(n, q);
  for (auto& v : x.values) {
    v = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return x;
}

std::uint64_t count_solutions(const Permutation& w, std::int64_t q, Scope scope, Semantics semantics,
                              std::uint64_t budget, int jobs) {
  const int n = w.size();
  const std::uint64_t total = point_count(n, q, budget);
  const int workers = resolve_jobs(jobs);
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
    std::uint64_t count = 0;
    for (std::uint64_t k = begin; k < end; ++k)
      if (rank_condition_holds(point_at(n, q, k), w, scope, semantics)) ++count;
    partial[chunk] = count;
  });
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

SweepComparison compare_solution_sets(int n, std::int64_t q, const PointPredicate& first,
                                      const PointPredicate& second, std::uint64_t budget, int jobs) {
  const std::uint64_t total = point_count(n, q, budget);
  const int workers = resolve_jobs(jobs);
  std::vector<SweepComparison> partial(static_cast<std::size_t>(workers));
  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, std::size_t chunk) {
    SweepComparison& s = partial[chunk];
    for (std::uint64_t k = begin; k < end; ++k) {
      const CoordinatePoint x = point_at(n, q, k);
      const bool a = first(x);
      const bool b = second(x);
      s.first_count += a;
      s.second_count += b;
      if (a != b && !s.first_divergence) s.first_divergence = k;
    }
  });
  SweepComparison out;
  out.points = total;
  for (const auto& s : partial) {
    out.first_count += s.first_count;
    out.second_count += s.second_count;
    if (s.first_divergence && !out.first_divergence) out.first_divergence = s.first_divergence;
  }
  return out;
}

SweepComparison compare_pillar_sufficiency(const Permutation& w, std::int64_t q, std::uint64_t budget, int jobs) {
  return compare_solution_sets(
      w.size(), q, [&w](const CoordinatePoint& x) { return rank_condition_holds(x, w, Scope::Pillar, Semantics::Variety); },
      [&w](const CoordinatePoint& x) { return rank_condition_holds(x, w, Scope::All, Semantics::Variety); }, budget,
      jobs);
}

bool in_coxeter_linear_space(const CoordinatePoint& x) {
  for (int a = 3; a <= x.n; ++a)
    for (int b = 1; b < a - 1; ++b)
      if (x.at(a, b) != 0) return false;
  return true;
}

}  // namespace schubert
