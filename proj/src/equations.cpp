#include "schubert/equations.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "schubert/error.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {
namespace {

// Expands determinants along their first row, memoized on (rows, cols).
class DeterminantCache {
 public:
  explicit DeterminantCache(const SymbolicMatrix& m) : m_(m) {}

  const Polynomial& det(std::uint32_t rows, std::uint32_t cols) {
    const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial value;
    if (rows == 0) {
      value = Polynomial::constant(1);
    } else {
      const int r = std::countr_zero(rows);
      const std::uint32_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::uint32_t c = cols; c != 0; c &= c - 1) {
        const int col = std::countr_zero(c);
        const Polynomial& entry = m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (!entry.is_zero()) {
          const Polynomial term = entry * det(rest, cols & ~(std::uint32_t{1} << col));
          value = sign > 0 ? value + term : value - term;
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const SymbolicMatrix& m_;
  std::map<std::uint64_t, Polynomial> memo_;
};

// Bitmasks over `width` bits with exactly k bits set, ascending.
std::vector<std::uint32_t> subsets(int width, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > width) return out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << width); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

Polynomial sign_normalized(const Polynomial& p) {
  if (p.is_zero() || p.terms().begin()->second > 0) return p;
  return -p;
}

void push_unique_up_to_sign(std::vector<Polynomial>& out, const Polynomial& p) {
  if (p.is_zero()) return;
  const Polynomial key = sign_normalized(p);
  for (const auto& q : out)
    if (sign_normalized(q) == key) return;
  out.push_back(p);
}

}  // namespace

Polynomial coordinate_entry(int a, int b) {
  if (a == b) return Polynomial::constant(1);
  if (b > a) return {};
  return Polynomial::variable({a, b});
}

SymbolicMatrix submatrix(int i, int j, int n) {
  if (n < 2 || i < 1 || j < 1 || i > n - 1 || j > n - 1)
    throw IndexOutOfRange("M_ij needs 1 <= i, j <= n-1");
  SymbolicMatrix m(static_cast<std::size_t>(n - j), std::vector<Polynomial>(static_cast<std::size_t>(i)));
  for (int r = 1; r <= n - j; ++r)
    for (int c = 1; c <= i; ++c)
      m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = coordinate_entry(j + r, c);
  return m;
}

std::vector<Minor> minors(const SymbolicMatrix& m, int k, std::uint32_t required_rows,
                          std::uint32_t required_cols) {
  const int height = static_cast<int>(m.size());
  const int width = height == 0 ? 0 : static_cast<int>(m.front().size());
  if (height > 31 || width > 31) throw ResourceLimit("matrix too large for minor enumeration");
  DeterminantCache cache(m);
  std::vector<Minor> out;
  for (std::uint32_t rows : subsets(height, k)) {
    if ((rows & required_rows) != required_rows) continue;
    for (std::uint32_t cols : subsets(width, k)) {
      if ((cols & required_cols) != required_cols) continue;
      out.push_back({rows, cols, cache.det(rows, cols)});
    }
  }
  return out;
}

const char* to_string(Scope s) { return s == Scope::Pillar ? "pillar" : "all"; }

std::vector<Polynomial> MinorSystem::generators() const {
  std::vector<Polynomial> out;
  for (const auto& c : conditions)
    for (const auto& g : c.generators) push_unique_up_to_sign(out, g);
  return out;
}

std::vector<Polynomial> initial_forms(const MinorSystem& system) {
  std::vector<Polynomial> out;
  for (const auto& g : system.generators()) push_unique_up_to_sign(out, g.lowest_degree_part());
  return out;
}

MinorSystem minor_system(const Permutation& w, Scope scope) {
  const int n = w.size();
  const RankMatrix r = rank_matrix(w);
  std::vector<std::pair<int, int>> positions;
  if (scope == Scope::Pillar) {
    for (const auto& p : pillar_entries(w)) positions.emplace_back(p.row, p.col);
  } else {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) positions.emplace_back(i, j);
  }

  MinorSystem system{w, scope, {}};
  for (auto [i, j] : positions) {
    MinorCondition cond{i, j, i - r(i, j), {}};
    const SymbolicMatrix m = submatrix(i, j, n);
    for (const auto& minor : minors(m, cond.bound + 1)) push_unique_up_to_sign(cond.generators, minor.value);
    system.conditions.push_back(std::move(cond));
  }
  return system;
}

bool duality_check(int i, int j, int n, int r) {
  if (!(1 <= j && j < i && i <= n - 1)) throw IndexOutOfRange("duality check needs 1 <= j < i <= n-1");
  const int d = i - j;
  if (r < d || r > std::min(n - j, i)) throw IndexOutOfRange("minor size outside i-j .. min(n-j, i)");

  // In M_ij the unit block occupies rows 0..d-1 and columns j..i-1 (0-based).
  const std::uint32_t block_rows = (std::uint32_t{1} << d) - 1;
  const std::uint32_t block_cols = ((std::uint32_t{1} << i) - 1) & ~((std::uint32_t{1} << j) - 1);
  std::vector<Polynomial> left;
  for (const auto& minor : minors(submatrix(i, j, n), r, block_rows, block_cols))
    left.push_back(sign_normalized(minor.value.lowest_degree_part()));

  std::vector<Polynomial> right;
  for (const auto& minor : minors(submatrix(j, i, n), r - d)) right.push_back(sign_normalized(minor.value));

  if (left.size() != right.size()) return false;
  auto by_text = [](const Polynomial& a, const Polynomial& b) { return a.to_string(true) < b.to_string(true); };
  std::sort(left.begin(), left.end(), by_text);
  std::sort(right.begin(), right.end(), by_text);
  if (std::adjacent_find(right.begin(), right.end()) != right.end()) return false;
  return left == right;
}

}  // namespace schubert
