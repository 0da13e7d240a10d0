#include "schubert/rank_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::string cell_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

RankMatrix rank_matrix(const Permutation& w) {
  const int n = w.size();
  if (n > kMaxRank) throw ResourceLimit("rank matrices are limited to n <= 255");
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<std::int16_t> e(stride * stride, 0);
  // Row i adds the dot (i, w(i)) to row i-1.
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const auto prev = e[static_cast<std::size_t>(i - 1) * stride + static_cast<std::size_t>(j)];
      e[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)] =
          static_cast<std::int16_t>(prev + (w(i) <= j ? 1 : 0));
    }
  }
  return RankMatrix(n, std::move(e));
}

RankMatrix RankMatrix::from_entries(const std::vector<std::vector<int>>& rows) {
  if (rows.size() < 2) throw InvalidRankMatrix("rank matrix needs at least 2 rows");
  const int n = static_cast<int>(rows.size()) - 1;
  if (n > kMaxRank) throw ResourceLimit("rank matrices are limited to n <= 255");
  std::vector<std::int16_t> e;
  e.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InvalidRankMatrix("rank matrix must be square");
    for (int v : row) {
      if (v < 0 || v > n) throw InvalidRankMatrix("entry " + std::to_string(v) + " out of range");
      e.push_back(static_cast<std::int16_t>(v));
    }
  }
  RankMatrix r(n, std::move(e));
  if (auto why = rank_matrix_violation(r); !why.empty()) throw InvalidRankMatrix(why);
  return r;
}

std::vector<std::vector<int>> RankMatrix::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_ + 1));
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

std::string rank_matrix_violation(const RankMatrix& r) {
  const int n = r.size();
  for (int k = 0; k <= n; ++k) {
    if (r(0, k) != 0 || r(k, 0) != 0) return "border row/column 0 must vanish at " + std::to_string(k);
    if (r(k, n) != k || r(n, k) != k) return "border row/column n must equal " + std::to_string(k);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (r(i, j) + r(i + 1, j + 1) < r(i + 1, j) + r(i, j + 1))
        return "submodularity fails at " + cell_name(i, j);
      const int right = r(i, j + 1) - r(i, j);
      const int down = r(i + 1, j) - r(i, j);
      if (right != 0 && right != 1) return "column step not 0/1 at " + cell_name(i, j);
      if (down != 0 && down != 1) return "row step not 0/1 at " + cell_name(i, j);
    }
  }
  return {};
}

Permutation permutation_from_rank_matrix(const RankMatrix& r) {
  if (auto why = rank_matrix_violation(r); !why.empty()) throw InvalidRankMatrix(why);
  const int n = r.size();
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int a = r(i - 1, j - 1);
      if (r(i - 1, j) == a && r(i, j - 1) == a && r(i, j) == a + 1) {
        if (w[static_cast<std::size_t>(i - 1)] != 0)
          throw InvalidRankMatrix("row " + std::to_string(i) + " carries two dots");
        w[static_cast<std::size_t>(i - 1)] = j;
      }
    }
    if (w[static_cast<std::size_t>(i - 1)] == 0)
      throw InvalidRankMatrix("row " + std::to_string(i) + " carries no dot");
  }
  try {
    return Permutation(std::move(w));
  } catch (const InvalidPermutation& e) {
    throw InvalidRankMatrix(std::string("dots do not form a permutation: ") + e.what());
  }
}

RankMatrix transpose(const RankMatrix& r) {
  const int n = r.size();
  const auto stride = static_cast<std::size_t>(n + 1);
  std::vector<std::int16_t> e(stride * stride);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      e[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(i)] =
          static_cast<std::int16_t>(r(i, j));
  return RankMatrix(n, std::move(e));
}

std::vector<PillarEntry> pillar_entries(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  std::vector<PillarEntry> out;
  for (int i = 1; i < n; ++i) {
    // Only columns j in [w(i), w(i+1)) can qualify.
    for (int j = w(i); j < w(i + 1); ++j) {
      if (inv(j) <= i && inv(j + 1) > i) {
        int value = 0;
        for (int k = 1; k <= i; ++k)
          if (w(k) <= j) ++value;
        out.push_back({i, j, value});
      }
    }
  }
  return out;
}

std::vector<PillarEntry> pillar_entries(const RankMatrix& r) {
  return pillar_entries(permutation_from_rank_matrix(r));
}

std::vector<PillarEntry> essential_entries(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  std::vector<PillarEntry> out;
  for (int i = 1; i < n; ++i) {
    for (int j = w(i + 1); j < w(i); ++j) {
      if (inv(j) > i && inv(j + 1) <= i) {
        int value = 0;
        for (int k = 1; k <= i; ++k)
          if (w(k) <= j) ++value;
        out.push_back({i, j, value});
      }
    }
  }
  return out;
}

std::vector<PillarEntry> essential_entries(const RankMatrix& r) {
  return essential_entries(permutation_from_rank_matrix(r));
}

std::string render(const RankMatrix& r) {
  const int n = r.size();
  const Permutation w = permutation_from_rank_matrix(r);
  std::vector<std::string> cells(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto cell = [&](int i, int j) -> std::string& {
    return cells[static_cast<std::size_t>(i * (n + 1) + j)];
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) cell(i, j) = std::to_string(r(i, j));
  for (const auto& p : pillar_entries(w)) cell(p.row, p.col) = "(" + std::to_string(p.value) + ")";
  for (const auto& e : essential_entries(w)) cell(e.row, e.col) = "[" + std::to_string(e.value) + "]";
  for (int i = 1; i <= n; ++i) cell(i, w(i)) = "*" + cell(i, w(i));

  std::size_t width = 0;
  for (const auto& c : cells) width = std::max(width, c.size());
  std::ostringstream out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const auto& c = cell(i, j);
      out << std::string(width + 1 - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace schubert
