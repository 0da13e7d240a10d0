#include "schubert/rothe.hpp"

#include <sstream>

namespace schubert {

RotheDiagram::RotheDiagram(const Permutation& w, RotheFlavor flavor)
    : w_(w), flavor_(flavor), shaded_(static_cast<std::size_t>(w.size() * w.size()), false) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    const int j = w(i);
    if (flavor == RotheFlavor::Standard) {
      for (int c = j; c <= n; ++c) shaded_[index(i, c)] = true;
      for (int r = i; r <= n; ++r) shaded_[index(r, j)] = true;
    } else {
      for (int c = 1; c < j; ++c) shaded_[index(i, c)] = true;
      for (int r = 1; r < i; ++r) shaded_[index(r, j)] = true;
    }
  }
}

int RotheDiagram::white_count() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = 1; j <= size(); ++j)
      if (!shaded(i, j) && !(flavor_ == RotheFlavor::Opposite && dotted(i, j))) ++count;
  return count;
}

std::vector<PillarEntry> RotheDiagram::frontier_cells() const {
  const int n = size();
  std::vector<PillarEntry> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (shaded(i, j) || !shaded(i + 1, j) || !shaded(i, j + 1)) continue;
      int value = 0;
      for (int k = 1; k <= i; ++k)
        if (w_(k) <= j) ++value;
      out.push_back({i, j, value});
    }
  }
  return out;
}

std::string RotheDiagram::render() const {
  const int n = size();
  std::vector<std::string> cells(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      cells[index(i, j)] = dotted(i, j) ? " • " : shaded(i, j) ? " # " : " . ";
  const bool standard = flavor_ == RotheFlavor::Standard;
  for (const auto& f : frontier_cells())
    cells[index(f.row, f.col)] =
        (standard ? "[" : "(") + std::to_string(f.value) + (standard ? "]" : ")");
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out << cells[index(i, j)];
    out << '\n';
  }
  return out.str();
}

}  // namespace schubert
