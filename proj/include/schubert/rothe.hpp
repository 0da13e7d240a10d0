#pragma once

#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/rank_matrix.hpp"

namespace schubert {

enum class RotheFlavor {
  /// Shade each dotted cell, the cells right of it in its row and the cells
  /// below it in its column.
  Standard,
  /// Shade the cells strictly left of each dot in its row and strictly above
  /// it in its column; dotted cells stay unshaded.
  Opposite,
};

/// n x n table over cells (i, j), 1 <= i, j <= n, with a dot at (i, w(i)).
class RotheDiagram {
 public:
  RotheDiagram(const Permutation& w, RotheFlavor flavor);

  int size() const { return w_.size(); }
  RotheFlavor flavor() const { return flavor_; }
  const Permutation& permutation() const { return w_; }

  bool shaded(int i, int j) const { return shaded_[index(i, j)]; }
  bool dotted(int i, int j) const { return w_(i) == j; }

  /// Unshaded cells, excluding dotted ones for the opposite flavor.
  int white_count() const;

  /// Unshaded cells whose southern and eastern neighbours both exist and are
  /// shaded, each with the number of dots weakly north-west of it. These are
  /// the essential entries (standard) or pillar entries (opposite).
  std::vector<PillarEntry> frontier_cells() const;

  /// One text row per diagram row: '•' dot, '#' shaded, '.' white, and
  /// frontier cells shown with their value as "[v]" (standard) or "(v)"
  /// (opposite).
  std::string render() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * size() + (j - 1));
  }

  Permutation w_;
  RotheFlavor flavor_;
  std::vector<bool> shaded_;
};

inline RotheDiagram rothe(const Permutation& w, RotheFlavor flavor) { return RotheDiagram(w, flavor); }

}  // namespace schubert
