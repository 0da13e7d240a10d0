#include <doctest.h>

#include "schubert/rothe.hpp"

using namespace schubert;

TEST_CASE("Rothe diagrams of 2341") {
  const Permutation w = Permutation::parse("2341");
  const RotheDiagram standard(w, RotheFlavor::Standard);
  CHECK(standard.white_count() == 3);
  CHECK(standard.frontier_cells() == std::vector<PillarEntry>{{3, 1, 0}});
  CHECK(standard.render() ==
        " .  •  #  # \n"
        " .  #  •  # \n"
        "[0] #  #  • \n"
        " •  #  #  # \n");

  const RotheDiagram opposite(w, RotheFlavor::Opposite);
  CHECK(opposite.white_count() == 3);
  CHECK(opposite.frontier_cells() == std::vector<PillarEntry>{{1, 2, 1}, {2, 3, 2}});
  CHECK(opposite.render() ==
        " # (1) #  # \n"
        " #  # (2) # \n"
        " #  #  #  • \n"
        " •  .  .  . \n");
}

TEST_CASE("Rothe diagrams give length, essential and pillar entries") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const RotheDiagram standard(w, RotheFlavor::Standard);
      const RotheDiagram opposite(w, RotheFlavor::Opposite);
      CHECK(standard.white_count() == w.length());
      CHECK(opposite.white_count() == w.length());
      CHECK(standard.frontier_cells() == essential_entries(w));
      CHECK(opposite.frontier_cells() == pillar_entries(w));
    }
}
