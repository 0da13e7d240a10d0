#include <doctest.h>

#include "schubert/equations.hpp"
#include "schubert/error.hpp"

using namespace schubert;

namespace {
Polynomial x(int i, int j) { return Polynomial::variable({i, j}); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("submatrices of the coordinate matrix") {
  const SymbolicMatrix m22 = submatrix(2, 2, 4);
  REQUIRE(m22.size() == 2);
  CHECK(m22[0][0] == x(3, 1));
  CHECK(m22[0][1] == x(3, 2));
  CHECK(m22[1][0] == x(4, 1));
  CHECK(m22[1][1] == x(4, 2));

  // i > j: a unit block in the upper right.
  const SymbolicMatrix m31 = submatrix(3, 1, 4);
  REQUIRE(m31.size() == 3);
  REQUIRE(m31[0].size() == 3);
  CHECK(m31[0][0] == x(2, 1));
  CHECK(m31[0][1] == Polynomial::constant(1));
  CHECK(m31[0][2].is_zero());
  CHECK(m31[1][1] == x(3, 2));
  CHECK(m31[1][2] == Polynomial::constant(1));

  for (int n = 2; n <= 6; ++n) {
    const SymbolicMatrix last = submatrix(n - 1, n - 1, n);
    CHECK(last.size() == 1);
    CHECK(last[0].size() == static_cast<std::size_t>(n - 1));
  }
  CHECK_THROWS_AS(submatrix(4, 1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(submatrix(0, 1, 4), IndexOutOfRange);
}

TEST_CASE("minors with required rows and columns") {
  const auto all = minors(submatrix(2, 2, 4), 2);
  REQUIRE(all.size() == 1);
  CHECK(all[0].value.to_string() == "x31*x42 - x32*x41");
  CHECK(minors(submatrix(3, 1, 4), 1).size() == 9);
  CHECK(minors(submatrix(3, 1, 4), 2, 0b001, 0b100).size() == 4);
  CHECK(minors(submatrix(2, 2, 4), 3).empty());
}

TEST_CASE("equations of 4231") {
  const MinorSystem sys = minor_system(Permutation::parse("4231"), Scope::Pillar);
  REQUIRE(sys.conditions.size() == 1);
  CHECK(sys.conditions[0].i == 2);
  CHECK(sys.conditions[0].j == 2);
  CHECK(sys.conditions[0].bound == 1);
  CHECK(texts(sys.generators()) == std::vector<std::string>{"x31*x42 - x32*x41"});
}

TEST_CASE("equations of 3412 in the chart's shorthand") {
  // x_i = x_{i+1,i}, y_i = x_{i+2,i}, z = x_41.
  const Polynomial x1 = x(2, 1), x2 = x(3, 2), x3 = x(4, 3), y1 = x(3, 1), y2 = x(4, 2), z = x(4, 1);
  const auto gens = minor_system(Permutation::parse("3412"), Scope::Pillar).generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == z);
  const Polynomial cubic = y1 * x3 + x1 * y2 - x1 * x2 * x3;
  CHECK(((gens[1] - z) == cubic || (gens[1] - z) == -cubic));
}

TEST_CASE("all-entries scope lists every position") {
  const Permutation w = Permutation::parse("4231");
  const MinorSystem all = minor_system(w, Scope::All);
  CHECK(all.conditions.size() == 9);
  CHECK(texts(all.generators()) == std::vector<std::string>{"x31*x42 - x32*x41"});
  CHECK(minor_system(Permutation::longest(5), Scope::Pillar).conditions.empty());
}

TEST_CASE("the pillar system of s_1 s_2 ... s_{n-1} is linear") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> one_line;
    for (int k = 2; k <= n; ++k) one_line.push_back(k);
    one_line.push_back(1);
    {
      const Permutation w(one_line);
      const auto gens = minor_system(w, Scope::Pillar).generators();
      CHECK(gens.size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
      for (const auto& g : gens) {
        REQUIRE(g.terms().size() == 1);
        CHECK(g.degree() == 1);
        const Variable v = Variable::from_index(g.terms().begin()->first.factors().front());
        CHECK(v.row - v.col > 1);
      }
    }
  }
}

TEST_CASE("duality between M_ij and M_ji") {
  CHECK(duality_check(3, 1, 4, 3));
  CHECK(duality_check(4, 2, 5, 3));
  int checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (int i = 2; i <= n - 1; ++i)
      for (int j = 1; j < i; ++j)
        for (int r = i - j; r <= std::min(n - j, i); ++r) {
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(r);
          CHECK(duality_check(i, j, n, r));
          ++checked;
        }
  CHECK(checked > 20);
  CHECK_THROWS_AS(duality_check(1, 2, 4, 1), IndexOutOfRange);
  CHECK_THROWS_AS(duality_check(2, 2, 4, 1), IndexOutOfRange);
  CHECK_THROWS_AS(duality_check(3, 1, 4, 1), IndexOutOfRange);
}
