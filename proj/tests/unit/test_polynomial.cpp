#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/polynomial.hpp"

using namespace schubert;

namespace {
Polynomial x(int i, int j) { return Polynomial::variable({i, j}); }
}  // namespace

TEST_CASE("variable indices") {
  CHECK(Variable{2, 1}.index() == 0);
  CHECK(Variable{3, 1}.index() == 1);
  CHECK(Variable{3, 2}.index() == 2);
  CHECK(Variable{4, 1}.index() == 3);
  for (int k = 0; k < 45; ++k) CHECK(Variable::from_index(k).index() == k);
  CHECK_THROWS_AS(Polynomial::variable({2, 2}), IndexOutOfRange);
}

TEST_CASE("canonical form and arithmetic") {
  const Polynomial p = x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1);
  CHECK(p.to_string() == "x31*x42 - x32*x41");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p + p).to_string() == "2*x31*x42 - 2*x32*x41");
  CHECK(x(4, 2) * x(3, 1) == x(3, 1) * x(4, 2));
  const Polynomial q = x(4, 1) - x(2, 1) * x(4, 2) + Polynomial::constant(-3);
  CHECK(q.to_string() == "-3 + x41 - x21*x42");
  CHECK(q.lowest_degree() == 0);
  CHECK(q.lowest_degree_part().to_string() == "-3");
  CHECK((x(2, 1) * x(2, 1)).to_string() == "x21^2");
  CHECK((x(2, 1) * x(2, 1)).to_string(true) == "x{2,1}^2");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{}.degree() == -1);
}

TEST_CASE("evaluation") {
  const Polynomial p = x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1);
  std::vector<std::int64_t> v(6, 0);
  v[static_cast<std::size_t>(Variable{3, 1}.index())] = 2;
  v[static_cast<std::size_t>(Variable{4, 2}.index())] = 2;
  v[static_cast<std::size_t>(Variable{3, 2}.index())] = 1;
  v[static_cast<std::size_t>(Variable{4, 1}.index())] = 1;
  CHECK(p.evaluate(v, 0) == 3);
  CHECK(p.evaluate(v, 3) == 0);
  CHECK(p.evaluate(v, 2) == 1);
}
