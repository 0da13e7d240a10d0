#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// Coordinate x_ij of the unitriangular chart, i > j >= 1.
struct Variable {
  int row = 0;
  int col = 0;

  /// Position in the order x21, x31, x32, x41, ...; independent of n.
  int index() const { return (row - 1) * (row - 2) / 2 + (col - 1); }
  static Variable from_index(int index);

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) { return a.index() <=> b.index(); }
};

/// Product of variables, stored as the ascending list of variable indices
/// with repetition.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> factors);

  int degree() const { return static_cast<int>(factors_.size()); }
  const std::vector<int>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Term order used for canonical storage and printing: lower degree
  /// first, then the monomial with the larger exponent on the earliest
  /// variable first.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> factors_;
};

/// Sparse polynomial with integer coefficients in the x_ij. Zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(std::int64_t c);
  static Polynomial variable(Variable v);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int lowest_degree() const;
  /// Sum of the terms of lowest total degree.
  Polynomial lowest_degree_part() const;

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Value at a point given by variable index -> value, reduced modulo
  /// `modulus` when it is positive.
  std::int64_t evaluate(const std::vector<std::int64_t>& values, std::int64_t modulus) const;

  /// "x31*x42 - x32*x41". With comma_names the variables print as x{i,j},
  /// which is unambiguous once indices reach 10.
  std::string to_string(bool comma_names = false) const;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace schubert
