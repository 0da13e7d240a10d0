#include "schubert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Variable Variable::from_index(int index) {
  int row = 2;
  while (index >= row - 1) {
    index -= row - 1;
    ++row;
  }
  return {row, index + 1};
}

Monomial::Monomial(std::vector<int> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<int> f;
  f.reserve(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(f));
  Monomial m;
  m.factors_ = std::move(f);
  return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Same degree: lexicographic on exponent vectors with x21 > x31 > ...,
  // which on sorted factor lists is plain lexicographic comparison.
  return a.factors_ < b.factors_;
}

Polynomial Polynomial::constant(std::int64_t c) {
  Polynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(Variable v) {
  if (v.row <= v.col || v.col < 1) throw IndexOutOfRange("variables x_ij need i > j >= 1");
  Polynomial p;
  p.add_term(Monomial({v.index()}), 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::lowest_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Polynomial Polynomial::lowest_degree_part() const {
  Polynomial out;
  const int d = lowest_degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::int64_t Polynomial::evaluate(const std::vector<std::int64_t>& values, std::int64_t modulus) const {
  auto reduce = [modulus](std::int64_t x) {
    if (modulus <= 0) return x;
    x %= modulus;
    return x < 0 ? x + modulus : x;
  };
  std::int64_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t term = reduce(c);
    for (int f : m.factors()) {
      if (f >= static_cast<int>(values.size())) throw IndexOutOfRange("point lacks a coordinate");
      term = reduce(term * values[static_cast<std::size_t>(f)]);
    }
    total = reduce(total + term);
  }
  return total;
}

std::string Polynomial::to_string(bool comma_names) const {
  if (terms_.empty()) return "0";
  auto name = [comma_names](int index) {
    const Variable v = Variable::from_index(index);
    if (comma_names) return "x{" + std::to_string(v.row) + "," + std::to_string(v.col) + "}";
    return "x" + std::to_string(v.row) + std::to_string(v.col);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    std::vector<std::string> parts;
    if (mag != 1 || m.degree() == 0) parts.push_back(std::to_string(mag));
    const auto& f = m.factors();
    for (std::size_t k = 0; k < f.size();) {
      std::size_t e = k;
      while (e < f.size() && f[e] == f[k]) ++e;
      std::string p = name(f[k]);
      if (e - k > 1) p += "^" + std::to_string(e - k);
      parts.push_back(std::move(p));
      k = e;
    }
    for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? "*" : "") << parts[k];
  }
  return out.str();
}

}  // namespace schubert
