#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Element of the symmetric group S_n in one-line notation, 1-based:
/// values()[k - 1] == w(k).
class Permutation {
 public:
  /// Throws InvalidPermutation unless `one_line` is a permutation of 1..n,
  /// n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The longest element w0 = n (n-1) ... 1.
  static Permutation longest(int n);

  /// Parses the compact digit form ("4231", n <= 9) or the comma form
  /// ("12,2,9,7,..."). Surrounding parentheses and blanks are ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }

  /// w(k) for 1 <= k <= n.
  int operator()(int k) const { return values_[static_cast<std::size_t>(k - 1)]; }

  std::span<const int> values() const { return values_; }

  Permutation inverse() const;

  /// Number of inversions, #{i < j : w(i) > w(j)}.
  int length() const;

  /// n(n-1)/2 - length(), the codimension of the Schubert cell.
  int colength() const;

  /// Compact form when n <= 9, comma form otherwise.
  std::string to_string() const;

  /// Comma form regardless of n.
  std::string to_comma_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// (a * b)(k) = a(b(k)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Right multiplication by the elementary transposition s_i, which swaps the
/// entries at positions i and i+1 of the one-line notation.
Permutation times_simple(const Permutation& w, int i);

/// The 2^(n-2) Coxeter elements of S_n, sorted. Each is a product of
/// s_1, ..., s_{n-1} taken once each in some order; since only neighbouring
/// generators fail to commute, an element is fixed by choosing for each
/// i = 1..n-2 whether s_i stands left or right of s_{i+1}.
std::vector<Permutation> coxeter_elements(int n);

bool is_coxeter(const Permutation& w);

/// Coefficients of prod_{k=1}^{n-1} (1 + t + ... + t^k): the number of
/// permutations of S_n of each length 0 .. n(n-1)/2.
std::vector<std::uint64_t> mahonian_counts(int n);

/// All of S_n in lexicographic order. Intended for n <= 9.
std::vector<Permutation> all_permutations(int n);

/// Position of w in the lexicographic order of S_n (0-based), via the Lehmer
/// code.
std::uint64_t lex_rank(const Permutation& w);

std::uint64_t factorial(int n);

}  // namespace schubert
