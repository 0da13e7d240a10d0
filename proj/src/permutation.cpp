#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "schubert/error.hpp"

namespace schubert {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = size();
  if (n < 1) throw InvalidPermutation("permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw InvalidPermutation("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw InvalidPermutation("entry " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = n - k;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') continue;
    body.push_back(c);
  }
  if (body.empty()) throw ParseError("empty permutation");

  std::vector<int> values;
  if (body.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t stop = std::min(body.find(',', start), body.size());
      const std::string token = body.substr(start, stop - start);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw ParseError("bad permutation entry '" + token + "'");
      if (token.size() > 6) throw ParseError("permutation entry too large: " + token);
      values.push_back(std::stoi(token));
      start = stop + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("bad character '") + c + "' in permutation");
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string("not a permutation: ") + e.what());
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k)
    inv[static_cast<std::size_t>(values_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] > values_[j]) ++count;
  return count;
}

int Permutation::colength() const {
  const int n = size();
  return n * (n - 1) / 2 - length();
}

std::string Permutation::to_string() const {
  if (size() > 9) return to_comma_string();
  std::string out;
  for (int v : values_) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::to_comma_string() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(values_[k]);
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidPermutation("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int k = 1; k <= a.size(); ++k) out[static_cast<std::size_t>(k - 1)] = a(b(k));
  return Permutation(std::move(out));
}

Permutation times_simple(const Permutation& w, int i) {
  if (i < 1 || i >= w.size())
    throw IndexOutOfRange("s_" + std::to_string(i) + " not in S_" + std::to_string(w.size()));
  std::vector<int> v(w.values().begin(), w.values().end());
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

std::vector<Permutation> coxeter_elements(int n) {
  if (n < 2) throw IndexOutOfRange("Coxeter elements need n >= 2");
  std::vector<Permutation> out;
  const std::uint64_t choices = std::uint64_t{1} << (n - 2);
  for (std::uint64_t mask = 0; mask < choices; ++mask) {
    // Bit i-1 set: s_{i+1} stands left of s_i.
    std::deque<int> word{1};
    for (int i = 2; i <= n - 1; ++i) {
      if (mask >> (i - 2) & 1U)
        word.push_front(i);
      else
        word.push_back(i);
    }
    Permutation w = Permutation::identity(n);
    for (int s : word) w = times_simple(w, s);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coxeter(const Permutation& w) {
  const int n = w.size();
  if (n < 2 || w.length() != n - 1) return false;
  // A length n-1 element is Coxeter iff every s_i occurs in a reduced word,
  // i.e. w does not stabilize any initial segment {1..i}.
  int running_max = 0;
  for (int k = 1; k < n; ++k) {
    running_max = std::max(running_max, w(k));
    if (running_max == k) return false;
  }
  return true;
}

std::vector<std::uint64_t> mahonian_counts(int n) {
  std::vector<std::uint64_t> poly{1};
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<std::uint64_t> next(poly.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t d = 0; d < poly.size(); ++d)
      for (int e = 0; e <= k; ++e) next[d + static_cast<std::size_t>(e)] += poly[d];
    poly = std::move(next);
  }
  return poly;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller_after;
    rank += static_cast<std::uint64_t>(smaller_after) * factorial(n - i);
  }
  return rank;
}

}  // namespace schubert
