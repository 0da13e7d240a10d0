#include "schubert/pillar_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/linking_graph.hpp"

namespace schubert {

namespace {

std::string describe(const PillarEntry& p) {
  return "r" + std::to_string(p.row) + "," + std::to_string(p.col) + "=" + std::to_string(p.value);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& token) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a non-negative integer, got '" + token + "'");
  return std::stoi(token);
}

}  // namespace

PillarSet::PillarSet(int n, std::vector<PillarEntry> pillars) : n_(n), pillars_(std::move(pillars)) {
  if (n_ < 1 || n_ > kMaxRank) throw InvalidPillarSet("n must lie in 1..255");
  std::sort(pillars_.begin(), pillars_.end());
  for (std::size_t k = 0; k < pillars_.size(); ++k) {
    const auto& p = pillars_[k];
    if (p.row < 1 || p.row > n_ - 1 || p.col < 1 || p.col > n_ - 1)
      throw InvalidPillarSet(describe(p) + ": position outside 1..n-1");
    if (p.value < 1 || p.value > std::min(p.row, p.col))
      throw InvalidPillarSet(describe(p) + ": value outside 1..min(i,j)");
    if (p.row + p.col - p.value >= n_)
      throw InvalidPillarSet(describe(p) + ": i + j - value must be below n");
    if (k > 0 && pillars_[k - 1].row == p.row && pillars_[k - 1].col == p.col)
      throw InvalidPillarSet(describe(p) + ": position given twice");
  }
}

PillarSet PillarSet::of(const Permutation& w) { return PillarSet(w.size(), pillar_entries(w)); }

PillarSet PillarSet::parse(std::string_view text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    auto field = trim(text.substr(start, stop - start));
    if (!field.empty()) fields.push_back(std::move(field));
    start = stop + 1;
  }
  if (fields.empty() || fields.front().rfind("n=", 0) != 0)
    throw ParseError("pillar set must start with 'n=<size>'");
  const int n = parse_int(trim(std::string_view(fields.front()).substr(2)));

  std::vector<PillarEntry> pillars;
  for (std::size_t k = 1; k < fields.size(); ++k) {
    const auto& f = fields[k];
    const auto comma = f.find(',');
    const auto eq = f.find('=');
    if (comma == std::string::npos || eq == std::string::npos || eq < comma)
      throw ParseError("pillar '" + f + "' is not of the form row,col=value");
    pillars.push_back({parse_int(trim(std::string_view(f).substr(0, comma))),
                       parse_int(trim(std::string_view(f).substr(comma + 1, eq - comma - 1))),
                       parse_int(trim(std::string_view(f).substr(eq + 1)))});
  }
  return PillarSet(n, std::move(pillars));
}

std::string PillarSet::to_string() const {
  std::ostringstream out;
  out << "n=" << n_;
  for (const auto& p : pillars_) out << "; " << p.row << ',' << p.col << '=' << p.value;
  return out.str();
}

Reconstruction reconstruct_with_trace(const PillarSet& ps) {
  const int n = ps.size();
  const auto& pillars = ps.pillars();
  // row_dot[r] = column of the dot on horizontal line r, 0 if free.
  std::vector<int> row_dot(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> col_used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::pair<int, int>> regions;
  Reconstruction out{Permutation::identity(n), {}, {}};

  auto run_step = [&](int index, int p, int q, int target) {
    ReconstructionStep step;
    step.pillar = index;
    for (int r = 1; r <= p; ++r)
      if (row_dot[static_cast<std::size_t>(r)] != 0 && row_dot[static_cast<std::size_t>(r)] <= q)
        ++step.already_inside;
    const int k = target - step.already_inside;
    const std::string where = index < 0 ? std::string("final step") : describe(pillars[static_cast<std::size_t>(index)]);
    if (k < 0) throw InvalidPillarSet(where + ": region already holds more dots than the value");

    std::vector<int> rows;  // free horizontal lines, bottom to top
    for (int r = p; r >= 1; --r)
      if (row_dot[static_cast<std::size_t>(r)] == 0) rows.push_back(r);
    std::vector<int> cols;  // free vertical lines, right to left
    for (int c = q; c >= 1; --c)
      if (!col_used[static_cast<std::size_t>(c)]) cols.push_back(c);
    if (static_cast<int>(rows.size()) < k || static_cast<int>(cols.size()) < k)
      throw InvalidPillarSet(where + ": not enough free lines for " + std::to_string(k) + " dots");

    for (int j = 1; j <= k; ++j) {
      const int c = cols[static_cast<std::size_t>(j - 1)];
      const int r = rows[static_cast<std::size_t>(k - j)];
      for (const auto& [rp, rq] : regions)
        if (r <= rp && c <= rq)
          throw InvalidPillarSet(where + ": dot (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") falls inside an earlier north-west region");
      row_dot[static_cast<std::size_t>(r)] = c;
      col_used[static_cast<std::size_t>(c)] = true;
      step.dots.emplace_back(r, c);
    }
    regions.emplace_back(p, q);
    if (index >= 0) out.increments.push_back(k);
    out.steps.push_back(std::move(step));
  };

  for (std::size_t i = 0; i < pillars.size(); ++i)
    run_step(static_cast<int>(i), pillars[i].row, pillars[i].col, pillars[i].value);
  run_step(-1, n, n, n);

  std::vector<int> values(row_dot.begin() + 1, row_dot.end());
  out.permutation = Permutation(std::move(values));
  if (pillar_entries(out.permutation) != pillars)
    throw InvalidPillarSet("reconstructed " + out.permutation.to_string() +
                           " has a different pillar set");
  return out;
}

Permutation reconstruct(const PillarSet& ps) { return reconstruct_with_trace(ps).permutation; }

std::vector<int> values_from_increments(const PillarSet& ps, const std::vector<int>& increments) {
  const auto& p = ps.pillars();
  if (increments.size() != p.size()) throw IndexOutOfRange("one increment per pillar expected");
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    int total = increments[i];
    for (std::size_t j = 0; j < i; ++j)
      if (p[j].row <= p[i].row && p[j].col <= p[i].col) total += increments[j];
    out[i] = total;
  }
  return out;
}

int codim_from_pillars(const PillarSet& ps) {
  const auto rec = reconstruct_with_trace(ps);
  const int n = ps.size();
  int codim = 0;
  for (std::size_t i = 0; i < ps.pillars().size(); ++i) {
    const auto& p = ps.pillars()[i];
    codim += rec.increments[i] * (p.value + n - p.row - p.col);
  }
  return codim;
}

Permutation truncate(const Permutation& w, int t) {
  const LinkingGraph graph = linking_graph(w);
  const int s = static_cast<int>(graph.components.size());
  if (t < 1 || t > s)
    throw IndexOutOfRange("class index " + std::to_string(t) + " outside 1.." + std::to_string(s));
  std::vector<PillarEntry> kept;
  for (int c = 0; c < t; ++c)
    for (int v : graph.components[static_cast<std::size_t>(c)])
      kept.push_back(graph.vertices[static_cast<std::size_t>(v)]);
  return reconstruct(PillarSet(w.size(), std::move(kept)));
}

Permutation single_pillar_permutation(int i, int j, int a, int n) {
  if (a < 1 || a > i || a > j || i > n || j > n || i + j - a >= n)
    throw IndexOutOfRange("need a <= i,j <= n and i + j - a < n");
  std::vector<int> v;
  for (int x = n; x >= n + 1 - i + a; --x) v.push_back(x);
  for (int x = j; x >= j - a + 1; --x) v.push_back(x);
  for (int x = n - i + a; x >= j + 1; --x) v.push_back(x);
  for (int x = j - a; x >= 1; --x) v.push_back(x);
  return Permutation(std::move(v));
}

}  // namespace schubert
