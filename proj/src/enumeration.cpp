#include "schubert/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

std::uint64_t DimensionTable::total_cones() const {
  std::uint64_t total = 0;
  for (auto c : cone_counts) total += c;
  return total;
}

std::uint64_t DimensionTable::cones_in_codim(int c) const {
  const int m = top_dimension() - c;
  if (m < 0 || m > top_dimension()) return 0;
  return cone_counts[static_cast<std::size_t>(m)];
}

std::uint64_t DimensionTable::schubert_in_codim(int c) const {
  const int m = top_dimension() - c;
  if (m < 0 || m > top_dimension()) return 0;
  return schubert_counts[static_cast<std::size_t>(m)];
}

DimensionTable dimension_table(const Classification& c) {
  DimensionTable t;
  t.n = c.n;
  t.schubert_counts = mahonian_counts(c.n);
  t.cone_counts.assign(t.schubert_counts.size(), 0);
  for (const auto& cls : c.classes) ++t.cone_counts[static_cast<std::size_t>(Classification::dimension(cls))];
  return t;
}

DimensionTable dimension_table(int n, const ClassifyOptions& options) {
  if (n < 2) throw IndexOutOfRange("tables need n >= 2");
  return dimension_table(classify_all(n, options));
}

std::int64_t codim2_count(int n) {
  if (n < 4) throw IndexOutOfRange("the codimension-2 formula needs n >= 4");
  if (n % 2 == 1) return 2 + static_cast<std::int64_t>(n - 3) * (n + 11) / 8;
  return 3 + static_cast<std::int64_t>(n - 4) * (n + 14) / 8;
}

std::pair<std::int64_t, std::int64_t> codim1_report(int n) {
  if (n < 2) throw IndexOutOfRange("codimension-1 report needs n >= 2");
  return {n - 1, n / 2};
}

std::int64_t schubert_codim2_count(int n) { return static_cast<std::int64_t>(n + 2) * (n - 1) / 2; }

std::uint64_t totals(int n, const ClassifyOptions& options) { return dimension_table(n, options).total_cones(); }

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ParseError("unknown format '" + name + "' (expected text, csv or json)");
}

std::string format_table(const DimensionTable& t, Format f) {
  std::ostringstream out;
  const auto dims = static_cast<std::size_t>(t.top_dimension() + 1);
  switch (f) {
    case Format::Text: {
      std::size_t width = 1;
      for (std::size_t m = 0; m < dims; ++m) {
        width = std::max(width, std::to_string(m).size());
        width = std::max(width, std::to_string(t.schubert_counts[m]).size());
        width = std::max(width, std::to_string(t.cone_counts[m]).size());
      }
      auto row = [&](const std::string& label, auto value) {
        out << std::setw(9) << label << " |";
        for (std::size_t m = 0; m < dims; ++m) out << ' ' << std::setw(static_cast<int>(width)) << value(m);
        out << '\n';
      };
      row("dim", [](std::size_t m) { return m; });
      row("Schub", [&](std::size_t m) { return t.schubert_counts[m]; });
      row("TangCones", [&](std::size_t m) { return t.cone_counts[m]; });
      out << "total tangent cones (n=" << t.n << "): " << t.total_cones() << '\n';
      break;
    }
    case Format::Csv:
      out << "dim,schubert,cones\n";
      for (std::size_t m = 0; m < dims; ++m) out << m << ',' << t.schubert_counts[m] << ',' << t.cone_counts[m] << '\n';
      break;
    case Format::Json: {
      nlohmann::json j = {{"n", t.n},
                          {"schubert", t.schubert_counts},
                          {"cones", t.cone_counts},
                          {"total_cones", t.total_cones()}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

}  // namespace

std::string RunCache::serialize(const Classification& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes) {
    std::vector<std::string> members;
    for (const auto& w : cls) members.push_back(w.to_comma_string());
    classes.push_back({{"representative", cls.front().to_comma_string()},
                       {"dimension", Classification::dimension(cls)},
                       {"members", members}});
  }
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"n", c.n},
                      {"classes", classes},
                      {"checksum", hex(fnv1a(classes.dump()))}};
  return j.dump(1) + "\n";
}

Classification RunCache::deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cache is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ParseError("cache schema version " + j.at("schema_version").dump() + " is not supported");
    const auto& classes = j.at("classes");
    if (j.at("checksum").get<std::string>() != hex(fnv1a(classes.dump())))
      throw ParseError("cache checksum mismatch");
    Classification c;
    c.n = j.at("n").get<int>();
    for (const auto& cls : classes) {
      std::vector<Permutation> members;
      for (const auto& m : cls.at("members")) members.push_back(Permutation::parse(m.get<std::string>()));
      if (members.empty()) throw ParseError("cache holds an empty class");
      if (members.front().to_comma_string() != cls.at("representative").get<std::string>())
        throw ParseError("cache representative is not the first member");
      c.classes.push_back(std::move(members));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cache: ") + e.what());
  }
}

void RunCache::save(const Classification& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write cache " + path.string());
  out << serialize(c);
}

Classification RunCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read cache " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return deserialize(text.str());
}

Classification classify_cached(int n, const std::filesystem::path& cache_path, const ClassifyOptions& options) {
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    Classification c = RunCache::load(cache_path);
    if (c.n == n) return c;
  }
  Classification c = classify_all(n, options);
  if (!cache_path.empty()) RunCache::save(c, cache_path);
  return c;
}

}  // namespace schubert
