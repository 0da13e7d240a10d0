#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "schubert/classification.hpp"

namespace schubert {

/// Per dimension m = 0 .. n(n-1)/2: the number of Schubert varieties and the
/// number of tangent-cone classes of that dimension.
struct DimensionTable {
  int n = 0;
  std::vector<std::uint64_t> schubert_counts;
  std::vector<std::uint64_t> cone_counts;

  int top_dimension() const { return n * (n - 1) / 2; }
  std::uint64_t total_cones() const;
  /// Cone count in codimension c, i.e. at dimension top_dimension() - c.
  std::uint64_t cones_in_codim(int c) const;
  std::uint64_t schubert_in_codim(int c) const;
};

DimensionTable dimension_table(const Classification& c);
/// Classifies S_n first; ResourceLimit above options.max_n.
DimensionTable dimension_table(int n, const ClassifyOptions& options = {});

/// Closed form for the number of tangent cones of codimension 2:
/// 2 + (n-3)(n+11)/8 for odd n, 3 + (n-4)(n+14)/8 for even n. Needs n >= 4.
std::int64_t codim2_count(int n);

/// (n-1, floor(n/2)): Schubert varieties and tangent cones of codimension 1.
std::pair<std::int64_t, std::int64_t> codim1_report(int n);

/// (n+2)(n-1)/2, the number of Schubert varieties of codimension 2.
std::int64_t schubert_codim2_count(int n);

/// Total number of tangent-cone classes in S_n.
std::uint64_t totals(int n, const ClassifyOptions& options = {});

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& name);

/// The table as aligned text ("dim", "Schub", "TangCones" rows followed by
/// the total), CSV (one line per dimension) or JSON.
std::string format_table(const DimensionTable& t, Format f);

/// On-disk form of a classification. Written as canonical JSON: the same
/// classification always serializes to the same bytes.
struct RunCache {
  static constexpr int kSchemaVersion = 1;

  static std::string serialize(const Classification& c);
  /// Throws ParseError for malformed JSON, a schema mismatch or a checksum
  /// mismatch.
  static Classification deserialize(const std::string& text);

  static void save(const Classification& c, const std::filesystem::path& path);
  static Classification load(const std::filesystem::path& path);
};

/// FNV-1a over the bytes of `text`.
std::uint64_t fnv1a(const std::string& text);

/// Loads the classification of S_n from `cache_path` when it exists and
/// matches n, otherwise computes it and, if a path is given, stores it.
Classification classify_cached(int n, const std::filesystem::path& cache_path, const ClassifyOptions& options = {});

}  // namespace schubert
