#pragma once

// On-disk formats.
//
// Tables: comma-separated text. Leading lines starting with '#' carry
// "# key: value" metadata (at least config_hash and units); the first
// non-comment line holds the column names; every following line is one row of
// numbers printed with 17 significant digits.
//
// Manifests: "key = value" lines, one per entry, in insertion order.
//
// Checkpoints: little-endian binary, see write_checkpoint.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "collider/twobody.hpp"

namespace collider {

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a column; throws IoError when absent.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  std::optional<std::string> meta(const std::string& key) const;
};

std::string format_table(const Table& table);
Table parse_table(const std::string& text);

/// Write-to-temporary then rename, so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

void write_table(const std::filesystem::path& path, const Table& table);
Table read_table(const std::filesystem::path& path);

/// Streams rows to disk as they are produced (time series of a running
/// propagation). The header is written on construction.
class TableWriter {
 public:
  TableWriter(const std::filesystem::path& path, const Table& header, bool append);
  ~TableWriter();
  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;

  void write_row(const std::vector<double>& row);
  void flush();

 private:
  std::FILE* file_ = nullptr;
  std::size_t columns_;
  std::filesystem::path path_;
};

class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

  std::string to_text() const;
  static Manifest parse(const std::string& text);

  void write(const std::filesystem::path& path) const;
  static Manifest read(const std::filesystem::path& path);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointHeader {
  GridSpec grid;
  double t = 0.0;
  std::uint64_t step = 0;
  std::uint64_t config_hash = 0;
};

/// Layout: 8-byte magic "COLLIDER", u32 version, u32 boundary (0 periodic,
/// 1 hard-wall), u64 n, f64 x_min, f64 x_max, f64 t, u64 step, u64 config
/// hash, then n*n complex doubles (re, im) row-major.
void write_checkpoint(const std::filesystem::path& path, const TwoBodyWavefunction& psi,
                      const CheckpointHeader& header);

struct Checkpoint {
  CheckpointHeader header;
  Field amplitudes;
};

Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace collider
