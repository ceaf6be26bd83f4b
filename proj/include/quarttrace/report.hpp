#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qt {

// Deterministic text form of a double: round-trip exact, locale-free.
std::string format_double(double v);

// FNV-1a over raw bytes; used to fingerprint the effective configuration.
std::uint64_t fnv1a(const std::string& bytes);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Writes header + rows, comma-separated, LF line endings.  Data files carry
// no timestamps so reruns are byte-identical.
void write_csv(const std::string& path, const CsvTable& table);

void write_json(const std::string& path, const nlohmann::json& j);

struct RunManifest {
  std::string version;
  std::string command;
  std::uint64_t config_hash = 0;
  double wall_seconds = 0.0;  // the only nondeterministic field, kept out of data files
  std::vector<std::string> stages;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
};

void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace qt
