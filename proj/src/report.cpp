#include <quarttrace/report.hpp>

#include <cstdio>
#include <fstream>

#include <quarttrace/errors.hpp>

namespace qt {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  for (size_t i = 0; i < table.header.size(); ++i)
    out << table.header[i] << (i + 1 < table.header.size() ? "," : "");
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw ConfigError("csv row width mismatch in " + path);
    for (size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
  if (!out) throw ConfigError("write failed: " + path);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw ConfigError("write failed: " + path);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["command"] = command;
  j["config_hash"] = config_hash;
  j["wall_seconds"] = wall_seconds;
  j["stages"] = stages;
  j["outputs"] = outputs;
  return j;
}

void write_manifest(const std::string& path, const RunManifest& m) {
  write_json(path, m.to_json());
}

}  // namespace qt
