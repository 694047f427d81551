#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace thinset {

/// Flat key/value configuration with optional [sections]. Keys are addressed
/// as "section.key"; keys before the first section are top level.
class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text);
  static Config load_file(const std::string& path);

  /// Later values win; used for command-line overrides.
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;

  /// "seed" (or "general.seed") from the file, else THINSET_SEED, else 0.
  std::uint64_t seed() const;

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace thinset
