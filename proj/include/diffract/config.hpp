#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffract {

/// A config parse failure, carrying the offending line number.
struct ConfigError : std::runtime_error {
  long line = 0;
  ConfigError(long line_no, const std::string& what)
      : std::runtime_error("config line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

/// Flat key-value experiment recipe with optional [section] headers; keys in a
/// section become "section.key". `#` starts a comment.
class ExperimentConfig {
 public:
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_long(const std::string& key) const;
  long get_long_or(const std::string& key, long fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<double> get_doubles_or(const std::string& key,
                                     std::vector<double> fallback) const;

  unsigned long seed() const;  // mandatory when random shifts are used

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
  std::map<std::string, long> lines_;

  long line_of(const std::string& key) const;
};

}  // namespace diffract
