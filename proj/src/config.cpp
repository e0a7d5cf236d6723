#include "diffract/config.hpp"

#include <fstream>
#include <sstream>

#include "diffract/io.hpp"

namespace diffract {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream is(text);
  std::string line, section;
  long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line_no, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (!section.empty()) key = section + "." + key;
    if (cfg.entries_.count(key))
      throw ConfigError(line_no, "duplicate key: " + key);
    cfg.entries_[key] = value;
    cfg.lines_[key] = line_no;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  return parse(read_text_file(path));
}

bool ExperimentConfig::has(const std::string& key) const {
  return entries_.count(key) > 0;
}

long ExperimentConfig::line_of(const std::string& key) const {
  auto it = lines_.find(key);
  return it == lines_.end() ? 0 : it->second;
}

std::string ExperimentConfig::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(0, "missing key: " + key);
  return it->second;
}

std::string ExperimentConfig::get_or(const std::string& key,
                                     const std::string& fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  try {
    std::size_t pos = 0;
    const std::string v = get(key);
    const double d = std::stod(v, &pos);
    if (trim(v.substr(pos)).size()) throw std::invalid_argument("trailing junk");
    return d;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(line_of(key), key + ": not a number (" + e.what() + ")");
  }
}

double ExperimentConfig::get_double_or(const std::string& key,
                                       double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long ExperimentConfig::get_long(const std::string& key) const {
  try {
    std::size_t pos = 0;
    const std::string v = get(key);
    const long n = std::stol(v, &pos);
    if (trim(v.substr(pos)).size()) throw std::invalid_argument("trailing junk");
    return n;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(line_of(key), key + ": not an integer (" + e.what() + ")");
  }
}

long ExperimentConfig::get_long_or(const std::string& key, long fallback) const {
  return has(key) ? get_long(key) : fallback;
}

std::vector<double> ExperimentConfig::get_doubles(const std::string& key) const {
  std::istringstream is(get(key));
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError(line_of(key), key + ": bad number '" + tok + "'");
    }
  }
  return out;
}

std::vector<double> ExperimentConfig::get_doubles_or(
    const std::string& key, std::vector<double> fallback) const {
  return has(key) ? get_doubles(key) : std::move(fallback);
}

unsigned long ExperimentConfig::seed() const {
  if (!has("seed"))
    throw ConfigError(0, "seed is mandatory when random shifts are used");
  return static_cast<unsigned long>(get_long("seed"));
}

}  // namespace diffract
