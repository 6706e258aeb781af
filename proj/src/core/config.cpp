#include "config.h"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace frds {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open config file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw IoError("read failed: " + path);
  return from_text(buf.str());
}

Config Config::from_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key))
      throw ConfigError("config line " + std::to_string(lineno) + ": bad key '" + key + "'");
    if (value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty value for '" + key +
                        "'");
    if (!cfg.entries_.emplace(key, value).second)
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return cfg;
}

const std::string* Config::find(const std::string& key) const {
  touched_.insert(key);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

std::string Config::get_string(const std::string& key) {
  const std::string* v = find(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  return *v;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) {
  const std::string* v = find(key);
  return v ? *v : fallback;
}

double Config::parse_number(const std::string& token) {
  const std::string t = trim(token);
  if (t == "pi") return kPi;
  if (t == "2pi") return 2.0 * kPi;
  if (t == "-pi") return -kPi;
  if (t == "-2pi") return -2.0 * kPi;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0')
    throw ConfigError("bad numeric value '" + token + "'");
  return v;
}

double Config::get_double(const std::string& key) {
  const std::string* v = find(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  return parse_number(*v);
}

double Config::get_double(const std::string& key, double fallback) {
  const std::string* v = find(key);
  return v ? parse_number(*v) : fallback;
}

int Config::get_int(const std::string& key) {
  const double v = get_double(key);
  const double r = std::nearbyint(v);
  if (std::abs(v - r) > 1e-9 || std::abs(r) > 2147483647.0)
    throw ConfigError("config key '" + key + "' must be an integer");
  return static_cast<int>(r);
}

int Config::get_int(const std::string& key, int fallback) {
  return has(key) ? get_int(key) : fallback;
}

std::vector<double> Config::get_double_list(const std::string& key) {
  const std::string* v = find(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  std::string s = *v;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_number(tok));
  if (out.empty()) throw ConfigError("config key '" + key + "' holds no values");
  return out;
}

std::vector<int> Config::get_int_list(const std::string& key) {
  std::vector<double> vals = get_double_list(key);
  std::vector<int> out;
  out.reserve(vals.size());
  for (double v : vals) {
    const double r = std::nearbyint(v);
    if (std::abs(v - r) > 1e-9 || std::abs(r) > 2147483647.0)
      throw ConfigError("config key '" + key + "' must hold integers");
    out.push_back(static_cast<int>(r));
  }
  return out;
}

void Config::reject_unknown() const {
  std::string bad;
  for (const auto& [key, value] : entries_) {
    if (touched_.count(key)) continue;
    if (!bad.empty()) bad += ", ";
    bad += key;
  }
  if (!bad.empty()) throw ConfigError("unknown config keys: " + bad);
}

}  // namespace frds
