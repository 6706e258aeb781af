#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.h"

namespace frds {

// Flat key=value configuration text. One assignment per line, '#' starts a
// comment, blank lines are ignored, duplicate keys are rejected. Numeric
// values accept the literals pi, 2pi, -pi, -2pi alongside ordinary floats.
//
// Getters record which keys a consumer understands; reject_unknown() then
// fails on anything present in the file that was never consulted, so typos
// surface as errors instead of silently falling back to defaults.
class Config {
public:
  static Config from_file(const std::string& path);
  static Config from_text(const std::string& text);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key);
  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key);
  double get_double(const std::string& key, double fallback);
  int get_int(const std::string& key);
  int get_int(const std::string& key, int fallback);
  std::vector<double> get_double_list(const std::string& key);
  std::vector<int> get_int_list(const std::string& key);

  void reject_unknown() const;

  static double parse_number(const std::string& token);

private:
  std::map<std::string, std::string> entries_;
  mutable std::set<std::string> touched_;

  const std::string* find(const std::string& key) const;
};

}  // namespace frds
