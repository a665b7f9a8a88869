#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "gauge/errors.hpp"

namespace gauge {

// Flat key=value text with [section] headers; '#' starts a comment.
class Config {
 public:
  static Config parse(std::istream& is);
  static Config parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  double get_real(const std::string& section, const std::string& key,
                  double fallback) const;
  long get_int(const std::string& section, const std::string& key,
               long fallback) const;

  void set(const std::string& section, const std::string& key,
           const std::string& value);

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace gauge
