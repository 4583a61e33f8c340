#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace kglab {

// Flat key=value configuration. Keys are dotted (solver.dt), '#' starts a
// comment, blank lines are ignored. Later assignments override earlier ones.
class Config {
 public:
  static Config parse(std::istream& in, const std::string& origin = "<stream>");
  static Config parse_string(const std::string& text);
  static Config load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  // Keys present here but absent from `known`, sorted.
  std::vector<std::string> unknown_keys(const std::set<std::string>& known) const;

  // Sorted key=value lines; the hash is taken over this text.
  std::string canonical() const;
  std::uint64_t hash() const;
  std::string hash_hex() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

std::uint64_t fnv1a64(const std::string& text);

}  // namespace kglab
