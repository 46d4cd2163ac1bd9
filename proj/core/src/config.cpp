#include "hallkit/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool ConfigFile::has(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::string& ConfigFile::get(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw DomainError("config: missing key '" + std::string(key) + "'");
}

std::string ConfigFile::get_or(std::string_view key, std::string fallback) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return fallback;
}

long ConfigFile::get_long(std::string_view key, long fallback) const {
  if (!has(key)) return fallback;
  const std::string& v = get(key);
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty())
    throw DomainError("config: value of '" + std::string(key) + "' is not an integer: '" + v + "'");
  return out;
}

std::string ConfigFile::canonical() const {
  std::vector<std::pair<std::string, std::string>> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [k, v] : sorted) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::uint64_t ConfigFile::hash() const {
  // FNV-1a, 64-bit.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string ConfigFile::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile cfg;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::size_t hash_at = line.find('#');
    if (hash_at != std::string_view::npos) line = line.substr(0, hash_at);
    line = trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line has no '='", line_no);
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("config line has an empty key", line_no);
    if (cfg.has(key)) throw ParseError("config repeats key '" + key + "'", line_no);
    cfg.entries.emplace_back(std::move(key), std::move(value));
  }
  return cfg;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("config: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hallkit
