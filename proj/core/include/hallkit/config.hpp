#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hallkit {

// Flat key=value experiment configuration.  '#' starts a comment, blank
// lines are skipped, keys must be unique.  The hash is FNV-1a over the
// canonical form (entries sorted by key, one "key=value" per line), so two
// files differing only in comments, spacing, or entry order hash alike --
// and identical hashes promise byte-identical experiment output.
struct ConfigFile {
  std::vector<std::pair<std::string, std::string>> entries;  // file order

  bool has(std::string_view key) const;
  const std::string& get(std::string_view key) const;  // DomainError when missing
  std::string get_or(std::string_view key, std::string fallback) const;
  long get_long(std::string_view key, long fallback) const;

  std::string canonical() const;
  std::uint64_t hash() const;
  std::string hash_hex() const;  // 16 lowercase hex digits
};

// ParseError carries the 1-based line number of the offending line.
ConfigFile parse_config(std::string_view text);
ConfigFile load_config(const std::string& path);  // DomainError when unreadable

}  // namespace hallkit
