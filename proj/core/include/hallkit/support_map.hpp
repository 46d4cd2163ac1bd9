#pragma once
#include <utility>
#include <vector>

#include "hallkit/int_types.hpp"

namespace hallkit {

// Finitely supported map Index -> Int, kept sorted by index with no zero
// values.  Backs a-parts, c-parts, wreath base vectors and Laurent
// coefficient lists.
class SupportMap {
 public:
  using Entry = std::pair<Index, Int>;
  using const_iterator = std::vector<Entry>::const_iterator;

  SupportMap() = default;
  // Collapses duplicates and drops zeros.
  static SupportMap from_entries(std::vector<Entry> entries);

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Int get(Index i) const;
  void set(Index i, const Int& v);
  void add(Index i, const Int& v);

  // Smallest / largest support index; DomainError when empty.
  Index min_index() const;
  Index max_index() const;

  SupportMap shifted(Index k) const;     // index i -> i + k
  SupportMap negated() const;            // value-wise minus
  SupportMap plus(const SupportMap& o) const;

  Int mass() const;                      // sum of |value|

  bool operator==(const SupportMap& o) const { return entries_ == o.entries_; }
  bool operator!=(const SupportMap& o) const { return !(*this == o); }
  // Lexicographic on the entry list; a total order used for canonical
  // element ordering.
  int compare(const SupportMap& o) const;

  std::size_t hash() const;
  // Compact unambiguous serialization, usable as a hash key.
  void append_key(std::string& out) const;

 private:
  std::vector<Entry> entries_;
};

}
