#include "hallkit/support_map.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <string>

namespace hallkit {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  boost::hash_combine(seed, v);
  return seed;
}

std::size_t hash_int(const Int& x) { return boost::multiprecision::hash_value(x); }

SupportMap SupportMap::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SupportMap m;
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == e.first)
      m.entries_.back().second += e.second;
    else
      m.entries_.push_back(std::move(e));
    if (!m.entries_.empty() && m.entries_.back().second == 0) m.entries_.pop_back();
  }
  return m;
}

Int SupportMap::get(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Int(0);
}

void SupportMap::set(Index i, const Int& v) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    if (v == 0)
      entries_.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    entries_.insert(it, {i, v});
  }
}

void SupportMap::add(Index i, const Int& v) {
  if (v == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, {i, v});
  }
}

Index SupportMap::min_index() const {
  if (entries_.empty()) throw DomainError("min_index of empty support");
  return entries_.front().first;
}

Index SupportMap::max_index() const {
  if (entries_.empty()) throw DomainError("max_index of empty support");
  return entries_.back().first;
}

SupportMap SupportMap::shifted(Index k) const {
  SupportMap r;
  r.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) r.entries_.emplace_back(checked_add(i, k, "shifted index"), v);
  return r;
}

SupportMap SupportMap::negated() const {
  SupportMap r;
  r.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) r.entries_.emplace_back(i, Int(-v));
  return r;
}

SupportMap SupportMap::plus(const SupportMap& o) const {
  SupportMap r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      Int s = a->second + b->second;
      if (s != 0) r.entries_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return r;
}

Int SupportMap::mass() const {
  Int m = 0;
  for (const auto& [i, v] : entries_) m += abs_int(v);
  return m;
}

int SupportMap::compare(const SupportMap& o) const {
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end() && b != o.entries_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    if (a->second != b->second) return a->second < b->second ? -1 : 1;
  }
  if (a != entries_.end()) return 1;
  if (b != o.entries_.end()) return -1;
  return 0;
}

std::size_t SupportMap::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [i, v] : entries_) {
    h = hash_combine(h, static_cast<std::size_t>(i));
    h = hash_combine(h, hash_int(v));
  }
  return h;
}

void SupportMap::append_key(std::string& out) const {
  for (const auto& [i, v] : entries_) {
    out += std::to_string(i);
    out += ':';
    out += v.str();
    out += ',';
  }
  out += ';';
}

}
