#pragma once
#include <optional>
#include <unordered_map>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

// Breadth-first enumeration over the generating set {t, t^-1, a_0, a_0^-1},
// expanded in that fixed order, so element order is deterministic and the BFS
// depth of an element is its word norm.
struct Ball {
  std::vector<GroupElement> elements;  // BFS order; elements[0] is 1
  std::vector<int> norms;              // parallel to elements
  std::unordered_map<std::string, std::size_t> index_of;  // key -> position

  std::optional<std::size_t> find(const GroupElement& g) const;
};

Ball enumerate_ball(const SpecHandle& spec, int radius);

// Word norm of g by bidirectional-free plain BFS up to radius_cap; nullopt if
// the ball of that radius does not contain g.
std::optional<int> word_norm(const GroupElement& g, int radius_cap);

}
