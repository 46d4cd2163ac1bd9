#include "hallkit/ball.hpp"

#include "hallkit/errors.hpp"

namespace hallkit {

namespace {

std::vector<GroupElement> standard_generators(const SpecHandle& spec) {
  return {gen_t(spec, 1), gen_t(spec, -1), gen_a(spec, 0, 1), gen_a(spec, 0, -1)};
}

}  // namespace

std::optional<std::size_t> Ball::find(const GroupElement& g) const {
  auto it = index_of.find(g.key());
  if (it == index_of.end()) return std::nullopt;
  return it->second;
}

Ball enumerate_ball(const SpecHandle& spec, int radius) {
  if (radius < 0) throw DomainError("ball radius must be >= 0");
  Ball ball;
  auto gens = standard_generators(spec);
  ball.elements.push_back(identity(spec));
  ball.norms.push_back(0);
  ball.index_of.emplace(ball.elements[0].key(), 0);
  std::size_t frontier_begin = 0;
  for (int depth = 1; depth <= radius; ++depth) {
    std::size_t frontier_end = ball.elements.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& gen : gens) {
        GroupElement next = multiply(ball.elements[i], gen);
        std::string key = next.key();
        if (ball.index_of.find(key) != ball.index_of.end()) continue;
        ball.index_of.emplace(std::move(key), ball.elements.size());
        ball.elements.push_back(std::move(next));
        ball.norms.push_back(depth);
      }
    }
    frontier_begin = frontier_end;
  }
  return ball;
}

std::optional<int> word_norm(const GroupElement& g, int radius_cap) {
  if (g.is_identity()) return 0;
  const SpecHandle& spec = g.spec();
  auto gens = standard_generators(spec);
  std::unordered_map<std::string, int> seen;
  std::vector<GroupElement> frontier{identity(spec)};
  seen.emplace(frontier[0].key(), 0);
  std::string target = g.key();
  for (int depth = 1; depth <= radius_cap; ++depth) {
    std::vector<GroupElement> next_frontier;
    for (const auto& e : frontier) {
      for (const auto& gen : gens) {
        GroupElement next = multiply(e, gen);
        std::string key = next.key();
        if (seen.find(key) != seen.end()) continue;
        if (key == target) return depth;
        seen.emplace(std::move(key), depth);
        next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

}
