#pragma once

#include <cstdint>
#include <string>

#include "aec/graph.hpp"

namespace aec {

/// splitmix64: the 64-bit mixer from Steele, Lea and Flood's SplittableRandom.
/// Fixed here so generated corpora are reproducible bit-for-bit across
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform-enough draw in [0, bound) by modulo; determinism is the point.
  uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

 private:
  uint64_t state_;
};

Graph make_k4();
Graph make_k33();
Graph make_path(int vertices);
Graph make_cycle(int vertices);
Graph make_star(int leaves);
Graph make_complete(int vertices);
Graph make_complete_bipartite(int a, int b);

/// Named families used by the CLI: k4, k33, path, cycle, star.
Graph make_named(const std::string& name, int n);

/// Bipartite graph with `a` left vertices of degree exactly 3 and 3a/delta
/// right vertices of degree exactly delta. Requires delta >= 4, delta | 3a
/// and a >= delta. K_{3,delta} is the smallest member (a = delta). Left
/// vertices come first, right vertices after.
Graph make_biregular_3_delta(int a, int delta);

struct Random3SparseParams {
  int n = 0;
  int delta_cap = 4;   // degree cap for the high-capacity pool
  int m_target = 0;
  uint64_t seed = 1;
  bool require_qualifying = true;
  int max_attempts = 64;
};

/// Random simple graph in which every edge touches a vertex of final degree
/// <= 3: the first 2n/3 vertices form a capacity-3 pool and every edge is
/// anchored there, the rest take up to delta_cap. Deterministic in the
/// seed. With require_qualifying the result is regenerated (bounded
/// attempts) until some edge xy has d(x)+d(y) < delta+3.
Graph make_random_3sparse(const Random3SparseParams& params);

}  // namespace aec
