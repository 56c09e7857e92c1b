#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normlap/error.hpp"
#include "normlap/graph.hpp"

namespace normlap {

// Seeded generator used by every random constructor. The engine is
// std::mt19937_64, whose output sequence is fixed by the C++ standard; the
// conversions below are written out because the std:: distributions are
// implementation-defined and would make experiments platform dependent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double q) { return uniform01() < q; }

  // Uniform on [0, bound), rejection sampling without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kDefaultMaxRetries = 10000;

// G(n, q) with rejection of disconnected samples. Edges are tested in the
// order (1,2), (1,3), ..., (n-1,n), one Bernoulli draw each.
inline Graph generate_er_connected(int n, double q, std::uint64_t seed,
                                   int max_retries = kDefaultMaxRetries) {
  if (n < 2) {
    throw Error(ErrorCode::TooFewVertices, "ER graph needs n >= 2");
  }
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "edge probability must be in (0, 1]");
  }
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    pairs.clear();
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b)
        if (rng.bernoulli(q)) pairs.emplace_back(a, b);
    if (pairs.size() + 1 < static_cast<std::size_t>(n)) continue;
    Graph g = build_graph(n, pairs);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no connected G(" + std::to_string(n) + ", " + std::to_string(q) +
                  ") sample after " + std::to_string(max_retries) + " attempts");
}

// Standard Prüfer decode: repeatedly join the smallest-labeled leaf to the
// head of the remaining sequence. Entries are 1-based labels in 1..n.
inline Graph prufer_decode(int n, std::span<const Vertex> sequence) {
  if (n < 2) {
    throw Error(ErrorCode::TooFewVertices, "tree needs n >= 2");
  }
  if (sequence.size() != static_cast<std::size_t>(n - 2)) {
    throw Error(ErrorCode::InvalidArgument,
                "Prüfer sequence for n=" + std::to_string(n) + " must have length " +
                    std::to_string(n - 2));
  }
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
  for (Vertex x : sequence) {
    if (x < 1 || x > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "Prüfer entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex head : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    pairs.emplace_back(leaf, head);
    if (--degree[static_cast<std::size_t>(head)] == 1) leaves.push(head);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  pairs.emplace_back(a, leaves.top());
  return build_graph(n, pairs);
}

// Uniform random labeled tree via a uniform Prüfer sequence.
inline Graph generate_random_tree(int n, std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::TooFewVertices, "tree needs n >= 2");
  }
  Rng rng(seed);
  std::vector<Vertex> sequence(static_cast<std::size_t>(n - 2));
  for (Vertex& x : sequence)
    x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))) + 1;
  return prufer_decode(n, sequence);
}

}  // namespace normlap
