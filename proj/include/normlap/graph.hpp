#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normlap/error.hpp"

namespace normlap {

// Vertices are labeled 1..n everywhere in the public API.
using Vertex = int;

// Unordered edge stored with first < second.
struct Edge {
  Vertex u;
  Vertex v;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n. Immutable once built; obtain one
// through build_graph(), make_named() or the generators.
class Graph {
 public:
  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Edges sorted lexicographically, each with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Neighbors of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v - 1)];
  }

  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v - 1)].size());
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 1 || b < 1 || a > n_ || b > n_) return false;
    auto adj = neighbors(a);
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>>);

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (const Edge& e : edges_) {
      adjacency_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Validates and normalizes an edge list. Duplicates and self-loops are
// rejected, never silently dropped.
inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n < 2) {
    throw Error(ErrorCode::TooFewVertices,
                "graph needs at least 2 vertices, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside 1.." + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    }
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," +
                                              std::to_string(dup->v) +
                                              ") appears more than once");
  }
  return Graph(n, std::move(edges));
}

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

struct DegreeSequence {
  std::vector<int> per_vertex;  // index i holds the degree of vertex i+1
  std::vector<int> sorted;      // non-increasing

  int max() const { return sorted.empty() ? 0 : sorted.front(); }
};

inline DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.per_vertex.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) ds.per_vertex.push_back(g.degree(v));
  ds.sorted = ds.per_vertex;
  std::sort(ds.sorted.begin(), ds.sorted.end(), std::greater<>());
  return ds;
}

// Breadth-first search from vertex 1.
inline bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue{1};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (!seen[static_cast<std::size_t>(w - 1)]) {
        seen[static_cast<std::size_t>(w - 1)] = 1;
        queue.push_back(w);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

struct GraphClass {
  bool bipartite = false;
  bool complete = false;
  bool tree = false;
};

inline GraphClass classify(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "classify requires a connected graph");
  }
  const long long n = g.order();
  const long long m = static_cast<long long>(g.size());
  GraphClass cls;
  cls.complete = (m == n * (n - 1) / 2);
  cls.tree = (m == n - 1);

  // 2-coloring by BFS; connected, so one root suffices.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{1};
  color[0] = 0;
  cls.bipartite = true;
  for (std::size_t head = 0; head < queue.size() && cls.bipartite; ++head) {
    const Vertex v = queue[head];
    const int cv = color[static_cast<std::size_t>(v - 1)];
    for (Vertex w : g.neighbors(v)) {
      int& cw = color[static_cast<std::size_t>(w - 1)];
      if (cw < 0) {
        cw = 1 - cv;
        queue.push_back(w);
      } else if (cw == cv) {
        cls.bipartite = false;
        break;
      }
    }
  }
  return cls;
}

enum class NamedFamily { path, cycle, star, complete, complete_bipartite };

// Canonical labeled constructions. `size` is the vertex count for every
// family except complete_bipartite, where it is the first part size and
// `second` the other (K_{size,second}, parts {1..size} and the rest).
// The star on `size` vertices is centered at vertex 1.
inline Graph make_named(NamedFamily kind, int size, int second = 0) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  auto too_small = [](const char* family, int minimum) {
    return Error(ErrorCode::SizeTooSmall, std::string(family) + " needs size >= " +
                                              std::to_string(minimum));
  };
  switch (kind) {
    case NamedFamily::path:
      if (size < 2) throw too_small("path", 2);
      for (Vertex v = 1; v < size; ++v) pairs.emplace_back(v, v + 1);
      return build_graph(size, pairs);
    case NamedFamily::cycle:
      if (size < 3) throw too_small("cycle", 3);
      for (Vertex v = 1; v < size; ++v) pairs.emplace_back(v, v + 1);
      pairs.emplace_back(1, size);
      return build_graph(size, pairs);
    case NamedFamily::star:
      if (size < 2) throw too_small("star", 2);
      for (Vertex v = 2; v <= size; ++v) pairs.emplace_back(1, v);
      return build_graph(size, pairs);
    case NamedFamily::complete:
      if (size < 2) throw too_small("complete", 2);
      for (Vertex a = 1; a <= size; ++a)
        for (Vertex b = a + 1; b <= size; ++b) pairs.emplace_back(a, b);
      return build_graph(size, pairs);
    case NamedFamily::complete_bipartite:
      if (size < 1 || second < 1) throw too_small("complete_bipartite parts", 1);
      for (Vertex a = 1; a <= size; ++a)
        for (Vertex b = size + 1; b <= size + second; ++b) pairs.emplace_back(a, b);
      return build_graph(size + second, pairs);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown named family");
}

}  // namespace normlap
