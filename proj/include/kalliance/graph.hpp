#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kalliance {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of {0, ..., n-1}. The universe size is fixed at construction so that
/// complements are well defined.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet full(int universe);
  /// Only valid for universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  Vertex min() const;  ///< -1 when empty

  VertexSet complement() const;
  std::vector<Vertex> members() const;
  /// Only valid for universe <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic order on the sorted member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

 private:
  void check(Vertex v) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Blocks are disjoint, nonempty, cover the universe, and are kept sorted by
/// their minimum vertex.
class Partition {
 public:
  Partition() = default;
  Partition(int universe, std::vector<VertexSet> blocks);
  /// Build from a block index per vertex. Indices need not be contiguous.
  static Partition from_assignment(std::span<const int> block_of);

  int universe() const noexcept { return universe_; }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  const VertexSet& operator[](std::size_t i) const { return blocks_[i]; }
  int block_of(Vertex v) const;
  int min_block_size() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int universe_ = 0;
  std::vector<VertexSet> blocks_;
};

/// Immutable undirected simple graph.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError for out-of-range endpoints, self-loops, or repeated pairs.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return max_degree_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Neighbour bitmask; only available when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }
  bool has_masks() const noexcept { return n_ <= 64; }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  bool is_regular() const noexcept { return min_degree_ == max_degree_; }

 private:
  int n_ = 0;
  int m_ = 0;
  int min_degree_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::string> labels_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

bool is_connected(const Graph& g);

/// Vertex (u, v) of the product maps to u * g2.order() + v.
Graph cartesian_product(const Graph& g1, const Graph& g2);

inline Vertex product_vertex(const Graph& g2, Vertex u, Vertex v) { return u * g2.order() + v; }

/// Number of edges of the subgraph induced by s.
int induced_size(const Graph& g, const VertexSet& s);

/// "{0,3,5}"
std::string to_string(const VertexSet& s);
/// "{0,1} {2,3}"
std::string to_string(const Partition& p);

}  // namespace kalliance
