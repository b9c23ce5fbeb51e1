#include "kalliance/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw InputError("negative universe size");
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > kWordBits) throw InputError("mask form needs universe <= 64");
  if (universe < kWordBits && (mask >> universe) != 0) throw InputError("mask has bits outside universe");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

Vertex VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  }
  return -1;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  if (universe_ % kWordBits != 0 && !c.words_.empty()) {
    c.words_.back() &= (std::uint64_t{1} << (universe_ % kWordBits)) - 1;
  }
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > kWordBits) throw InputError("mask form needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Partition::Partition(int universe, std::vector<VertexSet> blocks) : universe_(universe), blocks_(std::move(blocks)) {
  VertexSet seen(universe);
  for (const auto& b : blocks_) {
    if (b.universe() != universe) throw InputError("partition block has a different universe");
    if (b.empty()) throw InputError("partition block is empty");
    for (Vertex v : b.members()) {
      if (seen.contains(v)) throw InputError("vertex " + std::to_string(v) + " appears in two blocks");
      seen.insert(v);
    }
  }
  if (seen.size() != universe) throw InputError("partition does not cover every vertex");
  std::sort(blocks_.begin(), blocks_.end(), [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
}

Partition Partition::from_assignment(std::span<const int> block_of) {
  const int n = static_cast<int>(block_of.size());
  std::vector<int> ids(block_of.begin(), block_of.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<VertexSet> blocks(ids.size(), VertexSet(n));
  for (Vertex v = 0; v < n; ++v) {
    auto idx = std::lower_bound(ids.begin(), ids.end(), block_of[v]) - ids.begin();
    blocks[idx].insert(v);
  }
  return Partition(n, std::move(blocks));
}

int Partition::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(v)) return static_cast<int>(i);
  }
  throw InputError("vertex " + std::to_string(v) + " not in partition");
}

int Partition::min_block_size() const {
  int best = universe_;
  for (const auto& b : blocks_) best = std::min(best, b.size());
  return best;
}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), m_(static_cast<int>(edges.size())), adjacency_(n), labels_(std::move(labels)) {
  if (n < 0) throw InputError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) throw InputError("label count differs from n");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw InputError("edge (" + std::to_string(std::min(v, *dup)) + "," + std::to_string(std::max(v, *dup)) +
                       ") repeated");
    }
  }
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(adjacency_.begin(), adjacency_.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    min_degree_ = static_cast<int>(lo->size());
    max_degree_ = static_cast<int>(hi->size());
  }
  if (n <= 64) {
    masks_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : adjacency_[v]) masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw InputError("cartesian product needs nonempty factors");
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * g2.size() + static_cast<std::size_t>(n2) * g1.size());
  for (Vertex u = 0; u < n1; ++u) {
    for (auto [a, b] : g2.edges()) edges.emplace_back(u * n2 + a, u * n2 + b);
  }
  for (auto [a, b] : g1.edges()) {
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(a * n2 + v, b * n2 + v);
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n1) * n2);
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < n2; ++v) labels.push_back("(" + g1.label(u) + "," + g2.label(v) + ")");
  }
  return Graph(n1 * n2, edges, std::move(labels));
}

int induced_size(const Graph& g, const VertexSet& s) {
  int twice = 0;
  for (Vertex v : s.members()) {
    for (Vertex u : g.neighbors(v)) twice += s.contains(u) ? 1 : 0;
  }
  return twice / 2;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Partition& p) {
  std::string out;
  for (const auto& b : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += to_string(b);
  }
  return out;
}

}  // namespace kalliance
