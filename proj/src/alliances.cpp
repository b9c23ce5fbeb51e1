#include "kalliance/alliances.hpp"

#include <stdexcept>

#include "kalliance/errors.hpp"

namespace kalliance {

int degree_in(const Graph& g, Vertex v, const VertexSet& s) {
  if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  int count = 0;
  for (Vertex u : g.neighbors(v)) count += s.contains(u) ? 1 : 0;
  return count;
}

bool is_defensive_alliance(const Graph& g, const VertexSet& s, int k) {
  if (s.empty()) throw InputError("an alliance must be nonempty");
  if (s.universe() != g.order()) throw InputError("vertex set belongs to a graph of different order");
  bool holds = true;
  for (Vertex v : s.members()) {
    const int inside = degree_in(g, v, s);
    const int outside = g.degree(v) - inside;
    const bool direct = inside >= outside + k;
    const bool by_degree = g.degree(v) >= 2 * outside + k;
    if (direct != by_degree) throw std::logic_error("alliance condition forms disagree");
    if (!direct) {
      holds = false;
      break;
    }
  }
  return holds;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set belongs to a graph of different order");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!s.contains(u) && degree_in(g, u, s) == 0) return false;
  }
  return true;
}

bool is_global_defensive_alliance(const Graph& g, const VertexSet& s, int k) {
  return is_defensive_alliance(g, s, k) && is_dominating(g, s);
}

bool is_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
  return kind.global ? is_global_defensive_alliance(g, s, kind.k) : is_defensive_alliance(g, s, kind.k);
}

bool is_alliance_partition(const Graph& g, const Partition& p, AllianceKind kind) {
  if (p.universe() != g.order()) throw InputError("partition belongs to a graph of different order");
  for (const auto& block : p.blocks()) {
    if (!is_alliance(g, block, kind)) return false;
  }
  return true;
}

CutEdges cut_edges(const Graph& g, const Partition& p) {
  if (p.universe() != g.order()) throw InputError("partition belongs to a graph of different order");
  std::vector<int> block_of(g.order());
  for (int i = 0; i < p.size(); ++i) {
    for (Vertex v : p[i].members()) block_of[v] = i;
  }
  CutEdges out;
  out.pairwise.assign(p.size(), std::vector<std::int64_t>(p.size(), 0));
  for (auto [u, v] : g.edges()) {
    const int a = block_of[u];
    const int b = block_of[v];
    if (a != b) {
      ++out.total;
      ++out.pairwise[a][b];
      ++out.pairwise[b][a];
    }
  }
  return out;
}

int canonical_k(const Graph& g, int k) {
  if (g.order() == 0) return k;
  bool all_even = true;
  bool all_odd = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 0) {
      all_odd = false;
    } else {
      all_even = false;
    }
  }
  const bool k_odd = (k % 2) != 0;
  if ((all_even && k_odd) || (all_odd && !k_odd)) return k + 1;
  return k;
}

}  // namespace kalliance
