#pragma once

#include <cstdint>
#include <vector>

#include "kalliance/graph.hpp"

namespace kalliance {

/// Protection level k plus whether domination is also required.
struct AllianceKind {
  int k = 0;
  bool global = false;
};

/// |N(v) ∩ s|
int degree_in(const Graph& g, Vertex v, const VertexSet& s);

/// Every v in s has at least k more neighbours inside s than outside.
/// Throws InputError for an empty s.
bool is_defensive_alliance(const Graph& g, const VertexSet& s, int k);

bool is_dominating(const Graph& g, const VertexSet& s);

bool is_global_defensive_alliance(const Graph& g, const VertexSet& s, int k);

bool is_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

/// Every block of p is a (global) defensive k-alliance.
bool is_alliance_partition(const Graph& g, const Partition& p, AllianceKind kind);

struct CutEdges {
  std::int64_t total = 0;
  /// pairwise[i][j] = number of edges between block i and block j (symmetric, zero diagonal).
  std::vector<std::vector<std::int64_t>> pairwise;
};

CutEdges cut_edges(const Graph& g, const Partition& p);

/// Shift k to the value with the same alliances when parity forces it:
/// all degrees even and k odd, or all degrees odd and k even, give k + 1.
int canonical_k(const Graph& g, int k);

}  // namespace kalliance
