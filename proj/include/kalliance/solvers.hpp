#pragma once

#include <climits>
#include <cstdint>
#include <optional>

#include "kalliance/alliances.hpp"
#include "kalliance/graph.hpp"
#include "kalliance/rational.hpp"

namespace kalliance {

struct SolverOptions {
  /// Search nodes per solve, shared by all workers. Exceeding it returns the
  /// best verified witness with exact = false.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  /// partition_number starts its downward scan at the least closed-form upper
  /// bound instead of floor(n / smallest block).
  bool seed_with_bounds = true;
};

/// Exact search outcome. `value` is absent when no feasible object exists.
/// Witnesses always pass the matching predicate from alliances.hpp.
struct SolveResult {
  std::optional<std::int64_t> value;
  std::optional<VertexSet> set;
  std::optional<Partition> partition;
  std::uint64_t nodes_explored = 0;
  bool exact = true;
};

struct IsoResult {
  Rational value;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  bool exact = true;
};

/// Block size window applied by find_partition.
struct PartitionConstraints {
  int min_block_size = 1;
  int max_block_size = INT_MAX;
};

/// Largest vertex count the exact searches accept.
inline constexpr int kMaxExactOrder = 64;

/// Minimum size of a (global) defensive k-alliance. The witness is the
/// lexicographically least set of that size.
SolveResult alliance_number(const Graph& g, int k, bool global, const SolverOptions& options = {});

/// Minimum dominating set.
SolveResult domination_number(const Graph& g, const SolverOptions& options = {});

/// Maximum number of blocks in a partition into (global) defensive
/// k-alliances. The witness is the first such partition in restricted-growth
/// order. Absent when k exceeds the minimum degree.
SolveResult partition_number(const Graph& g, int k, bool global, const SolverOptions& options = {});

/// First partition (restricted-growth order) into exactly r blocks that are
/// all alliances of the given kind and respect the size window.
SolveResult find_partition(const Graph& g, AllianceKind kind, int r, PartitionConstraints constraints = {},
                           const SolverOptions& options = {});

/// Minimum number of cross-block edges over partitions into exactly r >= 2
/// global defensive k-alliances.
SolveResult min_cut_partition(const Graph& g, int k, int r, const SolverOptions& options = {});

/// Exact min |boundary(S)| / |S| over nonempty S with |S| <= n/2. Among
/// optimal sets the smallest, then lexicographically least, is returned.
IsoResult isoperimetric_number(const Graph& g, const SolverOptions& options = {});

/// Minimum cut over sets of size floor(n/2).
SolveResult bipartition_width(const Graph& g, const SolverOptions& options = {});

/// A bisection whose two sides are both global defensive k-alliances. The
/// value is 2 when one exists.
SolveResult alliance_bisection(const Graph& g, int k, const SolverOptions& options = {});

}  // namespace kalliance
