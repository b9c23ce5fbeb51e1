#pragma once

#include <cstdint>
#include <optional>

#include "kalliance/graph.hpp"
#include "kalliance/solvers.hpp"

namespace kalliance {

/// A partition of one factor whose blocks are all (global) defensive
/// k-alliances. Construction validates every block.
class FactorPartition {
 public:
  FactorPartition(const Graph& graph, Partition partition, int k, bool global);

  const Graph& graph() const noexcept { return *graph_; }
  const Partition& partition() const noexcept { return partition_; }
  int k() const noexcept { return k_; }
  bool global() const noexcept { return global_; }
  int blocks() const noexcept { return partition_.size(); }
  /// Smallest block cardinality.
  int min_block() const { return partition_.min_block_size(); }

 private:
  const Graph* graph_;
  Partition partition_;
  int k_;
  bool global_;
};

/// s1 x s2, a defensive (k1 + k2)-alliance of cartesian_product(g1, g2).
/// Throws InputError if either factor set is not a defensive alliance.
VertexSet product_alliance(const Graph& g1, const VertexSet& s1, int k1, const Graph& g2, const VertexSet& s2, int k2);

/// All r1 * r2 blocks S_j x S_l; each is a defensive (k1 + k2)-alliance.
Partition product_partition(const FactorPartition& f1, const FactorPartition& f2);

/// Blocks S_j x V(second): a partition of first x second into global defensive
/// (k + k_second)-alliances. Requires f.global() and k_second <= delta(second).
Partition global_product_partition(const FactorPartition& f, const Graph& second, int k_second);

/// Blocks V(first) x S_l, the same construction with the partitioned factor on the right.
Partition global_product_partition(const Graph& first, int k_first, const FactorPartition& f);

/// Certificates that shifting k by s on a product keeps factor alliances:
/// S x {v} and {u} x S are defensive (k - s)-alliances for
/// max(Delta1, Delta2) <= s <= Delta1 + Delta2 + k.
struct ShiftedCertificates {
  int k = 0;
  int s = 0;
  /// S1 x {0} from a minimum k-alliance S1 of g1, when one exists.
  std::optional<VertexSet> from_first;
  /// {0} x S2.
  std::optional<VertexSet> from_second;
  /// psi_k(g1)-partition x singletons of g2: n2 * psi_k(g1) blocks.
  std::optional<Partition> partition_from_first;
  std::optional<Partition> partition_from_second;
  /// min(|S1|, |S2|) over the available sides; upper bound on a_{k-s}(product).
  std::optional<std::int64_t> a_upper;
  /// max(n2 psi_k(g1), n1 psi_k(g2)); lower bound on psi_{k-s}(product).
  std::optional<std::int64_t> psi_lower;
  /// Every certificate passed the predicate on the product.
  bool verified = false;
  /// Factor solves finished without hitting the budget.
  bool exact = true;
};

ShiftedCertificates shifted_k_certificates(const Graph& g1, const Graph& g2, int k, int s,
                                           const SolverOptions& options = {});

}  // namespace kalliance
