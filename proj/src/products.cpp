#include "kalliance/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kalliance/alliances.hpp"
#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

VertexSet cross(const Graph& g1, const VertexSet& a, const Graph& g2, const VertexSet& b) {
  VertexSet out(g1.order() * g2.order());
  for (Vertex u : a.members()) {
    for (Vertex v : b.members()) out.insert(product_vertex(g2, u, v));
  }
  return out;
}

void check_partition(const Graph& product, const Partition& p, AllianceKind kind) {
  if (!is_alliance_partition(product, p, kind)) {
    throw std::logic_error("product construction produced a block that fails the alliance predicate");
  }
}

}  // namespace

FactorPartition::FactorPartition(const Graph& graph, Partition partition, int k, bool global)
    : graph_(&graph), partition_(std::move(partition)), k_(k), global_(global) {
  if (partition_.universe() != graph.order()) throw InputError("factor partition has the wrong universe");
  if (!is_alliance_partition(graph, partition_, {k, global})) {
    throw InputError(std::string("factor partition block is not a ") + (global ? "global " : "") + "defensive " +
                     std::to_string(k) + "-alliance");
  }
}

VertexSet product_alliance(const Graph& g1, const VertexSet& s1, int k1, const Graph& g2, const VertexSet& s2, int k2) {
  if (s1.universe() != g1.order() || s2.universe() != g2.order()) throw InputError("factor set universe mismatch");
  if (s1.empty() || !is_defensive_alliance(g1, s1, k1)) {
    throw InputError("first factor set is not a defensive " + std::to_string(k1) + "-alliance");
  }
  if (s2.empty() || !is_defensive_alliance(g2, s2, k2)) {
    throw InputError("second factor set is not a defensive " + std::to_string(k2) + "-alliance");
  }
  VertexSet x = cross(g1, s1, g2, s2);
  const Graph product = cartesian_product(g1, g2);
  if (!is_defensive_alliance(product, x, k1 + k2)) {
    throw std::logic_error("product alliance fails the predicate");
  }
  return x;
}

Partition product_partition(const FactorPartition& f1, const FactorPartition& f2) {
  const Graph& g1 = f1.graph();
  const Graph& g2 = f2.graph();
  std::vector<VertexSet> blocks;
  blocks.reserve(static_cast<std::size_t>(f1.blocks()) * f2.blocks());
  for (const auto& a : f1.partition().blocks()) {
    for (const auto& b : f2.partition().blocks()) blocks.push_back(cross(g1, a, g2, b));
  }
  Partition p(g1.order() * g2.order(), std::move(blocks));
  check_partition(cartesian_product(g1, g2), p, {f1.k() + f2.k(), false});
  return p;
}

Partition global_product_partition(const FactorPartition& f, const Graph& second, int k_second) {
  if (!f.global()) throw InputError("global product partition needs a global factor partition");
  if (k_second > second.min_degree()) {
    throw InputError("k for the unpartitioned factor must not exceed its minimum degree");
  }
  const Graph& first = f.graph();
  const VertexSet all = VertexSet::full(second.order());
  std::vector<VertexSet> blocks;
  for (const auto& a : f.partition().blocks()) blocks.push_back(cross(first, a, second, all));
  Partition p(first.order() * second.order(), std::move(blocks));
  check_partition(cartesian_product(first, second), p, {f.k() + k_second, true});
  return p;
}

Partition global_product_partition(const Graph& first, int k_first, const FactorPartition& f) {
  if (!f.global()) throw InputError("global product partition needs a global factor partition");
  if (k_first > first.min_degree()) {
    throw InputError("k for the unpartitioned factor must not exceed its minimum degree");
  }
  const Graph& second = f.graph();
  const VertexSet all = VertexSet::full(first.order());
  std::vector<VertexSet> blocks;
  for (const auto& b : f.partition().blocks()) blocks.push_back(cross(first, all, second, b));
  Partition p(first.order() * second.order(), std::move(blocks));
  check_partition(cartesian_product(first, second), p, {k_first + f.k(), true});
  return p;
}

ShiftedCertificates shifted_k_certificates(const Graph& g1, const Graph& g2, int k, int s,
                                           const SolverOptions& options) {
  const int lo = std::max(g1.max_degree(), g2.max_degree());
  const int hi = g1.max_degree() + g2.max_degree() + k;
  if (s < lo || s > hi) {
    throw InputError("shift s=" + std::to_string(s) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const Graph product = cartesian_product(g1, g2);
  const int shifted = k - s;
  const int n1 = g1.order();
  const int n2 = g2.order();

  ShiftedCertificates out;
  out.k = k;
  out.s = s;
  bool ok = true;

  const auto a1 = alliance_number(g1, k, false, options);
  const auto a2 = alliance_number(g2, k, false, options);
  out.exact = a1.exact && a2.exact;
  if (a1.set) {
    out.from_first = cross(g1, *a1.set, g2, VertexSet(n2, {0}));
    ok = ok && is_defensive_alliance(product, *out.from_first, shifted);
  }
  if (a2.set) {
    out.from_second = cross(g1, VertexSet(n1, {0}), g2, *a2.set);
    ok = ok && is_defensive_alliance(product, *out.from_second, shifted);
  }
  if (a1.value || a2.value) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    if (a1.value) best = std::min(best, *a1.value);
    if (a2.value) best = std::min(best, *a2.value);
    out.a_upper = best;
  }

  const auto p1 = k <= g1.min_degree() ? partition_number(g1, k, false, options) : SolveResult{};
  const auto p2 = k <= g2.min_degree() ? partition_number(g2, k, false, options) : SolveResult{};
  out.exact = out.exact && p1.exact && p2.exact;
  if (p1.partition) {
    std::vector<VertexSet> blocks;
    for (const auto& b : p1.partition->blocks()) {
      for (Vertex v = 0; v < n2; ++v) blocks.push_back(cross(g1, b, g2, VertexSet(n2, {v})));
    }
    out.partition_from_first = Partition(n1 * n2, std::move(blocks));
    ok = ok && is_alliance_partition(product, *out.partition_from_first, {shifted, false});
  }
  if (p2.partition) {
    std::vector<VertexSet> blocks;
    for (const auto& b : p2.partition->blocks()) {
      for (Vertex u = 0; u < n1; ++u) blocks.push_back(cross(g1, VertexSet(n1, {u}), g2, b));
    }
    out.partition_from_second = Partition(n1 * n2, std::move(blocks));
    ok = ok && is_alliance_partition(product, *out.partition_from_second, {shifted, false});
  }
  if (p1.value || p2.value) {
    std::int64_t best = 0;
    if (p1.value) best = std::max(best, static_cast<std::int64_t>(n2) * *p1.value);
    if (p2.value) best = std::max(best, static_cast<std::int64_t>(n1) * *p2.value);
    out.psi_lower = best;
  }
  out.verified = ok && (out.from_first || out.from_second);
  return out;
}

}  // namespace kalliance
